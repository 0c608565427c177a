// Command-line harness: build and query term indexes, generate synthetic
// vocabularies, and run the retrieval / indexing benchmarks.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tbi/bench.hpp"
#include "tbi/corpus.hpp"
#include "tbi/counter.hpp"
#include "tbi/errors.hpp"
#include "tbi/snapshot.hpp"
#include "tbi/tbi_index.hpp"
#include "tbi/term.hpp"
#include "tbi/vanilla_index.hpp"

namespace {

using namespace tbi;

// Thrown by command handlers for data-level failures (exit code 2).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Term> load_terms(const std::string& path) {
    const LoadResult loaded = load_vocabulary(std::filesystem::path(path));
    if (loaded.duplicate_count > 0 || loaded.skipped_count > 0) {
        std::cerr << "loaded " << loaded.terms.size() << " terms (" << loaded.duplicate_count
                  << " duplicates dropped, " << loaded.skipped_count << " lines skipped)\n";
    }
    if (loaded.terms.empty()) throw DataError("no usable terms in " + path);
    return loaded.terms;
}

Term parse_query(const std::string& raw) {
    if (!is_valid_utf8(raw)) throw DataError("query is not valid UTF-8");
    const auto term = Term::normalize(raw);
    if (!term) throw DataError("query is empty after normalization");
    return *term;
}

struct BuildArgs {
    std::string vocab_path;
    std::string algorithm = "tbi";
    std::string out_path;
};

void cmd_build(const BuildArgs& args) {
    const std::vector<Term> vocab = load_terms(args.vocab_path);
    const auto start = std::chrono::steady_clock::now();
    RelationTable table;
    if (args.algorithm == "vanilla") {
        table = VanillaHashIndex::build(vocab).relation_table();
    } else {
        table = TbiIndex::build(vocab).relation_table();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::size_t relations = 0;
    for (const auto& [term, supers] : table) relations += supers.size();
    std::printf("indexed %zu terms (%zu relations) in %.3f s (algorithm=%s)\n", table.size(),
                relations, elapsed.count(), args.algorithm.c_str());
    if (!args.out_path.empty()) {
        write_snapshot(table, args.out_path);
        std::printf("snapshot written to %s\n", args.out_path.c_str());
    }
}

struct QueryArgs {
    std::string snapshot_path;
    std::string direction;
    std::string query;
};

void cmd_query(const QueryArgs& args) {
    const TbiIndex index =
        TbiIndex::from_relation_table(read_snapshot(std::filesystem::path(args.snapshot_path)));
    const Term query = parse_query(args.query);
    ComparisonCounter counter;
    std::vector<Term> results;
    if (args.direction == "super") {
        auto supers = index.super_terms_of(query, counter);
        if (!supers) throw DataError("NotInVocabulary: '" + query.text() + "'");
        results = std::move(*supers);
    } else {
        results = index.nested_terms_of(query, counter);
    }
    for (const Term& t : results) std::cout << t.text() << "\n";
    std::cout << "probes=" << counter.probes() << "\n";
}

struct RetrievalArgs {
    std::string vocab_path;
    std::vector<std::string> systems = {"tbi", "word_trie", "aho_corasick"};
    std::string query_source = "vocab";
    std::string queries_path;
    std::size_t sample_size = 0;  // 0: min(1000, vocabulary size)
    std::uint64_t seed = 42;
    std::string format = "table";
};

void cmd_bench_retrieval(const RetrievalArgs& args) {
    const std::vector<Term> vocab = load_terms(args.vocab_path);
    RetrievalBenchOptions options;
    options.systems.clear();
    for (const std::string& name : args.systems) {
        const auto kind = system_from_name(name);
        if (!kind) throw DataError("unknown system: " + name);
        options.systems.push_back(*kind);
    }
    options.sample_size =
        args.sample_size == 0 ? std::min<std::size_t>(1000, vocab.size()) : args.sample_size;
    options.seed = args.seed;
    options.dataset_id = args.vocab_path;
    if (args.query_source == "file") {
        if (args.queries_path.empty())
            throw DataError("--queries required with query source 'file'");
        options.external_queries = load_terms(args.queries_path);
    }
    const std::vector<BenchReport> reports = run_retrieval_bench(vocab, options);
    if (args.format == "json") {
        for (const BenchReport& r : reports) std::cout << report_to_json(r) << "\n";
    } else {
        std::cout << format_report_table(reports);
    }
}

struct IndexBenchArgs {
    std::string vocab_path;
    int repetitions = 3;
    std::string format = "table";
};

void cmd_bench_index(const IndexBenchArgs& args) {
    const std::vector<Term> vocab = load_terms(args.vocab_path);
    IndexBenchOptions options;
    options.repetitions = args.repetitions;
    options.dataset_id = args.vocab_path;
    const IndexBenchResult result = run_index_bench(vocab, options);
    const BenchReport rows[] = {result.vanilla, result.tbi};
    if (args.format == "json") {
        for (const BenchReport& r : rows) std::cout << report_to_json(r) << "\n";
    } else {
        std::cout << format_report_table(rows);
    }
    std::printf("reduction=%.1f%% (tbi vs vanilla)\n", result.reduction_percent);
}

void cmd_stats(const std::string& vocab_path) {
    const std::vector<Term> vocab = load_terms(vocab_path);
    std::cout << stats_to_json(compute_stats(vocab)) << "\n";
}

struct GenerateArgs {
    std::string out_path;
    GeneratorSpec spec = brown_like_spec(0, 42);
};

void cmd_generate(const GenerateArgs& args) {
    const std::vector<Term> vocab = generate_vocabulary(args.spec);
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + args.out_path);
    for (const Term& t : vocab) out << t.text() << "\n";
    if (!out) throw IoError("write error: " + args.out_path);
    std::printf("generated %zu terms to %s\n", vocab.size(), args.out_path.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tbi - build, query and benchmark super/nested term indexes"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "build an index and optionally write a snapshot");
    build->add_option("--vocab", build_args.vocab_path, "vocabulary file, one term per line")
        ->required();
    build->add_option("--algorithm", build_args.algorithm, "indexing algorithm")
        ->check(CLI::IsMember({"tbi", "vanilla"}));
    build->add_option("--out", build_args.out_path, "snapshot output path");
    build->callback([&] { cmd_build(build_args); });

    QueryArgs query_args;
    CLI::App* query = app.add_subcommand("query", "query a snapshot for super or nested terms");
    query->add_option("--snapshot", query_args.snapshot_path, "snapshot file")->required();
    query->add_option("--direction", query_args.direction, "retrieval direction")
        ->required()
        ->check(CLI::IsMember({"super", "nested"}));
    query->add_option("query", query_args.query, "query term")->required();
    query->callback([&] { cmd_query(query_args); });

    RetrievalArgs retrieval_args;
    CLI::App* bench_retrieval = app.add_subcommand(
        "bench-retrieval", "average node comparisons per retrieval, per system");
    bench_retrieval->add_option("--vocab", retrieval_args.vocab_path, "vocabulary file")
        ->required();
    bench_retrieval
        ->add_option("--systems", retrieval_args.systems,
                     "systems to compare (tbi, word_trie, aho_corasick)")
        ->delimiter(',');
    bench_retrieval
        ->add_option("--query-source", retrieval_args.query_source, "where queries come from")
        ->check(CLI::IsMember({"vocab", "file"}));
    bench_retrieval->add_option("--queries", retrieval_args.queries_path,
                                "query file for --query-source file");
    bench_retrieval->add_option("--sample-size", retrieval_args.sample_size,
                                "queries sampled from the vocabulary (0: min(1000, size))");
    bench_retrieval->add_option("--seed", retrieval_args.seed, "sampling seed");
    bench_retrieval->add_option("--format", retrieval_args.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    bench_retrieval->callback([&] { cmd_bench_retrieval(retrieval_args); });

    IndexBenchArgs index_args;
    CLI::App* bench_index =
        app.add_subcommand("bench-index", "wall-clock comparison of vanilla vs tbi indexing");
    bench_index->add_option("--vocab", index_args.vocab_path, "vocabulary file")->required();
    bench_index->add_option("--repetitions", index_args.repetitions, "timed runs per system")
        ->check(CLI::PositiveNumber);
    bench_index->add_option("--format", index_args.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    bench_index->callback([&] { cmd_bench_index(index_args); });

    std::string stats_vocab;
    CLI::App* stats = app.add_subcommand("stats", "corpus statistics as JSON");
    stats->add_option("--vocab", stats_vocab, "vocabulary file")->required();
    stats->callback([&] { cmd_stats(stats_vocab); });

    GenerateArgs generate_args;
    CLI::App* generate =
        app.add_subcommand("generate", "write a deterministic synthetic vocabulary");
    generate->add_option("--out", generate_args.out_path, "output file")->required();
    generate->add_option("--terms", generate_args.spec.term_count, "number of distinct terms")
        ->required();
    generate->add_option("--pool", generate_args.spec.token_pool_size, "token pool size");
    generate->add_option("--min-tokens", generate_args.spec.min_tokens, "min tokens per term");
    generate->add_option("--max-tokens", generate_args.spec.max_tokens, "max tokens per term");
    generate->add_option("--min-token-len", generate_args.spec.min_token_length,
                         "min characters per token");
    generate->add_option("--max-token-len", generate_args.spec.max_token_length,
                         "max characters per token");
    generate->add_option("--seed", generate_args.spec.seed, "generator seed");
    generate->callback([&] { cmd_generate(generate_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ResultMismatchError& e) {
        std::cerr << "result mismatch: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
