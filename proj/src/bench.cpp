#include "tbi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include <json.hpp>
#include <sys/utsname.h>

#include "tbi/aho_corasick.hpp"
#include "tbi/counter.hpp"
#include "tbi/errors.hpp"
#include "tbi/tbi_index.hpp"
#include "tbi/vanilla_index.hpp"
#include "tbi/word_trie.hpp"

namespace tbi {
namespace {

double round2(double x) { return std::round(x * 100.0) / 100.0; }

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

template <typename F>
double time_seconds(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

std::string texts_joined(std::span<const Term> terms, std::size_t limit = 5) {
    std::string out;
    for (std::size_t i = 0; i < terms.size() && i < limit; ++i) {
        if (i > 0) out += ", ";
        out += "'" + terms[i].text() + "'";
    }
    if (terms.size() > limit) out += ", ...";
    return out;
}

}  // namespace

std::string host_description() {
    std::string out = "unknown host";
    utsname u{};
    if (uname(&u) == 0) out = std::string(u.sysname) + " " + u.machine + " " + u.release;
#ifdef __VERSION__
    out += ", compiler " __VERSION__;
#endif
    return out;
}

std::string report_to_json(const BenchReport& report) {
    nlohmann::json j;
    j["system"] = report.system;
    j["dataset"] = report.dataset;
    j["operation"] = report.operation;
    if (report.operation == "index") {
        j["wall_clock_seconds"] = report.wall_clock_seconds;
    } else {
        j["avg_comparisons"] = round2(report.avg_comparisons);
        j["query_count"] = report.query_count;
    }
    j["environment"] = report.environment;
    return j.dump();
}

std::string format_report_table(std::span<const BenchReport> reports) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-14s %-9s %16s %10s %12s\n", "system", "operation",
                  "avg_comparisons", "queries", "seconds");
    out += line;
    out += std::string(14 + 1 + 9 + 1 + 16 + 1 + 10 + 1 + 12, '-') + "\n";
    for (const BenchReport& r : reports) {
        if (r.operation == "index") {
            std::snprintf(line, sizeof(line), "%-14s %-9s %16s %10s %12.3f\n", r.system.c_str(),
                          r.operation.c_str(), "-", "-", r.wall_clock_seconds);
        } else {
            std::snprintf(line, sizeof(line), "%-14s %-9s %16.2f %10llu %12s\n", r.system.c_str(),
                          r.operation.c_str(), r.avg_comparisons,
                          static_cast<unsigned long long>(r.query_count), "-");
        }
        out += line;
    }
    return out;
}

std::string_view system_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::Tbi: return "tbi";
        case SystemKind::WordTrie: return "word_trie";
        case SystemKind::AhoCorasick: return "aho_corasick";
    }
    return "?";
}

std::optional<SystemKind> system_from_name(std::string_view name) {
    if (name == "tbi") return SystemKind::Tbi;
    if (name == "word_trie") return SystemKind::WordTrie;
    if (name == "aho_corasick") return SystemKind::AhoCorasick;
    return std::nullopt;
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::uint64_t seed) {
    if (count > population)
        throw std::invalid_argument("sample size exceeds population");
    std::vector<std::size_t> indices(population);
    for (std::size_t i = 0; i < population; ++i) indices[i] = i;
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates with engine output only, for cross-platform
    // determinism.
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (population - i));
        std::swap(indices[i], indices[j]);
    }
    indices.resize(count);
    return indices;
}

std::vector<BenchReport> run_retrieval_bench(std::span<const Term> vocabulary,
                                             const RetrievalBenchOptions& options) {
    if (vocabulary.empty()) throw EmptyVocabularyError();
    if (options.systems.empty()) throw std::invalid_argument("no systems selected");
    if (options.sample_size > vocabulary.size() && options.external_queries.empty())
        throw std::invalid_argument("sample_size exceeds vocabulary size");

    struct System {
        SystemKind kind;
        std::optional<TbiIndex> tbi;
        std::optional<WordTrie> trie;
        std::optional<AhoCorasick> ac;

        std::vector<Term> nested(const Term& q, ComparisonCounter& c) const {
            if (tbi) return tbi->nested_terms_of(q, c);
            if (trie) return trie->nested_terms_of(q, c);
            return ac->nested_terms_of(q, c);
        }
        std::vector<Term> super(const Term& q, ComparisonCounter& c) const {
            if (tbi) {
                auto result = tbi->super_terms_of(q, c);
                if (!result)
                    throw ResultMismatchError("tbi reports NotInVocabulary for sampled query '" +
                                              q.text() + "'");
                return std::move(*result);
            }
            if (trie) return trie->super_terms_of(q, c);
            return ac->super_terms_of(q, c);
        }
    };

    std::vector<System> systems;
    for (const SystemKind kind : options.systems) {
        System s{kind, {}, {}, {}};
        switch (kind) {
            case SystemKind::Tbi: {
                auto index = TbiIndex::build(vocabulary);
                index.discard_buckets();
                s.tbi = std::move(index);
                break;
            }
            case SystemKind::WordTrie: s.trie = WordTrie::build(vocabulary); break;
            case SystemKind::AhoCorasick: s.ac = AhoCorasick::build(vocabulary); break;
        }
        systems.push_back(std::move(s));
    }

    const std::size_t sample = std::min(options.sample_size, vocabulary.size());
    std::vector<Term> super_queries;
    for (const std::size_t i : sample_indices(vocabulary.size(), sample, options.seed))
        super_queries.push_back(vocabulary[i]);
    const std::vector<Term>& nested_queries =
        options.external_queries.empty() ? super_queries : options.external_queries;

    std::vector<std::uint64_t> nested_totals(systems.size(), 0);
    std::vector<std::uint64_t> super_totals(systems.size(), 0);

    std::vector<std::vector<Term>> results(systems.size());
    const auto cross_check = [&](const Term& query, const char* direction) {
        for (std::size_t s = 1; s < systems.size(); ++s) {
            if (results[s] != results[0])
                throw ResultMismatchError(
                    std::string(direction) + " results differ between " +
                    std::string(system_name(systems[0].kind)) + " and " +
                    std::string(system_name(systems[s].kind)) + " for query '" + query.text() +
                    "': [" + texts_joined(results[0]) + "] vs [" + texts_joined(results[s]) + "]");
        }
    };

    for (const Term& query : nested_queries) {
        for (std::size_t s = 0; s < systems.size(); ++s) {
            ComparisonCounter counter;
            results[s] = systems[s].nested(query, counter);
            nested_totals[s] += counter.probes();
        }
        cross_check(query, "nested");
    }
    for (const Term& query : super_queries) {
        for (std::size_t s = 0; s < systems.size(); ++s) {
            ComparisonCounter counter;
            results[s] = systems[s].super(query, counter);
            super_totals[s] += counter.probes();
        }
        cross_check(query, "super");
    }

    const std::string environment = host_description();
    std::vector<BenchReport> reports;
    for (std::size_t s = 0; s < systems.size(); ++s) {
        BenchReport nested;
        nested.system = system_name(systems[s].kind);
        nested.dataset = options.dataset_id;
        nested.operation = "nested";
        nested.query_count = nested_queries.size();
        nested.avg_comparisons =
            static_cast<double>(nested_totals[s]) / static_cast<double>(nested_queries.size());
        nested.environment = environment;
        reports.push_back(nested);

        BenchReport super;
        super.system = system_name(systems[s].kind);
        super.dataset = options.dataset_id;
        super.operation = "super";
        super.query_count = super_queries.size();
        super.avg_comparisons =
            static_cast<double>(super_totals[s]) / static_cast<double>(super_queries.size());
        super.environment = environment;
        reports.push_back(super);
    }
    return reports;
}

IndexBenchResult run_index_bench(std::span<const Term> vocabulary,
                                 const IndexBenchOptions& options) {
    if (vocabulary.empty()) throw EmptyVocabularyError();
    if (options.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

    // Untimed dry run; doubles as the correctness gate.
    {
        const auto vanilla = VanillaHashIndex::build(vocabulary);
        const auto tbi = TbiIndex::build(vocabulary);
        if (vanilla.relation_table() != tbi.relation_table())
            throw ResultMismatchError("vanilla and tbi relation tables differ");
    }

    std::vector<double> vanilla_times;
    std::vector<double> tbi_times;
    for (int r = 0; r < options.repetitions; ++r) {
        // Construction only; teardown happens outside the timed window.
        std::optional<VanillaHashIndex> vanilla_index;
        vanilla_times.push_back(
            time_seconds([&] { vanilla_index.emplace(VanillaHashIndex::build(vocabulary)); }));
        vanilla_index.reset();
        std::optional<TbiIndex> tbi_index;
        tbi_times.push_back(time_seconds([&] { tbi_index.emplace(TbiIndex::build(vocabulary)); }));
        tbi_index.reset();
    }

    const std::string environment = host_description();
    IndexBenchResult result;
    result.vanilla.system = "vanilla";
    result.vanilla.dataset = options.dataset_id;
    result.vanilla.operation = "index";
    result.vanilla.wall_clock_seconds = median(vanilla_times);
    result.vanilla.environment = environment;
    result.tbi.system = "tbi";
    result.tbi.dataset = options.dataset_id;
    result.tbi.operation = "index";
    result.tbi.wall_clock_seconds = median(tbi_times);
    result.tbi.environment = environment;
    result.reduction_percent =
        100.0 * (1.0 - result.tbi.wall_clock_seconds / result.vanilla.wall_clock_seconds);
    return result;
}

}  // namespace tbi
