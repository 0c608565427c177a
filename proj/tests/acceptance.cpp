// Acceptance suite: eight end-to-end criteria covering correctness against
// the brute-force oracle, retrieval cost properties, pruning soundness, the
// indexing speedup, and the worked four-key example. One pass/fail line per
// criterion; nonzero exit when anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tbi/aho_corasick.hpp"
#include "tbi/bench.hpp"
#include "tbi/corpus.hpp"
#include "tbi/counter.hpp"
#include "tbi/oracle.hpp"
#include "tbi/tbi_index.hpp"
#include "tbi/term.hpp"
#include "tbi/vanilla_index.hpp"
#include "tbi/word_trie.hpp"
#include "test_util.hpp"

using namespace tbi;
using tbi::test::term_of;
using tbi::test::texts_of;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

GeneratorSpec varied_spec(std::size_t term_count, std::uint64_t seed) {
    // rotate through three shapes so the oracle check is not tied to one
    // vocabulary profile
    switch (seed % 3) {
        case 0: return brown_like_spec(term_count, seed);
        case 1: {
            GeneratorSpec spec;  // short dense tokens: nesting-heavy
            spec.term_count = term_count;
            spec.token_pool_size = 60;
            spec.min_tokens = 1;
            spec.max_tokens = 4;
            spec.min_token_length = 1;
            spec.max_token_length = 4;
            spec.seed = seed;
            return spec;
        }
        default: {
            GeneratorSpec spec;  // longer terms, wider pool
            spec.term_count = term_count;
            spec.token_pool_size = 3000;
            spec.min_tokens = 2;
            spec.max_tokens = 5;
            spec.min_token_length = 3;
            spec.max_token_length = 9;
            spec.seed = seed;
            return spec;
        }
    }
}

// Byte-level recount, independent of TermMetrics.
std::uint32_t recount_nonspace(const std::string& text) {
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c != ' ' && (c & 0xC0) != 0x80) ++n;
    }
    return n;
}

bool criterion1_oracle_equivalence(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const std::size_t size = 500 + (seed - 1) * 45;  // 500 .. 4955
        const auto vocab = generate_vocabulary(varied_spec(size, seed));
        const RelationTable tbi_table = TbiIndex::build(vocab).relation_table();
        const OracleTable oracle = oracle_build(vocab);
        if (tbi_table != oracle.supers) {
            detail = "tbi != oracle at seed " + std::to_string(seed);
            return false;
        }
        if (tbi_table != VanillaHashIndex::build(vocab).relation_table()) {
            detail = "tbi != vanilla at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = "100 vocabularies of 500..4955 terms, tables identical";
    return true;
}

bool criterion2_single_probe(std::string& detail) {
    for (const std::size_t v : {100u, 1000u, 10000u}) {
        const auto vocab = generate_vocabulary(brown_like_spec(v, 1000 + v));
        const auto index = TbiIndex::build(vocab);
        for (const Term& t : index.terms()) {
            ComparisonCounter counter;
            const auto supers = index.super_terms_of(t, counter);
            if (!supers.has_value() || counter.probes() != 1) {
                detail = "probe count " + std::to_string(counter.probes()) + " for '" + t.text() +
                         "' at v=" + std::to_string(v);
                return false;
            }
        }
    }
    detail = "1 probe per super lookup at v=100, 1000, 10000";
    return true;
}

bool criterion3_counter_ordering(std::string& detail) {
    const auto vocab = generate_vocabulary(brown_like_spec(10000, 33));
    auto tbi_index = TbiIndex::build(vocab);
    tbi_index.discard_buckets();
    const auto trie = WordTrie::build(vocab);
    const auto ac = AhoCorasick::build(vocab);

    const auto sample = sample_indices(vocab.size(), 1000, 17);
    std::uint64_t tbi_super = 0;
    std::uint64_t trie_super = 0;
    std::uint64_t ac_super = 0;
    std::uint64_t tbi_nested = 0;
    for (const std::size_t i : sample) {
        const Term& q = vocab[i];
        ComparisonCounter c1;
        ComparisonCounter c2;
        ComparisonCounter c3;
        ComparisonCounter c4;
        if (!tbi_index.super_terms_of(q, c1).has_value()) {
            detail = "vocabulary term missing from index: '" + q.text() + "'";
            return false;
        }
        trie.super_terms_of(q, c2);
        ac.super_terms_of(q, c3);
        tbi_super += c1.probes();
        trie_super += c2.probes();
        ac_super += c3.probes();

        tbi_index.nested_terms_of(q, c4);
        const std::uint64_t m = q.token_count();
        if (c4.probes() > m * (m + 1) / 2 - 1) {
            detail = "nested probes exceed the n-gram bound for '" + q.text() + "'";
            return false;
        }
        tbi_nested += c4.probes();
    }
    const double tbi_avg = static_cast<double>(tbi_super) / 1000.0;
    const double trie_avg = static_cast<double>(trie_super) / 1000.0;
    const double ac_avg = static_cast<double>(ac_super) / 1000.0;
    if (tbi_avg != 1.0) {
        detail = "tbi super average is not exactly 1";
        return false;
    }
    if (trie_avg < 100.0 * tbi_avg || ac_avg < 100.0 * tbi_avg) {
        detail = "ordering violated: trie=" + std::to_string(trie_avg) +
                 " ac=" + std::to_string(ac_avg) + " tbi=" + std::to_string(tbi_avg);
        return false;
    }

    // nested probe counts must not depend on the vocabulary size
    const auto queries = generate_vocabulary(brown_like_spec(1000, 999));
    const auto small_index = TbiIndex::build(
        std::span<const Term>(vocab.data(), 1000));
    std::uint64_t probes_small = 0;
    std::uint64_t probes_large = 0;
    for (const Term& q : queries) {
        ComparisonCounter cs;
        ComparisonCounter cl;
        small_index.nested_terms_of(q, cs);
        tbi_index.nested_terms_of(q, cl);
        probes_small += cs.probes();
        probes_large += cl.probes();
    }
    const double ratio = static_cast<double>(probes_large) / static_cast<double>(probes_small);
    if (ratio < 0.95 || ratio > 1.05) {
        detail = "nested probe ratio 10^4 vs 10^3 terms is " + std::to_string(ratio);
        return false;
    }

    char buffer[200];
    std::snprintf(buffer, sizeof(buffer),
                  "super avgs: trie=%.2f ac=%.2f tbi=%.2f; nested v-independence ratio=%.3f",
                  trie_avg, ac_avg, tbi_avg, ratio);
    detail = buffer;
    return true;
}

bool criterion4_indexing_trend(std::string& detail) {
    const auto vocab = generate_vocabulary(brown_like_spec(50000, 44));
    IndexBenchOptions options;
    options.repetitions = 3;
    options.dataset_id = "brown-shaped-50k";
    const IndexBenchResult result = run_index_bench(vocab, options);
    char buffer[200];
    std::snprintf(buffer, sizeof(buffer), "vanilla=%.2fs tbi=%.2fs reduction=%.1f%%",
                  result.vanilla.wall_clock_seconds, result.tbi.wall_clock_seconds,
                  result.reduction_percent);
    detail = buffer;
    return result.reduction_percent >= 50.0;
}

bool criterion5_cross_system_agreement(std::string& detail) {
    const auto full = generate_vocabulary(brown_like_spec(3000, 55));
    const std::vector<Term> vocab(full.begin(), full.begin() + 2000);
    auto tbi_index = TbiIndex::build(vocab);
    tbi_index.discard_buckets();
    const auto trie = WordTrie::build(vocab);
    const auto ac = AhoCorasick::build(vocab);

    std::vector<Term> queries;
    for (const std::size_t i : sample_indices(vocab.size(), 500, 21)) queries.push_back(vocab[i]);
    const std::size_t in_vocab_count = queries.size();
    for (std::size_t i = 2000; i < 2500; ++i) queries.push_back(full[i]);  // distinct, so OOV

    ComparisonCounter c;
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        const Term& q = queries[qi];
        const bool in_vocab = qi < in_vocab_count;

        const auto expected_nested = texts_of(oracle_nested_query(vocab, q));
        if (texts_of(tbi_index.nested_terms_of(q, c)) != expected_nested ||
            texts_of(trie.nested_terms_of(q, c)) != expected_nested ||
            texts_of(ac.nested_terms_of(q, c)) != expected_nested) {
            detail = "nested disagreement for '" + q.text() + "'";
            return false;
        }

        const auto expected_super = texts_of(oracle_super_query(vocab, q));
        if (texts_of(trie.super_terms_of(q, c)) != expected_super ||
            texts_of(ac.super_terms_of(q, c)) != expected_super) {
            detail = "super disagreement for '" + q.text() + "'";
            return false;
        }
        const auto tbi_super = tbi_index.super_terms_of(q, c);
        if (in_vocab) {
            if (!tbi_super.has_value() || texts_of(*tbi_super) != expected_super) {
                detail = "tbi super disagreement for '" + q.text() + "'";
                return false;
            }
        } else if (tbi_super.has_value()) {
            detail = "tbi should report NotInVocabulary for '" + q.text() + "'";
            return false;
        }
    }
    detail = "1000 queries (500 in-vocabulary, 500 out), all systems agree with the oracle";
    return true;
}

bool criterion6_metric_invariants(std::string& detail) {
    GeneratorSpec spec;
    spec.term_count = 100000;
    spec.token_pool_size = 3000;
    spec.min_tokens = 1;
    spec.max_tokens = 4;
    spec.min_token_length = 1;
    spec.max_token_length = 10;
    spec.seed = 66;
    const auto vocab = generate_vocabulary(spec);

    for (const Term& t : vocab) {
        const TermMetrics& m = t.metrics();
        if (m.nonspace_length != m.length - m.token_count + 1 ||
            m.nonspace_length != recount_nonspace(t.text())) {
            detail = "formula violated for '" + t.text() + "'";
            return false;
        }
    }

    std::mt19937_64 rng(4242);
    std::size_t implication_pairs = 0;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        // one random pair per term, plus a guaranteed-nested pair where possible
        const Term& a = vocab[rng() % vocab.size()];
        const Term& b = vocab[rng() % vocab.size()];
        const Term* pairs[2][2] = {{&a, &b}, {nullptr, nullptr}};
        std::vector<Term> grams;
        if (i < 20000 && vocab[i].token_count() > 1) {
            grams = proper_ngrams(vocab[i]);
            pairs[1][0] = &grams[rng() % grams.size()];
            pairs[1][1] = &vocab[i];
        }
        for (const auto& pair : pairs) {
            if (!pair[0]) continue;
            const Term& nested = *pair[0];
            const Term& container = *pair[1];
            if (!is_nested_in(nested, container)) continue;
            ++implication_pairs;
            const TermMetrics& mn = nested.metrics();
            const TermMetrics& mc = container.metrics();
            if (!(mn.nonspace_length < mc.nonspace_length && mn.token_count < mc.token_count &&
                  mn.length < mc.length && mn.largest_token_length <= mc.largest_token_length)) {
                detail = "bucket inequality violated for ('" + nested.text() + "', '" +
                         container.text() + "')";
                return false;
            }
        }
    }
    detail = "100000 terms pass the formula; " + std::to_string(implication_pairs) +
             " nested pairs pass all four inequalities";
    return implication_pairs > 10000;
}

bool criterion7_pruning_soundness(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        test::TermGen gen(seed * 13);
        const auto vocab = gen.vocabulary(100 + seed * 8);
        const RelationTable reference = TbiIndex::build(vocab).relation_table();
        for (int relaxed = 0; relaxed < 4; ++relaxed) {
            BuildOptions options;
            if (relaxed == 0) options.filter_nonspace = false;
            if (relaxed == 1) options.filter_token_count = false;
            if (relaxed == 2) options.filter_length = false;
            if (relaxed == 3) options.filter_largest_token = false;
            if (TbiIndex::build(vocab, nullptr, options).relation_table() != reference) {
                detail = "relaxing filter " + std::to_string(relaxed) + " changed the table at seed " +
                         std::to_string(seed);
                return false;
            }
        }
    }

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        test::TermGen gen(seed * 29);
        const auto vocab = gen.vocabulary(200);
        const auto trie = WordTrie::build(vocab);
        const auto ac = AhoCorasick::build(vocab);
        for (int i = 0; i < 50; ++i) {
            const Term q = gen.term(4);
            ComparisonCounter c1;
            ComparisonCounter c2;
            if (texts_of(trie.super_terms_of(q, c1, true)) !=
                texts_of(trie.super_terms_of(q, c1, false))) {
                detail = "trie pruning changed results for '" + q.text() + "'";
                return false;
            }
            if (texts_of(ac.super_terms_of(q, c2, true)) !=
                texts_of(ac.super_terms_of(q, c2, false))) {
                detail = "automaton pruning changed results for '" + q.text() + "'";
                return false;
            }
        }
    }
    detail = "4 single-filter relaxations x 50 vocabularies identical; trie and automaton "
             "pruning result-neutral";
    return true;
}

bool criterion8_worked_example(std::string& detail) {
    const TermMetrics m = term_of("united states of america").metrics();
    if (m.nonspace_length != 21 || m.token_count != 4 || m.length != 24 ||
        m.largest_token_length != 7) {
        detail = "four-key example mismatch";
        return false;
    }
    const auto index = TbiIndex::build(
        std::vector<Term>{term_of("Google"), term_of("LLC"), term_of("Google LLC")});
    const RelationTable table = index.relation_table();
    if (table.at("Google") != std::set<std::string>{"Google LLC"} ||
        table.at("LLC") != std::set<std::string>{"Google LLC"}) {
        detail = "'Google LLC' not reported as super term of 'Google' and 'LLC'";
        return false;
    }
    detail = "keys (21, 4, 24, 7); 'Google LLC' supers both nested terms";
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance suite, host: %s\n", host_description().c_str());
    run_criterion(1, "oracle equivalence over 100 random vocabularies",
                  criterion1_oracle_equivalence);
    run_criterion(2, "super retrieval costs exactly one probe", criterion2_single_probe);
    run_criterion(3, "retrieval counter ordering and bounds", criterion3_counter_ordering);
    run_criterion(4, "indexing wall-clock reduction at 50k terms", criterion4_indexing_trend);
    run_criterion(5, "cross-system retrieval agreement", criterion5_cross_system_agreement);
    run_criterion(6, "metric formula and bucket inequalities", criterion6_metric_invariants);
    run_criterion(7, "pruning soundness", criterion7_pruning_soundness);
    run_criterion(8, "worked four-key example", criterion8_worked_example);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
