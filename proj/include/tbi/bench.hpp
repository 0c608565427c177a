#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tbi/term.hpp"

namespace tbi {

// One row of a benchmark run: an indexing timing or a retrieval counter
// average. Averages are reported to two decimals.
struct BenchReport {
    std::string system;     // tbi | vanilla | word_trie | aho_corasick
    std::string dataset;
    std::string operation;  // index | nested | super
    double wall_clock_seconds = 0.0;  // index rows
    double avg_comparisons = 0.0;     // retrieval rows
    std::uint64_t query_count = 0;    // retrieval rows
    std::string environment;
};

std::string host_description();
std::string report_to_json(const BenchReport& report);
std::string format_report_table(std::span<const BenchReport> reports);

enum class SystemKind { Tbi, WordTrie, AhoCorasick };

std::string_view system_name(SystemKind kind);
std::optional<SystemKind> system_from_name(std::string_view name);

struct RetrievalBenchOptions {
    std::vector<SystemKind> systems = {SystemKind::Tbi, SystemKind::WordTrie,
                                       SystemKind::AhoCorasick};
    std::size_t sample_size = 1000;  // clamped to the vocabulary size
    std::uint64_t seed = 0;
    // When non-empty, these queries drive the nested direction instead of the
    // vocabulary sample; they may be out-of-vocabulary. Super queries always
    // come from the vocabulary sample.
    std::vector<Term> external_queries;
    std::string dataset_id;
};

// Runs every sampled query through every selected system, cross-checks the
// result sets for equality (correctness gates performance), then reports one
// row per (system, direction). Throws ResultMismatchError naming the
// offending query on any disagreement.
std::vector<BenchReport> run_retrieval_bench(std::span<const Term> vocabulary,
                                             const RetrievalBenchOptions& options);

struct IndexBenchOptions {
    int repetitions = 3;
    std::string dataset_id;
};

struct IndexBenchResult {
    BenchReport vanilla;
    BenchReport tbi;
    double reduction_percent = 0.0;  // 100 * (1 - tbi/vanilla)
};

// One untimed dry run per system (results cross-checked for table equality),
// then `repetitions` timed runs each; wall clocks are medians. Throws
// ResultMismatchError when the tables differ.
IndexBenchResult run_index_bench(std::span<const Term> vocabulary,
                                 const IndexBenchOptions& options);

// Seeded, deterministic sample of `count` distinct vocabulary positions.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::uint64_t seed);

}  // namespace tbi
