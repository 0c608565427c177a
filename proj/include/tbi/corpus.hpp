#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "tbi/term.hpp"

namespace tbi {

struct LoadOptions {
    bool strict_encoding = false;  // invalid UTF-8 line: skip (default) or throw
};

struct LoadResult {
    std::vector<Term> terms;  // normalized, deduplicated, first-occurrence order
    std::size_t duplicate_count = 0;
    std::size_t skipped_count = 0;  // blank or invalid-encoding lines
    std::size_t comment_count = 0;  // lines starting with '#'
};

// One raw term per line, UTF-8, LF or CRLF. Lines that normalize to nothing
// or fail UTF-8 validation are counted and skipped. Throws IoError when the
// file cannot be read, EncodingError under strict_encoding.
LoadResult load_vocabulary(const std::filesystem::path& path, LoadOptions options = {});
LoadResult load_vocabulary(std::istream& in, LoadOptions options = {});

struct CorpusStats {
    std::size_t total_unique_terms = 0;
    double avg_tokens_per_term = 0.0;
    double avg_chars_per_term = 0.0;  // characters as in TermMetrics::length
};

// Averages over unique terms. Throws EmptyVocabularyError.
CorpusStats compute_stats(std::span<const Term> vocabulary);

std::string stats_to_json(const CorpusStats& stats);

// Synthetic vocabulary description. Tokens are lowercase ASCII drawn from a
// shared pool, so distinct terms share tokens and n-grams and nesting
// relations actually occur. Identical spec and seed give byte-identical
// output on every platform.
struct GeneratorSpec {
    std::size_t term_count = 0;
    std::size_t token_pool_size = 0;
    std::uint32_t min_tokens = 1;
    std::uint32_t max_tokens = 1;
    std::uint32_t min_token_length = 1;
    std::uint32_t max_token_length = 1;
    std::uint64_t seed = 0;
};

// Brown-like shape: ~2 tokens and ~15 characters per term.
GeneratorSpec brown_like_spec(std::size_t term_count, std::uint64_t seed);

// Exactly term_count distinct normalized terms. Throws InvalidGeneratorSpec
// when the configuration is degenerate or cannot yield enough distinct terms.
std::vector<Term> generate_vocabulary(const GeneratorSpec& spec);

}  // namespace tbi
