#include "tbi/corpus.hpp"

#include <fstream>
#include <random>
#include <unordered_set>

#include <json.hpp>

#include "tbi/errors.hpp"

namespace tbi {

LoadResult load_vocabulary(const std::filesystem::path& path, LoadOptions options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vocabulary file: " + path.string());
    return load_vocabulary(in, options);
}

LoadResult load_vocabulary(std::istream& in, LoadOptions options) {
    LoadResult result;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') {
            ++result.comment_count;
            continue;
        }
        if (!is_valid_utf8(line)) {
            if (options.strict_encoding)
                throw EncodingError("invalid UTF-8 on line " + std::to_string(line_no));
            ++result.skipped_count;
            continue;
        }
        const auto term = Term::normalize(line);
        if (!term) {
            ++result.skipped_count;
            continue;
        }
        if (!seen.insert(term->text()).second) {
            ++result.duplicate_count;
            continue;
        }
        result.terms.push_back(*term);
    }
    if (in.bad()) throw IoError("read error while loading vocabulary");
    return result;
}

CorpusStats compute_stats(std::span<const Term> vocabulary) {
    if (vocabulary.empty()) throw EmptyVocabularyError();
    CorpusStats stats;
    double tokens = 0.0;
    double chars = 0.0;
    std::unordered_set<std::string_view> seen;
    for (const Term& t : vocabulary) {
        if (!seen.insert(t.text()).second) continue;
        tokens += t.metrics().token_count;
        chars += t.metrics().length;
    }
    stats.total_unique_terms = seen.size();
    stats.avg_tokens_per_term = tokens / static_cast<double>(seen.size());
    stats.avg_chars_per_term = chars / static_cast<double>(seen.size());
    return stats;
}

std::string stats_to_json(const CorpusStats& stats) {
    nlohmann::json j;
    j["total_unique_terms"] = stats.total_unique_terms;
    j["avg_tokens_per_term"] = stats.avg_tokens_per_term;
    j["avg_chars_per_term"] = stats.avg_chars_per_term;
    return j.dump();
}

GeneratorSpec brown_like_spec(std::size_t term_count, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.term_count = term_count;
    spec.token_pool_size = 1000;
    spec.min_tokens = 1;
    spec.max_tokens = 3;
    spec.min_token_length = 4;
    spec.max_token_length = 8;
    spec.seed = seed;
    return spec;
}

namespace {

// Engine output only; std::uniform_int_distribution is not portable across
// standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

}  // namespace

std::vector<Term> generate_vocabulary(const GeneratorSpec& spec) {
    if (spec.term_count == 0 || spec.token_pool_size == 0)
        throw InvalidGeneratorSpec("term_count and token_pool_size must be positive");
    if (spec.min_tokens == 0 || spec.min_tokens > spec.max_tokens)
        throw InvalidGeneratorSpec("tokens_per_term range is degenerate");
    if (spec.min_token_length == 0 || spec.min_token_length > spec.max_token_length)
        throw InvalidGeneratorSpec("token_length range is degenerate");

    std::mt19937_64 rng(spec.seed);

    std::vector<std::string> pool;
    pool.reserve(spec.token_pool_size);
    for (std::size_t i = 0; i < spec.token_pool_size; ++i) {
        const std::size_t len = draw(rng, spec.min_token_length, spec.max_token_length);
        std::string token(len, 'a');
        for (char& c : token) c = static_cast<char>('a' + draw(rng, 0, 25));
        pool.push_back(std::move(token));
    }

    std::vector<Term> out;
    out.reserve(spec.term_count);
    std::unordered_set<std::string> seen;
    const std::size_t max_attempts = 100 * spec.term_count + 1000;
    std::size_t attempts = 0;
    std::string text;
    while (out.size() < spec.term_count) {
        if (++attempts > max_attempts)
            throw InvalidGeneratorSpec("cannot generate enough distinct terms; enlarge the pool");
        const std::size_t k = draw(rng, spec.min_tokens, spec.max_tokens);
        text.clear();
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0) text.push_back(' ');
            text += pool[draw(rng, 0, spec.token_pool_size - 1)];
        }
        if (!seen.insert(text).second) continue;
        out.push_back(*Term::normalize(text));
    }
    return out;
}

}  // namespace tbi
