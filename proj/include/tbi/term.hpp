#pragma once

#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tbi {

// The four bucket keys of a term. Character counts are Unicode code points,
// not bytes; spaces count toward `length` only.
struct TermMetrics {
    std::uint32_t length = 0;                // characters, separating spaces included
    std::uint32_t token_count = 0;           // tokens
    std::uint32_t largest_token_length = 0;  // characters in the longest token
    std::uint32_t nonspace_length = 0;       // length - token_count + 1

    bool operator==(const TermMetrics&) const = default;
};

// A normalized vocabulary entry: non-empty tokens joined by single spaces, no
// leading or trailing whitespace. Immutable after construction; metrics are
// computed once and cached.
class Term {
public:
    Term() = default;

    // Trims the ends and collapses internal whitespace runs to single spaces.
    // Case is preserved. Returns nullopt when the input has no non-whitespace
    // character (the EmptyTerm rejection). Input must be valid UTF-8.
    static std::optional<Term> normalize(std::string_view raw);

    const std::string& text() const noexcept { return text_; }
    const TermMetrics& metrics() const noexcept { return metrics_; }

    std::size_t token_count() const noexcept { return token_starts_.size(); }
    std::string_view token(std::size_t i) const {
        return std::string_view(text_).substr(token_begin(i), token_end(i) - token_begin(i));
    }

    // Byte offsets of token i within text().
    std::size_t token_begin(std::size_t i) const { return token_starts_[i]; }
    std::size_t token_end(std::size_t i) const {
        return i + 1 < token_starts_.size() ? token_starts_[i + 1] - 1 : text_.size();
    }

    bool operator==(const Term& other) const { return text_ == other.text_; }
    std::strong_ordering operator<=>(const Term& other) const { return text_ <=> other.text_; }

private:
    Term(std::string text, std::vector<std::uint32_t> token_starts, TermMetrics metrics)
        : text_(std::move(text)), token_starts_(std::move(token_starts)), metrics_(metrics) {}

    friend std::vector<Term> proper_ngrams(const Term&);

    std::string text_;
    std::vector<std::uint32_t> token_starts_;
    TermMetrics metrics_;
};

// Canonical table form shared by every index and the oracle: term text mapped
// to the texts of its super terms. Ordered for stable diffs and equality.
using RelationTable = std::map<std::string, std::set<std::string>>;

// True iff candidate's tokens occur as a contiguous run inside container's
// tokens and the two terms differ. Token matching is exact and case-sensitive.
// Because normalized terms are single-space joined, a token window equals the
// candidate iff the corresponding byte range equals its text.
inline bool is_nested_in(const Term& candidate, const Term& container) {
    const TermMetrics& a = candidate.metrics();
    const TermMetrics& b = container.metrics();
    if (a.token_count >= b.token_count || a.length >= b.length ||
        a.nonspace_length >= b.nonspace_length ||
        a.largest_token_length > b.largest_token_length) {
        return false;
    }
    const std::size_t window = candidate.token_count();
    const std::size_t total = container.token_count();
    const std::string& needle = candidate.text();
    const char* hay = container.text().data();
    for (std::size_t i = 0; i + window <= total; ++i) {
        const std::size_t begin = container.token_begin(i);
        if (container.token_end(i + window - 1) - begin != needle.size()) continue;
        if (std::memcmp(hay + begin, needle.data(), needle.size()) == 0) return true;
    }
    return false;
}

// Every contiguous token run of length 1..token_count-1 as a Term, without
// duplicates, in (start, length) generation order. The full term is excluded;
// a single-token term yields nothing. At most m(m+1)/2 - 1 entries.
std::vector<Term> proper_ngrams(const Term& term);

bool is_valid_utf8(std::string_view bytes);

}  // namespace tbi
