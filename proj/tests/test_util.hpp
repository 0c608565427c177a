#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tbi/term.hpp"

namespace tbi::test {

inline Term term_of(std::string_view raw) { return *Term::normalize(raw); }

inline std::vector<Term> terms_of(std::initializer_list<std::string_view> raws) {
    std::vector<Term> out;
    for (const std::string_view raw : raws) out.push_back(term_of(raw));
    return out;
}

inline std::vector<std::string> texts_of(const std::vector<Term>& terms) {
    std::vector<std::string> out;
    out.reserve(terms.size());
    for (const Term& t : terms) out.push_back(t.text());
    return out;
}

// Random terms over a tiny token alphabet, so containment, duplicate n-grams
// and duplicate terms all happen often. A couple of multi-byte tokens keep
// the code-point counting honest.
class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(seed) {}

    Term term(std::size_t max_tokens = 5) {
        static const std::vector<std::string> alphabet = {
            "a", "b", "c", "d", "e", "ab", "bc", "cd", "abc", "x", "yz", "zz", "\xc3\xa9",
            "\xe6\x97\xa5\xe6\x9c\xac"};
        const std::size_t k = draw(1, max_tokens);
        std::string text;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0) text.push_back(' ');
            text += alphabet[draw(0, alphabet.size() - 1)];
        }
        return term_of(text);
    }

    std::vector<Term> vocabulary(std::size_t count, std::size_t max_tokens = 5) {
        std::vector<Term> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(term(max_tokens));
        return out;
    }

    std::uint64_t draw(std::uint64_t lo, std::uint64_t hi) {
        return lo + rng_() % (hi - lo + 1);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace tbi::test
