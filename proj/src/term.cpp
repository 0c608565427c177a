#include "tbi/term.hpp"

#include <unordered_set>

namespace tbi {
namespace {

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::uint32_t count_codepoints(std::string_view bytes) {
    std::uint32_t n = 0;
    for (unsigned char c : bytes)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

}  // namespace

std::optional<Term> Term::normalize(std::string_view raw) {
    std::string text;
    text.reserve(raw.size());
    std::vector<std::uint32_t> starts;
    bool pending_gap = false;
    for (char ch : raw) {
        if (is_space_byte(static_cast<unsigned char>(ch))) {
            if (!text.empty()) pending_gap = true;
            continue;
        }
        if (pending_gap) {
            text.push_back(' ');
            pending_gap = false;
        }
        if (text.empty() || text.back() == ' ')
            starts.push_back(static_cast<std::uint32_t>(text.size()));
        text.push_back(ch);
    }
    if (text.empty()) return std::nullopt;

    TermMetrics m;
    m.token_count = static_cast<std::uint32_t>(starts.size());
    m.length = count_codepoints(text);
    m.nonspace_length = m.length - m.token_count + 1;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const std::size_t end = i + 1 < starts.size() ? starts[i + 1] - 1 : text.size();
        const std::uint32_t tok_len =
            count_codepoints(std::string_view(text).substr(starts[i], end - starts[i]));
        if (tok_len > m.largest_token_length) m.largest_token_length = tok_len;
    }
    return Term(std::move(text), std::move(starts), m);
}

std::vector<Term> proper_ngrams(const Term& term) {
    const std::size_t m = term.token_count();
    std::vector<Term> out;
    if (m <= 1) return out;
    out.reserve(m * (m + 1) / 2 - 1);
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t longest = std::min(m - 1, m - i);
        for (std::size_t len = 1; len <= longest; ++len) {
            const std::size_t begin = term.token_begin(i);
            const std::size_t end = term.token_end(i + len - 1);
            const std::string_view text = std::string_view(term.text()).substr(begin, end - begin);
            if (!seen.insert(text).second) continue;

            std::vector<std::uint32_t> starts(len);
            TermMetrics g;
            g.token_count = static_cast<std::uint32_t>(len);
            g.length = count_codepoints(text);
            g.nonspace_length = g.length - g.token_count + 1;
            for (std::size_t k = 0; k < len; ++k) {
                starts[k] = static_cast<std::uint32_t>(term.token_begin(i + k) - begin);
                const std::uint32_t tok_len = count_codepoints(term.token(i + k));
                if (tok_len > g.largest_token_length) g.largest_token_length = tok_len;
            }
            out.push_back(Term(std::string(text), std::move(starts), g));
        }
    }
    return out;
}

bool is_valid_utf8(std::string_view bytes) {
    const unsigned char* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const unsigned char* end = p + bytes.size();
    while (p < end) {
        const unsigned char c = *p;
        if (c < 0x80) {
            ++p;
            continue;
        }
        int len;
        std::uint32_t cp;
        if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (end - p < len) return false;
        for (int i = 1; i < len; ++i) {
            if ((p[i] & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (p[i] & 0x3F);
        }
        // overlong forms, surrogates, out of range
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        if (cp > 0x10FFFF) return false;
        p += len;
    }
    return true;
}

}  // namespace tbi
