#include "tbi/aho_corasick.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string_view>

namespace tbi {
namespace {

std::vector<std::uint32_t> kmp_failure(std::string_view pattern) {
    std::vector<std::uint32_t> fail(pattern.size(), 0);
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        std::uint32_t j = fail[i - 1];
        while (j > 0 && pattern[i] != pattern[j]) j = fail[j - 1];
        if (pattern[i] == pattern[j]) ++j;
        fail[i] = j;
    }
    return fail;
}

// Precondition: state < pattern.size().
std::uint32_t kmp_step(std::string_view pattern, std::span<const std::uint32_t> fail,
                       std::uint32_t state, unsigned char byte) {
    while (state > 0 && static_cast<unsigned char>(pattern[state]) != byte)
        state = fail[state - 1];
    if (static_cast<unsigned char>(pattern[state]) == byte) ++state;
    return state;
}

}  // namespace

AhoCorasick AhoCorasick::build(std::span<const Term> vocabulary) {
    AhoCorasick ac;
    std::set<std::string_view> seen;
    for (const Term& term : vocabulary) {
        if (!seen.insert(term.text()).second) continue;
        const std::int32_t id = static_cast<std::int32_t>(ac.terms_.size());
        ac.terms_.push_back(term);
        std::uint32_t state = 0;
        for (const char ch : term.text()) {
            const unsigned char c = static_cast<unsigned char>(ch);
            auto it = ac.states_[state].next.find(c);
            if (it == ac.states_[state].next.end()) {
                const std::uint32_t child = static_cast<std::uint32_t>(ac.states_.size());
                ac.states_[state].next.emplace(c, child);
                ac.states_.emplace_back();
                state = child;
            } else {
                state = it->second;
            }
        }
        ac.states_[state].term = id;
    }

    // Failure and output links, breadth-first.
    std::deque<std::uint32_t> queue;
    for (const auto& [c, child] : ac.states_[0].next) {
        (void)c;
        queue.push_back(child);
    }
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (const auto& [c, v] : ac.states_[u].next) {
            std::uint32_t f = ac.states_[u].fail;
            while (f != 0 && ac.states_[f].next.count(c) == 0) f = ac.states_[f].fail;
            const auto it = ac.states_[f].next.find(c);
            ac.states_[v].fail = (it != ac.states_[f].next.end() && it->second != v) ? it->second : 0;
            const std::uint32_t fv = ac.states_[v].fail;
            ac.states_[v].output_link =
                ac.states_[fv].term >= 0 ? fv : ac.states_[fv].output_link;
            queue.push_back(v);
        }
    }

    // Subtree depths in bytes, deepest-first over the goto trie.
    for (auto it = ac.states_.rbegin(); it != ac.states_.rend(); ++it) {
        std::uint32_t deepest = 0;
        for (const auto& [c, child] : it->next) {
            (void)c;
            deepest = std::max(deepest, 1 + ac.states_[child].max_subtree_depth);
        }
        it->max_subtree_depth = deepest;
    }
    return ac;
}

std::vector<Term> AhoCorasick::nested_terms_of(const Term& query,
                                               ComparisonCounter& counter) const {
    const std::string& text = query.text();
    std::set<std::uint32_t> found;
    std::uint32_t state = 0;
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        while (state != 0 && states_[state].next.count(c) == 0) {
            state = states_[state].fail;
            counter.add();  // failure transition
        }
        const auto it = states_[state].next.find(c);
        state = it != states_[state].next.end() ? it->second : 0;
        counter.add();  // goto edge, or the root self-loop on a miss

        for (std::uint32_t o = states_[state].term >= 0 ? state : states_[state].output_link;
             o != 0; o = states_[o].output_link) {
            const std::uint32_t id = static_cast<std::uint32_t>(states_[o].term);
            const std::string& match = terms_[id].text();
            const std::size_t begin = pos + 1 - match.size();
            const bool start_aligned = begin == 0 || text[begin - 1] == ' ';
            const bool end_aligned = pos + 1 == text.size() || text[pos + 1] == ' ';
            if (start_aligned && end_aligned && match != text) found.insert(id);
        }
    }
    std::vector<Term> out;
    out.reserve(found.size());
    for (const std::uint32_t id : found) out.push_back(terms_[id]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> AhoCorasick::super_terms_of(const Term& query, ComparisonCounter& counter,
                                              bool depth_pruning) const {
    // Sentinel spaces fold the token-boundary requirement into the pattern;
    // the trailing one is fed virtually when a terminal is reached.
    const std::string pattern = ' ' + query.text() + ' ';
    const std::vector<std::uint32_t> fail = kmp_failure(pattern);
    const std::uint32_t start_state = kmp_step(pattern, fail, 0, ' ');

    std::vector<std::uint32_t> found;
    for (const auto& [c, child] : states_[0].next)
        super_dfs(child, c, pattern, fail, start_state, false, depth_pruning, counter, found);

    std::vector<Term> out;
    out.reserve(found.size());
    for (const std::uint32_t id : found)
        if (terms_[id].text() != query.text()) out.push_back(terms_[id]);
    std::sort(out.begin(), out.end());
    return out;
}

void AhoCorasick::super_dfs(std::uint32_t state_id, unsigned char edge_byte,
                            std::string_view pattern, std::span<const std::uint32_t> fail,
                            std::uint32_t match_state, bool matched, bool depth_pruning,
                            ComparisonCounter& counter, std::vector<std::uint32_t>& found) const {
    counter.add();
    if (!matched) {
        match_state = kmp_step(pattern, fail, match_state, edge_byte);
        matched = match_state == pattern.size();
    }
    const State& state = states_[state_id];
    if (state.term >= 0) {
        const bool qualifies =
            matched || kmp_step(pattern, fail, match_state, ' ') == pattern.size();
        if (qualifies) found.push_back(static_cast<std::uint32_t>(state.term));
    }
    const bool prune = depth_pruning && !matched &&
                       pattern.size() - 1 - match_state > state.max_subtree_depth;
    if (!prune) {
        for (const auto& [c, child] : state.next)
            super_dfs(child, c, pattern, fail, match_state, matched, depth_pruning, counter,
                      found);
    }
}

void AhoCorasick::visit_states(
    const std::function<void(std::uint32_t, std::uint32_t, unsigned char, std::int32_t,
                             std::uint32_t)>& fn) const {
    fn(0, 0, 0, states_[0].term, states_[0].max_subtree_depth);
    std::vector<std::tuple<std::uint32_t, std::uint32_t, unsigned char>> stack;
    for (const auto& [c, child] : states_[0].next) stack.emplace_back(child, 0, c);
    while (!stack.empty()) {
        const auto [id, parent, byte] = stack.back();
        stack.pop_back();
        fn(id, parent, byte, states_[id].term, states_[id].max_subtree_depth);
        for (const auto& [c, child] : states_[id].next) stack.emplace_back(child, id, c);
    }
}

}  // namespace tbi
