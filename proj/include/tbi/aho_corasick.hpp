#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tbi/counter.hpp"
#include "tbi/term.hpp"

namespace tbi {

// Character-level Aho-Corasick automaton over the vocabulary term texts.
// Operates on bytes; a term's byte sequence is its UTF-8 text. Each state of
// the goto trie carries the maximum depth (in bytes) of its subtree, used to
// prune super-term search the same way the word trie prunes on words.
class AhoCorasick {
public:
    static AhoCorasick build(std::span<const Term> vocabulary);

    // Feeds the query text through the automaton and keeps matches that are
    // proper and aligned on the query's token boundaries. Counter += 1 per
    // transition taken, failure hops and the root self-loop included.
    std::vector<Term> nested_terms_of(const Term& query, ComparisonCounter& counter) const;

    // Depth-first search over the goto trie for terms that properly contain
    // the query text token-aligned. Counter += 1 per state entered; pruning
    // skips subtrees too shallow for the bytes still unmatched and never
    // changes results.
    std::vector<Term> super_terms_of(const Term& query, ComparisonCounter& counter,
                                     bool depth_pruning = true) const;

    std::size_t state_count() const noexcept { return states_.size(); }

    // Read-only walk over the goto trie for structural checks:
    // fn(state_id, parent_id, edge_byte, terminal_term_id_or_minus1,
    // max_subtree_depth). The root is state 0 with parent 0 and byte 0.
    void visit_states(const std::function<void(std::uint32_t, std::uint32_t, unsigned char,
                                               std::int32_t, std::uint32_t)>& fn) const;

private:
    struct State {
        std::map<unsigned char, std::uint32_t> next;  // goto edges
        std::uint32_t fail = 0;
        std::uint32_t output_link = 0;  // nearest suffix state with a term; 0 = none
        std::int32_t term = -1;         // vocabulary term ending here
        std::uint32_t max_subtree_depth = 0;  // bytes to the deepest descendant
    };

    void super_dfs(std::uint32_t state_id, unsigned char edge_byte, std::string_view pattern,
                   std::span<const std::uint32_t> fail, std::uint32_t match_state, bool matched,
                   bool depth_pruning, ComparisonCounter& counter,
                   std::vector<std::uint32_t>& found) const;

    std::vector<State> states_{1};  // state 0 is the root
    std::vector<Term> terms_;       // distinct indexed terms
};

}  // namespace tbi
