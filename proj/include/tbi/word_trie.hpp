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

// Word-level trie over vocabulary terms: tokens are edges, a terminal flag
// marks where a term ends, and each node carries the maximum depth (in words)
// of its subtree so that super-term search can skip subtrees too shallow to
// complete a match.
class WordTrie {
public:
    static WordTrie build(std::span<const Term> vocabulary);

    // Walks the trie from every start position of the query, emitting each
    // terminal passed (the query itself excluded). Counter += 1 per child
    // lookup attempted.
    std::vector<Term> nested_terms_of(const Term& query, ComparisonCounter& counter) const;

    // Depth-first search for terminals whose token path properly contains the
    // query tokens contiguously. Counter += 1 per node entered. With pruning,
    // a subtree is skipped once the words still unmatched exceed its maximum
    // depth; disabling pruning changes counters, never results.
    std::vector<Term> super_terms_of(const Term& query, ComparisonCounter& counter,
                                     bool depth_pruning = true) const;

    std::size_t node_count() const noexcept { return nodes_.size(); }

    // Read-only walk for structural checks: fn(node_id, parent_id, edge_token,
    // is_terminal, max_subtree_depth). The root is node 0 with parent 0 and an
    // empty token.
    void visit_nodes(
        const std::function<void(std::uint32_t, std::uint32_t, const std::string&, bool,
                                 std::uint32_t)>& fn) const;

private:
    struct Node {
        std::map<std::string, std::uint32_t, std::less<>> children;
        bool terminal = false;
        std::uint32_t max_subtree_depth = 0;  // words to the deepest descendant terminal
    };

    std::uint32_t compute_depths(std::uint32_t node_id);
    void super_dfs(std::uint32_t node_id, std::string_view edge_token,
                   std::span<const std::string_view> pattern, std::span<const std::uint32_t> fail,
                   std::uint32_t state, bool matched, std::size_t depth, std::string& path,
                   bool depth_pruning, ComparisonCounter& counter, std::vector<Term>& out) const;

    std::vector<Node> nodes_{1};  // node 0 is the root
};

}  // namespace tbi
