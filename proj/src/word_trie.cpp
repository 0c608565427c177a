#include "tbi/word_trie.hpp"

#include <algorithm>

namespace tbi {
namespace {

std::vector<std::uint32_t> kmp_failure(std::span<const std::string_view> pattern) {
    std::vector<std::uint32_t> fail(pattern.size(), 0);
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        std::uint32_t j = fail[i - 1];
        while (j > 0 && pattern[i] != pattern[j]) j = fail[j - 1];
        if (pattern[i] == pattern[j]) ++j;
        fail[i] = j;
    }
    return fail;
}

std::uint32_t kmp_step(std::span<const std::string_view> pattern,
                       std::span<const std::uint32_t> fail, std::uint32_t state,
                       std::string_view token) {
    while (state > 0 && token != pattern[state]) state = fail[state - 1];
    if (token == pattern[state]) ++state;
    return state;
}

}  // namespace

WordTrie WordTrie::build(std::span<const Term> vocabulary) {
    WordTrie trie;
    for (const Term& term : vocabulary) {
        std::uint32_t node = 0;
        for (std::size_t i = 0; i < term.token_count(); ++i) {
            const std::string_view token = term.token(i);
            auto it = trie.nodes_[node].children.find(token);
            if (it == trie.nodes_[node].children.end()) {
                const std::uint32_t child = static_cast<std::uint32_t>(trie.nodes_.size());
                trie.nodes_[node].children.emplace(std::string(token), child);
                trie.nodes_.emplace_back();
                node = child;
            } else {
                node = it->second;
            }
        }
        trie.nodes_[node].terminal = true;
    }
    trie.compute_depths(0);
    return trie;
}

std::uint32_t WordTrie::compute_depths(std::uint32_t node_id) {
    Node& node = nodes_[node_id];
    std::uint32_t deepest = 0;
    for (const auto& [token, child] : node.children)
        deepest = std::max(deepest, 1 + compute_depths(child));
    node.max_subtree_depth = deepest;
    return deepest;
}

std::vector<Term> WordTrie::nested_terms_of(const Term& query, ComparisonCounter& counter) const {
    const std::size_t m = query.token_count();
    std::vector<Term> out;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t node = 0;
        for (std::size_t j = i; j < m; ++j) {
            counter.add();
            const auto it = nodes_[node].children.find(query.token(j));
            if (it == nodes_[node].children.end()) break;
            node = it->second;
            if (nodes_[node].terminal && !(i == 0 && j + 1 == m)) {
                const std::size_t begin = query.token_begin(i);
                const std::size_t end = query.token_end(j);
                out.push_back(
                    *Term::normalize(std::string_view(query.text()).substr(begin, end - begin)));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Term> WordTrie::super_terms_of(const Term& query, ComparisonCounter& counter,
                                           bool depth_pruning) const {
    std::vector<std::string_view> pattern;
    pattern.reserve(query.token_count());
    for (std::size_t i = 0; i < query.token_count(); ++i) pattern.push_back(query.token(i));
    const std::vector<std::uint32_t> fail = kmp_failure(pattern);

    std::vector<Term> out;
    std::string path;
    for (const auto& [token, child] : nodes_[0].children)
        super_dfs(child, token, pattern, fail, 0, false, 1, path, depth_pruning, counter, out);
    std::sort(out.begin(), out.end());
    return out;
}

void WordTrie::super_dfs(std::uint32_t node_id, std::string_view edge_token,
                         std::span<const std::string_view> pattern,
                         std::span<const std::uint32_t> fail, std::uint32_t state, bool matched,
                         std::size_t depth, std::string& path, bool depth_pruning,
                         ComparisonCounter& counter, std::vector<Term>& out) const {
    counter.add();
    const std::size_t saved = path.size();
    if (!path.empty()) path.push_back(' ');
    path.append(edge_token);

    const std::uint32_t m = static_cast<std::uint32_t>(pattern.size());
    if (!matched) {
        state = kmp_step(pattern, fail, state, edge_token);
        matched = state == m;
    }
    const Node& node = nodes_[node_id];
    // A terminal at depth m with a full match is the query itself.
    if (node.terminal && matched && depth != m) out.push_back(*Term::normalize(path));

    const bool prune = depth_pruning && !matched && m - state > node.max_subtree_depth;
    if (!prune) {
        for (const auto& [token, child] : node.children)
            super_dfs(child, token, pattern, fail, state, matched, depth + 1, path, depth_pruning,
                      counter, out);
    }
    path.resize(saved);
}

void WordTrie::visit_nodes(
    const std::function<void(std::uint32_t, std::uint32_t, const std::string&, bool,
                             std::uint32_t)>& fn) const {
    const std::string root_token;
    fn(0, 0, root_token, nodes_[0].terminal, nodes_[0].max_subtree_depth);
    // Depth-first, explicit stack of (node, parent).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    std::vector<const std::string*> tokens(nodes_.size(), &root_token);
    for (const auto& [token, child] : nodes_[0].children) {
        tokens[child] = &token;
        stack.emplace_back(child, 0);
    }
    while (!stack.empty()) {
        const auto [id, parent] = stack.back();
        stack.pop_back();
        fn(id, parent, *tokens[id], nodes_[id].terminal, nodes_[id].max_subtree_depth);
        for (const auto& [token, child] : nodes_[id].children) {
            tokens[child] = &token;
            stack.emplace_back(child, id);
        }
    }
}

}  // namespace tbi
