#pragma once

#include <cstdint>

namespace tbi {

// Monotone count of elementary probe events: a hash-table lookup, a trie node
// visit, or an automaton transition. One counter per query stream; reset only
// between queries.
class ComparisonCounter {
public:
    void add(std::uint64_t n = 1) noexcept { probes_ += n; }
    std::uint64_t probes() const noexcept { return probes_; }
    void reset() noexcept { probes_ = 0; }

private:
    std::uint64_t probes_ = 0;
};

}  // namespace tbi
