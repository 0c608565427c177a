#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tbi/counter.hpp"
#include "tbi/term.hpp"

namespace tbi {

// Quadratic hash-table baseline: every ordered pair of distinct vocabulary
// terms is tested with is_nested_in. Same output contract and retrieval
// semantics as the TBI super-term table.
class VanillaHashIndex {
public:
    using TermId = std::uint32_t;

    // Throws EmptyVocabularyError. The counter, when given, advances once per
    // ordered pair tested: exactly v*(v-1) for v distinct terms.
    static VanillaHashIndex build(std::span<const Term> vocabulary,
                                  ComparisonCounter* pair_counter = nullptr);

    std::size_t term_count() const noexcept { return terms_.size(); }

    std::optional<std::vector<Term>> super_terms_of(const Term& query,
                                                    ComparisonCounter& counter) const;
    std::vector<Term> nested_terms_of(const Term& query, ComparisonCounter& counter) const;

    RelationTable relation_table() const;

private:
    std::vector<Term> terms_;
    std::vector<std::vector<TermId>> supers_;
    std::unordered_map<std::string, TermId> id_by_text_;
};

}  // namespace tbi
