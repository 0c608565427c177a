#pragma once

#include <span>
#include <vector>

#include "tbi/term.hpp"

namespace tbi {

// Brute-force ground truth for the nesting relation. Shares only is_nested_in
// with production code; everything else is an independent exhaustive scan.
struct OracleTable {
    RelationTable supers;   // term -> super terms within the vocabulary
    RelationTable nesteds;  // term -> nested terms within the vocabulary
};

// Exhaustive double loop over distinct term pairs. Throws EmptyVocabularyError.
OracleTable oracle_build(std::span<const Term> vocabulary);

// Ground truth for nested-term queries: every vocabulary term nested in the
// query, by linear scan. The query itself is excluded and need not be in the
// vocabulary.
std::vector<Term> oracle_nested_query(std::span<const Term> vocabulary, const Term& query);

// Ground truth for super-term queries on arbitrary queries: every vocabulary
// term the query is nested in, by linear scan.
std::vector<Term> oracle_super_query(std::span<const Term> vocabulary, const Term& query);

}  // namespace tbi
