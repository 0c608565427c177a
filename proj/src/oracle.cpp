#include "tbi/oracle.hpp"

#include <algorithm>

#include "tbi/errors.hpp"

namespace tbi {

OracleTable oracle_build(std::span<const Term> vocabulary) {
    if (vocabulary.empty()) throw EmptyVocabularyError();

    // Distinct terms, first occurrence kept.
    std::vector<const Term*> distinct;
    distinct.reserve(vocabulary.size());
    std::set<std::string_view> seen;
    for (const Term& t : vocabulary)
        if (seen.insert(t.text()).second) distinct.push_back(&t);

    OracleTable table;
    for (const Term* t : distinct) {
        table.supers[t->text()];
        table.nesteds[t->text()];
    }
    for (const Term* a : distinct) {
        for (const Term* b : distinct) {
            if (a == b) continue;
            if (is_nested_in(*a, *b)) {
                table.supers[a->text()].insert(b->text());
                table.nesteds[b->text()].insert(a->text());
            }
        }
    }
    return table;
}

std::vector<Term> oracle_nested_query(std::span<const Term> vocabulary, const Term& query) {
    std::vector<Term> out;
    std::set<std::string_view> seen;
    for (const Term& t : vocabulary)
        if (seen.insert(t.text()).second && is_nested_in(t, query)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> oracle_super_query(std::span<const Term> vocabulary, const Term& query) {
    std::vector<Term> out;
    std::set<std::string_view> seen;
    for (const Term& t : vocabulary)
        if (seen.insert(t.text()).second && is_nested_in(query, t)) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tbi
