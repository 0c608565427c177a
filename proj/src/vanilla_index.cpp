#include "tbi/vanilla_index.hpp"

#include <algorithm>

#include "tbi/errors.hpp"

namespace tbi {

VanillaHashIndex VanillaHashIndex::build(std::span<const Term> vocabulary,
                                         ComparisonCounter* pair_counter) {
    if (vocabulary.empty()) throw EmptyVocabularyError();

    VanillaHashIndex index;
    index.terms_.reserve(vocabulary.size());
    for (const Term& t : vocabulary) {
        if (index.id_by_text_.count(t.text()) != 0) continue;
        index.id_by_text_.emplace(t.text(), static_cast<TermId>(index.terms_.size()));
        index.terms_.push_back(t);
    }
    const std::size_t v = index.terms_.size();
    index.supers_.resize(v);

    const Term* terms = index.terms_.data();
    for (std::size_t i = 0; i < v; ++i) {
        std::vector<TermId>& supers = index.supers_[i];
        for (std::size_t j = 0; j < v; ++j) {
            if (i == j) continue;
            if (pair_counter) pair_counter->add();
            if (is_nested_in(terms[i], terms[j])) supers.push_back(static_cast<TermId>(j));
        }
    }
    return index;
}

std::optional<std::vector<Term>> VanillaHashIndex::super_terms_of(
    const Term& query, ComparisonCounter& counter) const {
    counter.add();
    const auto it = id_by_text_.find(query.text());
    if (it == id_by_text_.end()) return std::nullopt;
    std::vector<Term> out;
    out.reserve(supers_[it->second].size());
    for (const TermId i : supers_[it->second]) out.push_back(terms_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> VanillaHashIndex::nested_terms_of(const Term& query,
                                                    ComparisonCounter& counter) const {
    std::vector<Term> out;
    for (Term& candidate : proper_ngrams(query)) {
        counter.add();
        if (id_by_text_.count(candidate.text()) != 0) out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RelationTable VanillaHashIndex::relation_table() const {
    RelationTable table;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        std::set<std::string>& supers = table[terms_[i].text()];
        for (const TermId s : supers_[i]) supers.insert(terms_[s].text());
    }
    return table;
}

}  // namespace tbi
