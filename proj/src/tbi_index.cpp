#include "tbi/tbi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "tbi/errors.hpp"

namespace tbi {

TbiIndex TbiIndex::build(std::span<const Term> vocabulary, ComparisonCounter* candidate_counter,
                         BuildOptions options) {
    TbiIndex index(options);
    index.index_batch(vocabulary, candidate_counter);
    return index;
}

void TbiIndex::index_batch(std::span<const Term> vocabulary,
                           ComparisonCounter* candidate_counter) {
    if (frozen_) throw IndexFrozenError();
    if (vocabulary.empty()) throw EmptyVocabularyError();

    // Ascending by character length; stable keeps ties in input order.
    std::vector<const Term*> sorted;
    sorted.reserve(vocabulary.size());
    for (const Term& t : vocabulary) sorted.push_back(&t);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Term* x, const Term* y) {
        return x->metrics().length < y->metrics().length;
    });

    if (!terms_.empty() && sorted.front()->metrics().length < max_indexed_length_)
        throw std::invalid_argument(
            "index_batch: batch contains a term shorter than already-indexed terms");

    for (const Term* t : sorted) {
        if (id_by_text_.count(t->text()) != 0) continue;  // duplicate, indexed once
        const TermId id = static_cast<TermId>(terms_.size());
        terms_.push_back(*t);
        supers_.emplace_back();
        id_by_text_.emplace(t->text(), id);
        insert_term_in_bucket(id, t->metrics());
        update_nested_terms(id, candidate_counter);
        max_indexed_length_ = t->metrics().length;
    }
}

void TbiIndex::insert_term_in_bucket(TermId id, const TermMetrics& m) {
    buckets_[m.nonspace_length][m.token_count][m.length][m.largest_token_length].push_back(id);
}

void TbiIndex::update_nested_terms(TermId id, ComparisonCounter* counter) {
    const Term& new_term = terms_[id];
    const TermMetrics& m = new_term.metrics();
    for (const auto& [k1, token_level] : buckets_) {
        if (options_.filter_nonspace && k1 >= m.nonspace_length) continue;
        for (const auto& [k2, length_level] : token_level) {
            if (options_.filter_token_count && k2 >= m.token_count) continue;
            for (const auto& [k3, largest_level] : length_level) {
                if (options_.filter_length && k3 >= m.length) continue;
                for (const auto& [k4, leaf] : largest_level) {
                    if (options_.filter_largest_token && k4 > m.largest_token_length) continue;
                    for (const TermId candidate : leaf) {
                        if (counter) counter->add();
                        if (is_nested_in(terms_[candidate], new_term))
                            supers_[candidate].push_back(id);
                    }
                }
            }
        }
    }
}

void TbiIndex::discard_buckets() {
    buckets_ = BucketTable();
    frozen_ = true;
}

std::optional<std::vector<Term>> TbiIndex::super_terms_of(const Term& query,
                                                          ComparisonCounter& counter) const {
    counter.add();
    const auto it = id_by_text_.find(query.text());
    if (it == id_by_text_.end()) return std::nullopt;
    const std::vector<TermId>& ids = supers_[it->second];
    std::vector<Term> out;
    out.reserve(ids.size());
    for (const TermId i : ids) out.push_back(terms_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Term> TbiIndex::nested_terms_of(const Term& query, ComparisonCounter& counter) const {
    std::vector<Term> out;
    for (Term& candidate : proper_ngrams(query)) {
        counter.add();
        if (id_by_text_.count(candidate.text()) != 0) out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RelationTable TbiIndex::relation_table() const {
    RelationTable table;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        std::set<std::string>& supers = table[terms_[i].text()];
        for (const TermId s : supers_[i]) supers.insert(terms_[s].text());
    }
    return table;
}

TbiIndex TbiIndex::from_relation_table(const RelationTable& table) {
    TbiIndex index;
    index.terms_.reserve(table.size());
    for (const auto& [text, supers] : table) {
        (void)supers;
        const auto term = Term::normalize(text);
        if (!term || term->text() != text)
            throw SnapshotFormatError("table key is not a normalized term: '" + text + "'");
        const TermId id = static_cast<TermId>(index.terms_.size());
        index.terms_.push_back(*term);
        index.id_by_text_.emplace(text, id);
    }
    index.supers_.resize(index.terms_.size());
    for (const auto& [text, supers] : table) {
        const TermId id = index.id_by_text_.at(text);
        for (const std::string& super_text : supers) {
            const auto it = index.id_by_text_.find(super_text);
            if (it == index.id_by_text_.end())
                throw SnapshotFormatError("super term is not a vocabulary key: '" + super_text +
                                          "'");
            index.supers_[id].push_back(it->second);
        }
    }
    index.frozen_ = true;
    return index;
}

}  // namespace tbi
