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

// Candidate-bucket filters applied while scanning for nested terms of a newly
// indexed term. Disabling a filter widens the candidate scan but must never
// change the resulting table; only the candidate count grows.
struct BuildOptions {
    bool filter_nonspace = true;       // bucket key < new term's nonspace_length
    bool filter_token_count = true;    // bucket key < new term's token_count
    bool filter_length = true;         // bucket key < new term's length
    bool filter_largest_token = true;  // bucket key <= new term's largest_token_length
};

// Hybrid term store: a super-term table giving O(1) super-term retrieval plus
// a four-level bucket table, keyed by (nonspace_length, token_count, length,
// largest_token_length), that exists only while indexing and can be discarded
// afterwards.
//
// Indexing processes terms in ascending character length, so no already
// indexed term can be a super term of the incoming one; the incoming term is
// bucketed once and the strictly-smaller buckets are scanned for its nested
// terms, whose super sets gain the new term. A single pass fills the table.
class TbiIndex {
public:
    using TermId = std::uint32_t;

    TbiIndex() = default;
    explicit TbiIndex(BuildOptions options) : options_(options) {}

    static TbiIndex build(std::span<const Term> vocabulary,
                          ComparisonCounter* candidate_counter = nullptr,
                          BuildOptions options = {});

    // Indexes one batch (sorted internally; duplicates of already indexed
    // terms are skipped). A later batch may not contain a term shorter than
    // one already indexed — that would break the single-pass argument above.
    // Throws IndexFrozenError once the bucket table has been discarded and
    // EmptyVocabularyError on an empty batch. The counter, when given,
    // advances once per candidate term examined.
    void index_batch(std::span<const Term> vocabulary,
                     ComparisonCounter* candidate_counter = nullptr);

    // Releases the bucket table. Retrieval is unaffected; further indexing
    // throws. Idempotent.
    void discard_buckets();
    bool buckets_discarded() const noexcept { return frozen_; }

    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool contains(const Term& query) const { return id_by_text_.count(query.text()) != 0; }

    // One table probe (counter += 1). Sorted super terms of an indexed query,
    // or nullopt when the query was never indexed (NotInVocabulary).
    std::optional<std::vector<Term>> super_terms_of(const Term& query,
                                                    ComparisonCounter& counter) const;

    // Probes each distinct proper n-gram of the query once (counter += one
    // per probe) and keeps the ones indexed. The query itself need not be in
    // the vocabulary; a single-token query yields nothing with zero probes.
    std::vector<Term> nested_terms_of(const Term& query, ComparisonCounter& counter) const;

    RelationTable relation_table() const;

    // Rebuilds a queryable (frozen) index from a deserialized table. Every
    // super text must itself be a key.
    static TbiIndex from_relation_table(const RelationTable& table);

private:
    using LeafBucket = std::vector<TermId>;
    using LargestTokenLevel = std::unordered_map<std::uint32_t, LeafBucket>;
    using LengthLevel = std::unordered_map<std::uint32_t, LargestTokenLevel>;
    using TokenCountLevel = std::unordered_map<std::uint32_t, LengthLevel>;
    using BucketTable = std::unordered_map<std::uint32_t, TokenCountLevel>;

    void insert_term_in_bucket(TermId id, const TermMetrics& m);
    void update_nested_terms(TermId id, ComparisonCounter* counter);

    BuildOptions options_;
    std::vector<Term> terms_;
    std::vector<std::vector<TermId>> supers_;  // per term id, ids of its super terms
    std::unordered_map<std::string, TermId> id_by_text_;
    BucketTable buckets_;
    bool frozen_ = false;
    std::uint32_t max_indexed_length_ = 0;
};

}  // namespace tbi
