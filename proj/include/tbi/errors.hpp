#pragma once

#include <stdexcept>
#include <string>

namespace tbi {

struct EmptyVocabularyError : std::runtime_error {
    EmptyVocabularyError() : std::runtime_error("vocabulary is empty") {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct EncodingError : std::runtime_error {
    explicit EncodingError(const std::string& what) : std::runtime_error(what) {}
};

struct SnapshotFormatError : std::runtime_error {
    explicit SnapshotFormatError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidGeneratorSpec : std::runtime_error {
    explicit InvalidGeneratorSpec(const std::string& what) : std::runtime_error(what) {}
};

// Further indexing attempted after the bucket table was discarded.
struct IndexFrozenError : std::logic_error {
    IndexFrozenError() : std::logic_error("bucket table discarded; index is frozen") {}
};

// Two systems that must agree returned different result sets.
struct ResultMismatchError : std::runtime_error {
    explicit ResultMismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tbi
