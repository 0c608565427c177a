#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "tbi/term.hpp"

namespace tbi {

// Snapshot: the text form of a relation table, stable and diff-able.
//   line 1:        terms=<N><TAB>relations=<R>
//   next N lines:  <term>                   (byte-sorted)
//   next R lines:  <nested><TAB><super>     (byte-sorted)
// Equal tables serialize byte-identically regardless of which system built
// them. Buckets are never serialized.
std::string snapshot_to_string(const RelationTable& table);
void write_snapshot(const RelationTable& table, const std::filesystem::path& path);

// Throws IoError / SnapshotFormatError.
RelationTable read_snapshot(const std::filesystem::path& path);
RelationTable read_snapshot(std::istream& in);

}  // namespace tbi
