#include "tbi/snapshot.hpp"

#include <fstream>
#include <sstream>

#include "tbi/errors.hpp"

namespace tbi {

std::string snapshot_to_string(const RelationTable& table) {
    std::size_t relations = 0;
    for (const auto& [term, supers] : table) relations += supers.size();

    std::string out;
    out += "terms=" + std::to_string(table.size()) + "\trelations=" + std::to_string(relations) +
           "\n";
    for (const auto& [term, supers] : table) {
        (void)supers;
        out += term;
        out += '\n';
    }
    for (const auto& [term, supers] : table) {
        for (const std::string& super : supers) {
            out += term;
            out += '\t';
            out += super;
            out += '\n';
        }
    }
    return out;
}

void write_snapshot(const RelationTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open snapshot for writing: " + path.string());
    out << snapshot_to_string(table);
    if (!out) throw IoError("write error: " + path.string());
}

RelationTable read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open snapshot: " + path.string());
    return read_snapshot(in);
}

RelationTable read_snapshot(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw SnapshotFormatError("missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::size_t term_count = 0;
    std::size_t relation_count = 0;
    {
        std::istringstream header(line);
        std::string terms_field;
        std::string relations_field;
        if (!std::getline(header, terms_field, '\t') || !std::getline(header, relations_field) ||
            terms_field.rfind("terms=", 0) != 0 || relations_field.rfind("relations=", 0) != 0)
            throw SnapshotFormatError("bad header: '" + line + "'");
        try {
            term_count = std::stoull(terms_field.substr(6));
            relation_count = std::stoull(relations_field.substr(10));
        } catch (const std::exception&) {
            throw SnapshotFormatError("bad header counts: '" + line + "'");
        }
    }

    RelationTable table;
    for (std::size_t i = 0; i < term_count; ++i) {
        if (!std::getline(in, line)) throw SnapshotFormatError("truncated term section");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find('\t') != std::string::npos)
            throw SnapshotFormatError("term line contains a tab: '" + line + "'");
        if (!table.emplace(line, std::set<std::string>{}).second)
            throw SnapshotFormatError("duplicate term: '" + line + "'");
    }
    for (std::size_t i = 0; i < relation_count; ++i) {
        if (!std::getline(in, line)) throw SnapshotFormatError("truncated relation section");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw SnapshotFormatError("relation line without a tab: '" + line + "'");
        const std::string nested = line.substr(0, tab);
        const std::string super = line.substr(tab + 1);
        const auto it = table.find(nested);
        if (it == table.end())
            throw SnapshotFormatError("relation references unknown term: '" + nested + "'");
        if (table.find(super) == table.end())
            throw SnapshotFormatError("relation references unknown super: '" + super + "'");
        it->second.insert(super);
    }
    if (std::getline(in, line) && !line.empty())
        throw SnapshotFormatError("trailing content after relation section");
    return table;
}

}  // namespace tbi
