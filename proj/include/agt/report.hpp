#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agt/analysis.hpp"

namespace agt {

// 64-bit FNV-1a digest of a byte string, and its 16-hex-digit rendering.
std::uint64_t fnv1a(const std::string& data);
std::string fnv1a_hex(const std::string& data);

// Graphviz document with the terrain (goal nodes double-ringed and annotated
// with the blue types they serve, edges labeled with the per-graph weights)
// and one switching graph per red type.
std::string terrain_dot(const ValidatedGame& g);

// Belief rows as a tab-separated table, one row per history.
std::string belief_table_tsv(const Session& s, const std::vector<BeliefRow>& rows);

// Canonical JSON documents; reruns on the same inputs are byte-identical.
std::string solve_report_json(const Session& s, const XdoResult& result);
std::string voi_report_json(const VoiReport& rep);
std::string deltas_report_json(const DeceptionReport& rep);

// Manifest over (file name, file content) pairs: byte size and digest each.
std::string manifest_json(const std::vector<std::pair<std::string, std::string>>& artifacts);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace agt
