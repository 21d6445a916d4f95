#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vhl/instance.hpp"
#include "vhl/kpartite.hpp"
#include "vhl/reductions.hpp"

namespace vhl {

using Json = nlohmann::ordered_json;

/// Canonical text form of a cost: "inf" for infinity, a plain integer when
/// the value is integral, shortest round-trip decimal otherwise.
std::string format_cost(double v);
inline std::string format_cost(ExtCost v) { return format_cost(v.raw()); }

/// Cost <-> JSON value: infinity persists as the string "inf"; integral
/// values persist as JSON integers so exactness survives the file.
Json cost_to_json(double v);
double cost_from_json(const Json& j, const std::string& where);

// Graph files: {"part_sizes": [..], "weights": {"i-j": [[..]] }} with one
// dense integer matrix per part pair i<j.
Json graph_to_json(const KPartiteGraph& g);
KPartiteGraph graph_from_json(const Json& j);

// Instance files: n, sigma, A (n rows of n cost entries), B (n rows of
// sigma), obs, start_state, and optional symbol_names.
Json instance_to_json(const HmmInstance& inst, const ObservationSequence& obs);
std::pair<HmmInstance, ObservationSequence> instance_from_json(const Json& j);

// Certificate files: {"vectors": [[..], ..]}, T+1 rows of n cost entries.
Json certificate_to_json(const std::vector<CostVector>& vectors);
std::vector<CostVector> certificate_from_json(const Json& j);

/// Companion record emitted next to a reduced instance: which embedding
/// produced it, its cost offset, and the layout needed to map a decoded
/// path back to graph vertices.
struct ReductionMetadata {
  std::string reduction;  // "triangle" | "kclique" | "walk"
  ExtCost cost_offset;
  std::optional<TriangleLayout> triangle;
  std::optional<CliqueLayout> clique;
  std::optional<WalkLayout> walk;
};

Json metadata_to_json(const ReductionMetadata& meta);
ReductionMetadata metadata_from_json(const Json& j);

/// Renders with a fixed layout (2-space indent, trailing newline), so
/// equal documents produce byte-identical files.
std::string to_file_string(const Json& j);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
Json parse_json_file(const std::string& path);

}  // namespace vhl
