#pragma once

#include <string>

#include <json.hpp>

#include "digraph.hpp"
#include "extend.hpp"
#include "path_system.hpp"

namespace flamekit {

using json = nlohmann::json;

/// Canonical text form: sorted keys (the library's default object), two-space
/// indent, trailing newline, integers and strings only. Identical inputs always
/// produce identical bytes.
std::string canonical_dump(const json& j);

/// { "root": id, "vertex_map": {id: index}, "edges": [[tail, head], ...] }
json digraph_to_json(const RootedDigraph& d);
RootedDigraph digraph_from_json(const json& j);

/// Paths as arrays of vertex ids.
json paths_to_json(const RootedDigraph& d, const PathSystem& ps);

/// { "kind": ..., "paths": [...], "separation": [...], "root": id, "vertex_map": ... }
json pair_to_json(const RootedDigraph& d, const OrthogonalPair& pair);

json certificate_to_json(const LargeFlameCertificate& cert);

/// Rebuilds the carried subgraph of a certificate (for re-checking it).
RootedDigraph f_star_from_certificate(const json& j);

}  // namespace flamekit
