#pragma once

#include <vector>

#include "digraph.hpp"
#include "path_system.hpp"

namespace flamekit {

/// Hard size caps for the brute-force oracles; exceeding one is a refusal,
/// never a silent truncation.
inline constexpr int kBruteVertexCap = 8;
inline constexpr int kBrutePathCap = 24;

/// Every directed path matching the spec: source in sources, target in targets,
/// interior avoiding the kind's endpoint sets. Canonically ordered.
std::vector<Path> enumerate_paths(const RootedDigraph& d, const SystemSpec& spec);

/// Every internally disjoint (r,v)-path-system, the empty system included,
/// canonically ordered.
std::vector<PathSystem> brute_all_path_systems(const RootedDigraph& d, int v);

/// Independent recount of brute_all_path_systems by a structurally different
/// recursion (descending path index), for cross-validation.
long long count_path_systems_alt(const RootedDigraph& d, int v);

/// All realizable terminal-edge sets at v, i.e. the brute-force membership oracle.
std::vector<EdgeSet> brute_G(const RootedDigraph& d, int v);

/// All minimum separations of the spec's kind. On finite digraphs these are exactly
/// the separations admitting an orthogonal path-system. Kind xy candidates exclude
/// the endpoints.
std::vector<VertexSet> brute_separations(const RootedDigraph& d, const SystemSpec& spec);

/// Every (X,Y)-path-system (pairwise disjoint paths), the empty system included.
std::vector<PathSystem> brute_XY_systems(const RootedDigraph& d, const VertexSet& X,
                                         const VertexSet& Y);

}  // namespace flamekit
