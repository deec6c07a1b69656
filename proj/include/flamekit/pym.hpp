#pragma once

#include <set>

#include "digraph.hpp"
#include "path_system.hpp"

namespace flamekit {

/// Merges two (X,Y)-path-systems into one that keeps all of P's sources and all
/// of Q's targets. The result lives inside the union of the two systems' edges
/// and minimizes its total edge count.
PathSystem pym_merge(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y,
                     const PathSystem& P, const PathSystem& Q);

/// Single-target variant: keeps P's sources and Q's terminal edges. Implemented by
/// subdividing the target's in-edges, merging, and translating back.
PathSystem pym_merge_to_vertex(const RootedDigraph& d, const VertexSet& X, int y,
                               const PathSystem& P, const PathSystem& Q);

/// Given a realizable in-edge set I at v (in d - rv) and a minimum root-to-v
/// separation S of d, produces a maximum system orthogonal to S whose terminal
/// edges cover I.
PathSystem covering_menger_system(const RootedDigraph& d, int v, const EdgeSet& I,
                                  const Separation& S);

/// Same coverage inside a connectivity-preserving spanning subgraph L: the result
/// lies in L, is maximum in both L and D (after removing the trivial root edge
/// path), and covers I. The trivial path appears exactly when rv is in I.
PathSystem covering_in_large(const RootedDigraph& L, const RootedDigraph& D, int v,
                             const EdgeSet& I);

/// Preference-biased variant used by the extension loop: among valid outputs,
/// paths avoid edges outside `prefer` where possible. Same contract otherwise.
PathSystem covering_in_large_pref(const RootedDigraph& L, const RootedDigraph& D, int v,
                                  const EdgeSet& I, const std::set<Edge>* prefer);

}  // namespace flamekit
