#pragma once

#include "digraph.hpp"
#include "path_system.hpp"

namespace flamekit {

/// Local connectivity from the root: the size of a largest internally disjoint
/// system of root-to-v paths. The direct root edge counts via the trivial path.
int kappa(const RootedDigraph& d, int v);

/// A maximum internally disjoint (r,v)-path-system. Deterministic: shortest
/// augmenting paths, lowest vertex index first.
PathSystem max_disjoint_paths(const RootedDigraph& d, int v);

/// Maximum system plus orthogonal minimum separation for v, both taken in D - rv.
OrthogonalPair erdos_menger_pair(const RootedDigraph& d, int v);

/// Set version: (X,Y)-path-system with an orthogonal (X,Y)-separation.
/// X and Y must be disjoint.
OrthogonalPair erdos_menger_pair_sets(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y);

/// The lattice order on (X,Y)-separations: S before T iff S is an (X,T)-separation.
bool leq_separation(const RootedDigraph& d, const VertexSet& X, const VertexSet& S,
                    const VertexSet& T);

/// Same order for root-to-v separations (sets excluding r and v, taken in D - rv).
bool leq_separation_rv(const RootedDigraph& d, int v, const VertexSet& S, const VertexSet& T);

/// Least / greatest minimum (X,Y)-separation in the lattice order.
Separation min_separation(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y);
Separation max_separation(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y);

/// Least / greatest minimum root-to-v separation, taken in D - rv.
Separation min_separation_rv(const RootedDigraph& d, int v);
Separation max_separation_rv(const RootedDigraph& d, int v);

struct AugmentResult {
    bool augmented = false;
    // First branch: the strictly larger system plus what it gained.
    PathSystem system;
    int new_source = -1;
    int new_sink = -1;
    int edge_delta = 0;  // |E(P) symdiff E(P')|
    // Second branch: a separation orthogonal to the input system.
    Separation separation;
};

/// One augmenting-walk step on an (X,Y)-path-system: either grows both endpoint
/// sets by exactly one vertex, or certifies maximality with an orthogonal separation.
AugmentResult augment(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y,
                      const PathSystem& P);

}  // namespace flamekit
