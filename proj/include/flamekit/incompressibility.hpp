#pragma once

#include <map>
#include <optional>
#include <vector>

#include "digraph.hpp"
#include "flame.hpp"
#include "path_system.hpp"

namespace flamekit {

/// Deletes the edges entering X and the edges leaving Y; no path from X to Y can
/// use them, so every joinability statement is unaffected. All operations in this
/// module work on the stripped digraph.
RootedDigraph strip_for_join(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y);

/// Witness that X is joinable to Y: a disjoint (X,Y)-path-system whose sources are
/// exactly X. Vertices in X n Y count as covered by convention (they are isolated
/// after stripping, so only the formal single-vertex path can serve them); they are
/// listed in `trivial` rather than as one-vertex paths.
struct JoinWitness {
    PathSystem system;
    VertexSet trivial;
};

std::optional<JoinWitness> is_joinable(const RootedDigraph& d, const VertexSet& X,
                                       const VertexSet& Y);

/// X joinable to Y and every covering system covers Y as well. Decided with
/// |Y| + 1 flow computations: some witness misses y iff X is joinable to Y - y
/// in d - y.
bool is_incompressible(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y);

/// For x in X with X - x joinable but X not: the least minimum (X,Y)-separation,
/// to which X - x is verified incompressible before returning.
Separation incompressible_separation(const RootedDigraph& d, const VertexSet& X,
                                     const VertexSet& Y, int x);

/// Given X joinable to Y and a sub-pair Xp joinable to Yp, finds Y'' between Yp
/// and Y with X joinable to Y'' and |Y'' \ Yp| <= |X \ Xp|.
VertexSet extend_joinable(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                          const VertexSet& Y, const VertexSet& Yp);

/// On finite digraphs "every finite enlargement of Xp within X is joinable"
/// collapses to plain joinability of X (enlargement is monotone downward in the
/// source set); computed that way.
bool finitely_extendable(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                         const VertexSet& Y);

/// Extends U by at most |U| vertices of X \ Xp to a set W whose deletion keeps Xp
/// finitely extendable toward what remains of Y. Runs one U-vertex at a time,
/// picking the first failing source by a greedy scan.
VertexSet delete_preserving(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                            const VertexSet& Y, const VertexSet& U);

enum class SearchStatus { found, none, indeterminate };

struct HitResult {
    SearchStatus status = SearchStatus::indeterminate;
    VertexSet chosen;       // O: sources of a joinable system meeting every family
    PathSystem witness;     // lives in the stripped digraph
};

/// Greedy path-by-path recursion; when the greedy dead-ends (finite families carry
/// no guarantee), falls back to exhaustive search on instances with at most 10
/// vertices and reports indeterminate beyond that.
HitResult hit_all_families(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                           const VertexSet& Y, const std::vector<VertexSet>& families);

/// The reversed subdivision gadget: in-edges of w become sources, out-edges of the
/// root become sinks, r and w disappear, every edge flips. An in-edge set lies in
/// the realizable family at w iff its source image is joinable to Y here.
struct AuxiliaryGraph {
    RootedDigraph graph;
    VertexSet X;
    VertexSet Y;
    std::map<int, Edge> source_edge;  // aux vertex -> ingoing edge of w
    std::map<int, Edge> sink_edge;    // aux vertex -> outgoing edge of the root
    std::map<Edge, int> edge_source;  // inverse of source_edge
};

AuxiliaryGraph build_auxiliary(const RootedDigraph& d, int w);

struct HitEdgesResult {
    SearchStatus status = SearchStatus::indeterminate;
    EdgeSet edges;  // I0*: realizable superset of I meeting every family
};

/// Realizable extension of I at w meeting every edge family, via the auxiliary
/// graph and hit_all_families. Requires every finite superset of I to be
/// realizable (verified when the surplus fits under the cap, assumed beyond it).
HitEdgesResult extend_hitting_G(const RootedDigraph& d, int w, const EdgeSet& I,
                                const std::vector<EdgeSet>& families,
                                int cap = kDefaultInDegreeCap);

struct BubbleResult {
    Separation separation;        // contains the head of the critical edge
    PathSystem system;            // (r,S)-system covering the separation
    bool target_in_separation = false;  // second proof branch: w joined S
};

/// For a realizable I at w, one edge short of every extension, and a critical edge
/// uv whose removal breaks I: a separation through v, covered by a root system in
/// which uv closes a path, shielding the other in-edges of v from the root.
BubbleResult bubble(const RootedDigraph& d, int w, const EdgeSet& I, Edge uv);

}  // namespace flamekit
