#pragma once

#include <map>
#include <optional>

#include "digraph.hpp"
#include "path_system.hpp"

namespace flamekit {

/// Interval-lattice checks enumerate up to 2^k candidate edge sets per vertex,
/// where k is the in-edge surplus over the base subgraph; past this cap they
/// refuse instead of guessing.
inline constexpr int kDefaultInDegreeCap = 12;

/// An internally disjoint root-to-v system whose terminal edges are exactly `edges`.
struct GWitness {
    int vertex = -1;
    EdgeSet edges;
    PathSystem system;
};

/// Is I realizable as the terminal-edge set of an internally disjoint (r,v)-system?
/// Decided by one flow computation: I is realizable iff the restriction of d to I
/// at v has local connectivity |I|.
std::optional<GWitness> is_in_G(const RootedDigraph& d, int v, const EdgeSet& I);

struct FlameCheck {
    bool ok = false;
    int failing_vertex = -1;
    std::map<int, GWitness> witnesses;
};

/// A digraph is a flame when every vertex's full in-edge set is realizable.
FlameCheck is_flame(const RootedDigraph& f);

/// Maximum system inside L, minimum separation of the host: orthogonal by counting
/// whenever L preserves the local connectivity (and the direct root edge).
struct LargenessWitness {
    int vertex = -1;
    PathSystem system;      // lies in L - rv
    Separation separation;  // valid in D - rv
    bool rv_preserved = true;
};

std::optional<LargenessWitness> is_v_large(const RootedDigraph& L, const RootedDigraph& D, int v);

struct LargeCheck {
    bool ok = false;
    int failing_vertex = -1;
    std::map<int, LargenessWitness> witnesses;  // only vertices whose in-edges shrank
};

/// Largeness via the shrunken-in-neighbourhood shortcut: only vertices with
/// in_L(v) strictly inside in_D(v) need checking.
LargeCheck is_large(const RootedDigraph& L, const RootedDigraph& D);

struct QuasiFlameCheck {
    bool ok = false;
    int vertex = -1;
    EdgeSet failing;  // first interval set that is not realizable
};

/// d is a g-quasi-flame when, at every non-root vertex, every edge set between
/// in_g(v) and in_d(v) is realizable in d.
QuasiFlameCheck is_quasi_flame(const RootedDigraph& d, const RootedDigraph& g,
                               int cap = kDefaultInDegreeCap);

/// The per-vertex check behind is_quasi_flame: first failing interval set, if any.
std::optional<EdgeSet> quasi_flame_violation_at(const RootedDigraph& d, const RootedDigraph& g,
                                                int v, int cap = kDefaultInDegreeCap);

struct SuperlargeCheck {
    bool ok = false;
    std::optional<Edge> failing_edge;
    std::map<Edge, EdgeSet> witnesses;  // per host-only edge: the blocking set I
};

/// For every host edge uv missing from g: does some realizable I at v stop being
/// realizable when uv joins it? When yes everywhere, g-largeness transfers to the host.
SuperlargeCheck superlarge_condition(const RootedDigraph& g, const RootedDigraph& d,
                                     int cap = kDefaultInDegreeCap);

/// Greedy edge saturation: grows f to a subgraph Z that is an f-quasi-flame and to
/// which no single host edge can be added without breaking the property.
/// Candidate edges are tried in lexicographic (head, tail) order until a full pass
/// adds nothing.
RootedDigraph maximal_quasi_flame(const RootedDigraph& d, const RootedDigraph& f,
                                  int cap = kDefaultInDegreeCap);

}  // namespace flamekit
