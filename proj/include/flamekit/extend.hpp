#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "flame.hpp"

namespace flamekit {

/// Pointwise join of separations: of all vertices appearing in the collection,
/// keeps those separated from the root by every member. The result is verified
/// to still separate x before returning.
VertexSet separation_supremum(const RootedDigraph& d, int x,
                              const std::vector<VertexSet>& collection);

/// Inside a quasi-flame L over the base subgraph G: a realizable in-edge superset
/// I* of in_G(v) whose restriction at v leaves L a G-quasi-flame. Enumerates the
/// interval sets that the bare restriction breaks ("relevant" sets), their
/// single-edge repairs, and picks the smallest realizable hitting extension.
EdgeSet key_I_star(const RootedDigraph& L, const RootedDigraph& G, int v,
                   int cap = kDefaultInDegreeCap);

enum class ExtendMode { faithful, finite_direct };

std::string to_string(ExtendMode mode);
ExtendMode extend_mode_from_string(const std::string& s);

struct ExtendOptions {
    ExtendMode mode = ExtendMode::finite_direct;
    std::vector<int> vertex_order;  // empty: every non-root vertex in index order
    bool step_checks = false;       // verify chain invariants after every step
    int cap = kDefaultInDegreeCap;
    std::optional<long long> seed;  // provenance only, recorded in the certificate
};

/// One step of the growth recursion. The grown chain only gains edges, the host
/// chain only loses them, the grown stays inside the host, and once a vertex is
/// processed its in-edges agree in both chains and never change again.
struct ExtensionState {
    RootedDigraph grown;            // increasing flame chain
    RootedDigraph host;             // decreasing ambient chain
    std::vector<int> processed;
    PathSystem last_covering;       // the system committed at the newest vertex
};

struct LargeFlameCertificate {
    RootedDigraph f_star;
    std::map<int, GWitness> flame_witnesses;
    std::map<int, LargenessWitness> largeness_witnesses;
    std::string mode;
    std::vector<int> vertex_order;
    std::optional<long long> seed;
    bool used_fallback = false;  // finite-direct rerouted through the quasi-flame path
};

/// Grows the flame F into a flame of D that preserves the local connectivity from
/// the root to every vertex. The returned certificate is rebuilt from scratch by
/// re-checking flameness and largeness; an unverifiable result throws instead of
/// being emitted.
LargeFlameCertificate extend_flame(const RootedDigraph& D, const RootedDigraph& F,
                                   const ExtendOptions& opts = {});

/// Extension of the edgeless flame. Additionally asserts the exact identity
/// kappa_D(r,v) = kappa_F*(r,v) = |in_F*(v)| at every vertex.
LargeFlameCertificate lovasz(const RootedDigraph& D, const ExtendOptions& opts = {});

}  // namespace flamekit
