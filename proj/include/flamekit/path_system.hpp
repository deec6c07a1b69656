#pragma once

#include <string>
#include <vector>

#include "digraph.hpp"

namespace flamekit {

/// Disjointness contract of a path system.
///   xy: shared endpoints x and y, pairwise internally disjoint
///   XY: endpoints drawn from vertex sets, pairwise disjoint, internally disjoint from X u Y
///   xY: shared source x, pairwise disjoint but for x, internally disjoint from Y
///   Xy: shared target y, pairwise disjoint but for y, internally disjoint from X
enum class PathKind { xy, XY, xY, Xy };

std::string to_string(PathKind k);
PathKind path_kind_from_string(const std::string& s);

/// A directed path as its vertex sequence (at least two vertices).
using Path = std::vector<int>;

struct PathSystem {
    PathKind kind = PathKind::xy;
    std::vector<Path> paths;  // kept sorted lexicographically

    static PathSystem make(PathKind kind, std::vector<Path> paths);

    int size() const { return static_cast<int>(paths.size()); }
    bool empty() const { return paths.empty(); }

    VertexSet initial_vertices() const;   // V-
    VertexSet terminal_vertices() const;  // V+
    EdgeSet initial_edges() const;        // E-
    EdgeSet terminal_edges() const;       // E+
    VertexSet vertices() const;
    EdgeSet edges() const;

    bool operator==(const PathSystem&) const = default;
};

/// Endpoint context for validating a system: for the x-/y-sided kinds the
/// corresponding set must be a singleton.
struct SystemSpec {
    PathKind kind;
    VertexSet sources;
    VertexSet targets;
};

/// Checks every path is a directed path of `g` with endpoints and disjointness
/// matching the spec; throws domain_error naming the violated clause.
void check_path_system(const RootedDigraph& g, const PathSystem& ps, const SystemSpec& spec);

/// Non-throwing variant.
bool path_system_ok(const RootedDigraph& g, const PathSystem& ps, const SystemSpec& spec);

struct Separation {
    VertexSet vertices;
    bool operator==(const Separation&) const = default;
};

struct OrthogonalPair {
    PathSystem system;
    Separation separation;
};

/// Does S meet every path of the given kind between the endpoint sets? Endpoint
/// membership counts as meeting. For kind xy the separation may not use x or y
/// (callers enforce that on candidate sets).
bool is_separation(const RootedDigraph& g, const SystemSpec& spec, const VertexSet& S);

/// |V(P) n S| = 1 for every path and S is covered by the system's vertices.
bool orthogonal(const PathSystem& ps, const VertexSet& S);

/// True when some path of the spec's kind avoids `avoid` entirely.
/// The workhorse behind separation checks and the lattice order.
bool exists_path_avoiding(const RootedDigraph& g, const SystemSpec& spec, const VertexSet& avoid);

}  // namespace flamekit
