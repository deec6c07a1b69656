#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace flamekit {

/// Directed edge between dense vertex indices of one particular digraph value.
struct Edge {
    int tail = -1;
    int head = -1;
    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free vertex index set.
using VertexSet = std::vector<int>;
/// Sorted, duplicate-free edge set.
using EdgeSet = std::vector<Edge>;

/// Raw interchange form straight out of the text parser, before any structural
/// invariant is enforced. `validate` reports problems; `RootedDigraph::from_data`
/// rejects them.
struct DigraphData {
    std::string root;
    std::vector<std::string> vertices;  // explicit declarations (isolated vertices)
    std::vector<std::pair<std::string, std::string>> edges;
};

struct Diagnostic {
    std::string kind;    // "loop", "parallel-edge", "root-in-edge", "undeclared-endpoint", "no-root", "bad-id"
    std::string detail;
    bool operator==(const Diagnostic&) const = default;
};

/// Empty result iff `data` describes a valid rooted digraph: simple (no loops,
/// no parallel edges), root declared with no ingoing edges, all endpoints known.
std::vector<Diagnostic> validate(const DigraphData& data);

/// Simple finite digraph with a distinguished root that has no ingoing edges.
/// Values are immutable; every operation returns a fresh graph. Vertex names are
/// opaque strings mapped to dense indices in declaration order, so two graphs with
/// equal name sequences share their vertex indexing.
class RootedDigraph {
public:
    RootedDigraph() = default;

    /// Throws domain_error (listing the diagnostics) if `data` is invalid.
    static RootedDigraph from_data(const DigraphData& data);

    static RootedDigraph build(const std::string& root,
                               const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return edge_count_; }
    int root() const { return root_; }

    const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> find(const std::string& name) const;
    /// Index of `name`; domain_error if the vertex does not exist.
    int vertex(const std::string& name) const;

    /// Heads of edges leaving v, ascending.
    const std::vector<int>& out(int v) const { return out_[static_cast<size_t>(v)]; }
    /// Tails of edges entering v, ascending.
    const std::vector<int>& in(int v) const { return in_[static_cast<size_t>(v)]; }

    bool has_edge(int tail, int head) const;
    bool has_edge(Edge e) const { return has_edge(e.tail, e.head); }

    EdgeSet in_edges(int v) const;
    EdgeSet out_edges(int v) const;
    EdgeSet edges() const;

    /// D restricted to I at v: every ingoing edge of v outside `keep` is deleted.
    /// Requires v != root and keep a subset of the ingoing edges of v.
    RootedDigraph restrict_at(int v, const EdgeSet& keep) const;

    /// Deletes the vertices (with all incident edges). Deleting the root is rejected.
    RootedDigraph delete_vertices(const VertexSet& xs) const;
    RootedDigraph delete_vertex(int v) const { return delete_vertices({v}); }

    RootedDigraph delete_edges(const EdgeSet& es) const;
    RootedDigraph delete_edge(Edge e) const { return delete_edges({e}); }

    /// Adds one edge; endpoints must exist, no loop, no duplicate, head != root.
    RootedDigraph add_edge(Edge e) const;
    RootedDigraph add_edges(const EdgeSet& es) const;

    /// True when both graphs carry the same vertex name sequence, i.e. indices align.
    bool same_vertices(const RootedDigraph& other) const;
    /// same_vertices and the edge set is contained in `host`'s (spanning subgraph test).
    bool spanning_subgraph_of(const RootedDigraph& host) const;

    /// Value equality: same root name, same vertex name set, same edge name pairs.
    bool operator==(const RootedDigraph& other) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> out_, in_;
    int root_ = -1;
    int edge_count_ = 0;

    void insert_edge_unchecked(int tail, int head);
    static RootedDigraph from_checked(std::string root,
                                      std::vector<std::string> vertices,
                                      const std::vector<std::pair<std::string, std::string>>& edges);
};

/// Maps a vertex of `from` to the same-named vertex of `to` (nullopt if absent).
std::optional<int> map_vertex(const RootedDigraph& from, int v, const RootedDigraph& to);

/// Rebuilds `g` on `host`'s vertex ordering. The two graphs must carry the same
/// vertex names and the same root; afterwards indices align, so subgraph relations
/// between independently parsed files go through this.
RootedDigraph reindex_like(const RootedDigraph& g, const RootedDigraph& host);

/// Edge-list text format. First non-comment line is `root <id>`; a one-token line
/// declares an isolated vertex; a two-token line `<tail> <head>` declares an edge.
/// `#` starts a comment. Duplicate edge lines are a hard parse error.
DigraphData parse_digraph(const std::string& text);

/// Canonical text form; parse(serialize(d)) == d for every valid digraph.
std::string serialize(const RootedDigraph& d);

/// Graphviz export; the root is drawn double-circled.
std::string to_dot(const RootedDigraph& d);

/// True iff `id` matches [A-Za-z0-9_.-]+.
bool valid_vertex_id(const std::string& id);

}  // namespace flamekit
