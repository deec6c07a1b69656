#pragma once

// Vertex-splitting flow gadget shared by the Menger, Pym and joinability code.
// Node layout: 0 = super source, 1 = super sink, in(v) = 2 + 2v, out(v) = 3 + 2v.
// Internal arcs carry capacity 1; graph edges are uncuttable (large capacity), so
// every minimum cut consists of internal or attach arcs and reads off as a vertex set.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "flamekit/digraph.hpp"
#include "flamekit/flow.hpp"
#include "flamekit/path_system.hpp"

namespace flamekit::detail {

struct GadgetOptions {
    VertexSet sources;
    VertexSet sinks;
    bool shared_source = false;     // kinds xy / xY: many paths may leave the one source
    bool shared_sink = false;       // kinds xy / Xy: many paths may enter the one sink
    bool cuttable_sources = false;  // cap-1 attach arcs: cutting one puts the vertex in S
    bool cuttable_sinks = false;
    bool circulation = false;       // big return arc T* -> S*, for cost minimization
    VertexSet no_internal;          // vertices that may not appear inside a path
    // Edges whose arcs get negative cost so any maximum/negative-cost flow must use
    // them (forced terminal edges of covering systems, required sources/sinks use
    // the attach variant below).
    EdgeSet forced_edges;
    VertexSet forced_sources;
    VertexSet forced_sinks;
    // Cost-1 edges are avoided when a zero-cost alternative exists (preference bias);
    // nullptr means all edges cost 0.
    const std::set<Edge>* preferred = nullptr;
};

class SplitGadget {
public:
    SplitGadget(const RootedDigraph& g, const GadgetOptions& opt);

    flow::Network& net() { return net_; }
    const flow::Network& net() const { return net_; }

    int source() const { return 0; }
    int sink() const { return 1; }

    /// Runs plain BFS max-flow when no costs are in play, otherwise min-cost max-flow.
    int run_max_flow();

    /// Augments only while a negative-cost path remains (covering without maximizing).
    void run_while_negative();

    /// Imposes an existing path system as initial flow (paths must fit the gadget).
    void impose(const PathSystem& ps);

    /// All forced arcs saturated?
    bool forced_satisfied() const;

    /// Decomposes the current flow into vertex paths, deterministically.
    std::vector<Path> decompose() const;

    /// Source-side minimum cut as a vertex set (closest cut).
    VertexSet min_cut_vertices() const;

    /// Sink-side minimum cut as a vertex set (farthest cut).
    VertexSet max_cut_vertices() const;

    bool has_costs() const { return has_costs_; }

private:
    const RootedDigraph& g_;
    flow::Network net_;
    bool has_costs_ = false;
    std::map<Edge, int> edge_arc_;
    std::map<int, int> internal_arc_;
    std::map<int, int> source_arc_;
    std::map<int, int> sink_arc_;
    std::vector<int> forced_arcs_;

    static int in_node(int v) { return 2 + 2 * v; }
    static int out_node(int v) { return 3 + 2 * v; }
    VertexSet cut_from(const std::vector<char>& source_side) const;
};

}  // namespace flamekit::detail
