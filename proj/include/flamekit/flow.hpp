#pragma once

#include <vector>

namespace flamekit::flow {

/// Residual arc; the reverse arc lives at id ^ 1.
struct Arc {
    int from;
    int to;
    int cap;
    int flow;
    int cost;
};

/// Small deterministic flow network: integral capacities, Edmonds-Karp style
/// shortest augmenting paths (BFS scanning arcs in insertion order), optional
/// costs with Bellman-Ford shortest paths and negative-cycle cancelling.
/// Deliberately simple; all graphs in this project are tiny.
class Network {
public:
    explicit Network(int node_count) : adj_(static_cast<size_t>(node_count)) {}

    int add_arc(int from, int to, int cap, int cost = 0);

    int node_count() const { return static_cast<int>(adj_.size()); }
    const Arc& arc(int id) const { return arcs_[static_cast<size_t>(id)]; }
    int residual(int id) const { return arcs_[static_cast<size_t>(id)].cap - arcs_[static_cast<size_t>(id)].flow; }

    /// Pushes `amount` through arc `id` (and pulls it back on the reverse arc).
    void add_flow(int id, int amount);

    /// BFS shortest augmenting paths until none remains. Returns added value.
    int max_flow(int s, int t);

    /// One BFS augmentation; false when t is unreachable in the residual graph.
    bool augment_shortest(int s, int t);

    /// One augmentation along the cheapest residual s-t path (Bellman-Ford).
    /// Returns false when t is unreachable.
    bool augment_min_cost(int s, int t);

    /// Augments along cheapest paths while one with strictly negative cost exists.
    void flow_while_negative(int s, int t);

    /// Augments along cheapest paths until t is unreachable (min-cost max-flow).
    int min_cost_max_flow(int s, int t);

    /// Cancels negative-cost residual cycles until none remains.
    void cancel_negative_cycles();

    /// Nodes reachable from s through positive-residual arcs.
    std::vector<char> residual_reachable(int s) const;

    /// Nodes from which t is reachable through positive-residual arcs.
    std::vector<char> residual_coreach(int t) const;

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;

    bool bellman_ford(int s, std::vector<long long>& dist, std::vector<int>& parent_arc) const;
};

}  // namespace flamekit::flow
