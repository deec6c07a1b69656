#include "flamekit/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace flamekit::flow {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

int Network::add_arc(int from, int to, int cap, int cost) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({from, to, cap, 0, cost});
    arcs_.push_back({to, from, 0, 0, -cost});
    adj_[static_cast<size_t>(from)].push_back(id);
    adj_[static_cast<size_t>(to)].push_back(id + 1);
    return id;
}

void Network::add_flow(int id, int amount) {
    arcs_[static_cast<size_t>(id)].flow += amount;
    arcs_[static_cast<size_t>(id ^ 1)].flow -= amount;
}

bool Network::augment_shortest(int s, int t) {
    std::vector<int> parent(static_cast<size_t>(node_count()), -1);
    std::vector<char> seen(static_cast<size_t>(node_count()), 0);
    std::deque<int> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!queue.empty() && !seen[static_cast<size_t>(t)]) {
        int u = queue.front();
        queue.pop_front();
        for (int id : adj_[static_cast<size_t>(u)]) {
            const Arc& a = arcs_[static_cast<size_t>(id)];
            if (a.cap - a.flow <= 0 || seen[static_cast<size_t>(a.to)]) continue;
            seen[static_cast<size_t>(a.to)] = 1;
            parent[static_cast<size_t>(a.to)] = id;
            queue.push_back(a.to);
        }
    }
    if (!seen[static_cast<size_t>(t)]) return false;
    for (int v = t; v != s;) {
        int id = parent[static_cast<size_t>(v)];
        add_flow(id, 1);
        v = arcs_[static_cast<size_t>(id)].from;
    }
    return true;
}

int Network::max_flow(int s, int t) {
    int total = 0;
    while (augment_shortest(s, t)) ++total;
    return total;
}

bool Network::bellman_ford(int s, std::vector<long long>& dist, std::vector<int>& parent_arc) const {
    dist.assign(static_cast<size_t>(node_count()), kInf);
    parent_arc.assign(static_cast<size_t>(node_count()), -1);
    dist[static_cast<size_t>(s)] = 0;
    bool changed = true;
    for (int pass = 0; pass < node_count() && changed; ++pass) {
        changed = false;
        for (int id = 0; id < static_cast<int>(arcs_.size()); ++id) {
            const Arc& a = arcs_[static_cast<size_t>(id)];
            if (a.cap - a.flow <= 0 || dist[static_cast<size_t>(a.from)] >= kInf) continue;
            long long nd = dist[static_cast<size_t>(a.from)] + a.cost;
            if (nd < dist[static_cast<size_t>(a.to)]) {
                dist[static_cast<size_t>(a.to)] = nd;
                parent_arc[static_cast<size_t>(a.to)] = id;
                changed = true;
            }
        }
    }
    return true;
}

bool Network::augment_min_cost(int s, int t) {
    std::vector<long long> dist;
    std::vector<int> parent;
    bellman_ford(s, dist, parent);
    if (dist[static_cast<size_t>(t)] >= kInf) return false;
    int push = 1;  // unit augmentation keeps every gadget's flow a path packing
    for (int v = t; v != s;) {
        int id = parent[static_cast<size_t>(v)];
        add_flow(id, push);
        v = arcs_[static_cast<size_t>(id)].from;
    }
    return true;
}

void Network::flow_while_negative(int s, int t) {
    for (;;) {
        std::vector<long long> dist;
        std::vector<int> parent;
        bellman_ford(s, dist, parent);
        if (dist[static_cast<size_t>(t)] >= 0) return;
        int push = std::numeric_limits<int>::max();
        for (int v = t; v != s;) {
            int id = parent[static_cast<size_t>(v)];
            push = std::min(push, residual(id));
            v = arcs_[static_cast<size_t>(id)].from;
        }
        for (int v = t; v != s;) {
            int id = parent[static_cast<size_t>(v)];
            add_flow(id, push);
            v = arcs_[static_cast<size_t>(id)].from;
        }
    }
}

int Network::min_cost_max_flow(int s, int t) {
    int total = 0;
    while (augment_min_cost(s, t)) ++total;  // unit capacities: each augmentation pushes >= 1
    return total;
}

void Network::cancel_negative_cycles() {
    for (;;) {
        // Bellman-Ford from a virtual super-source (all distances 0).
        std::vector<long long> dist(static_cast<size_t>(node_count()), 0);
        std::vector<int> parent(static_cast<size_t>(node_count()), -1);
        int relaxed_node = -1;
        for (int pass = 0; pass < node_count(); ++pass) {
            relaxed_node = -1;
            for (int id = 0; id < static_cast<int>(arcs_.size()); ++id) {
                const Arc& a = arcs_[static_cast<size_t>(id)];
                if (a.cap - a.flow <= 0) continue;
                long long nd = dist[static_cast<size_t>(a.from)] + a.cost;
                if (nd < dist[static_cast<size_t>(a.to)]) {
                    dist[static_cast<size_t>(a.to)] = nd;
                    parent[static_cast<size_t>(a.to)] = id;
                    relaxed_node = a.to;
                }
            }
            if (relaxed_node == -1) break;
        }
        if (relaxed_node == -1) return;
        // Walk parents n times to land inside the cycle, then collect it.
        int v = relaxed_node;
        for (int i = 0; i < node_count(); ++i) v = arcs_[static_cast<size_t>(parent[static_cast<size_t>(v)])].from;
        std::vector<int> cycle;
        int u = v;
        do {
            int id = parent[static_cast<size_t>(u)];
            cycle.push_back(id);
            u = arcs_[static_cast<size_t>(id)].from;
        } while (u != v);
        int push = std::numeric_limits<int>::max();
        for (int id : cycle) push = std::min(push, residual(id));
        for (int id : cycle) add_flow(id, push);
    }
}

std::vector<char> Network::residual_reachable(int s) const {
    std::vector<char> seen(static_cast<size_t>(node_count()), 0);
    std::deque<int> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int id : adj_[static_cast<size_t>(u)]) {
            const Arc& a = arcs_[static_cast<size_t>(id)];
            if (a.cap - a.flow > 0 && !seen[static_cast<size_t>(a.to)]) {
                seen[static_cast<size_t>(a.to)] = 1;
                queue.push_back(a.to);
            }
        }
    }
    return seen;
}

std::vector<char> Network::residual_coreach(int t) const {
    std::vector<char> seen(static_cast<size_t>(node_count()), 0);
    std::deque<int> queue{t};
    seen[static_cast<size_t>(t)] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        // Arcs INTO u with residual: arc (v -> u) has residual iff cap - flow > 0.
        for (int id : adj_[static_cast<size_t>(u)]) {
            // adj_ holds arcs leaving u, including reverse arcs; arc id^1 enters u.
            const Arc& rev = arcs_[static_cast<size_t>(id ^ 1)];
            if (rev.cap - rev.flow > 0 && !seen[static_cast<size_t>(rev.from)]) {
                seen[static_cast<size_t>(rev.from)] = 1;
                queue.push_back(rev.from);
            }
        }
    }
    return seen;
}

}  // namespace flamekit::flow
