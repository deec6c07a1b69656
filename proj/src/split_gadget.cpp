#include "split_gadget.hpp"

#include <algorithm>

#include "flamekit/setops.hpp"

namespace flamekit::detail {

namespace {
int big_cap(const RootedDigraph& g) { return g.vertex_count() + g.edge_count() + 10; }
}  // namespace

SplitGadget::SplitGadget(const RootedDigraph& g, const GadgetOptions& opt)
    : g_(g), net_(2 + 2 * g.vertex_count()) {
    const int big = big_cap(g);
    const int forced_cost = -4 * big;
    has_costs_ = opt.preferred != nullptr || !opt.forced_edges.empty() ||
                 !opt.forced_sources.empty() || !opt.forced_sinks.empty();

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (contains(opt.no_internal, v)) continue;
        internal_arc_[v] = net_.add_arc(in_node(v), out_node(v), 1, 0);
    }
    for (const Edge& e : g.edges()) {
        int cost = 0;
        if (contains(opt.forced_edges, e)) {
            cost = forced_cost;
        } else if (opt.preferred != nullptr) {
            cost = opt.preferred->count(e) ? 0 : 1;
        }
        int id = net_.add_arc(out_node(e.tail), in_node(e.head), big, cost);
        edge_arc_[e] = id;
        if (cost == forced_cost) forced_arcs_.push_back(id);
    }
    for (int x : opt.sources) {
        int cost = contains(opt.forced_sources, x) ? forced_cost : 0;
        int id = net_.add_arc(source(), out_node(x), opt.shared_source ? big : 1, cost);
        source_arc_[x] = id;
        if (cost == forced_cost) forced_arcs_.push_back(id);
    }
    for (int y : opt.sinks) {
        int cost = contains(opt.forced_sinks, y) ? forced_cost : 0;
        int id = net_.add_arc(in_node(y), sink(), opt.shared_sink ? big : 1, cost);
        sink_arc_[y] = id;
        if (cost == forced_cost) forced_arcs_.push_back(id);
    }
    // Forward shortcut arc: lets cycle cancelling drop superfluous paths
    // (backward along the path, forward across the shortcut).
    if (opt.circulation) net_.add_arc(source(), sink(), big, 0);
}

int SplitGadget::run_max_flow() {
    if (has_costs_) return net_.min_cost_max_flow(source(), sink());
    return net_.max_flow(source(), sink());
}

void SplitGadget::run_while_negative() { net_.flow_while_negative(source(), sink()); }

void SplitGadget::impose(const PathSystem& ps) {
    for (const Path& p : ps.paths) {
        net_.add_flow(source_arc_.at(p.front()), 1);
        net_.add_flow(sink_arc_.at(p.back()), 1);
        for (size_t i = 0; i + 1 < p.size(); ++i) net_.add_flow(edge_arc_.at({p[i], p[i + 1]}), 1);
        for (size_t i = 1; i + 1 < p.size(); ++i) net_.add_flow(internal_arc_.at(p[i]), 1);
    }
}

bool SplitGadget::forced_satisfied() const {
    for (int id : forced_arcs_)
        if (net_.arc(id).flow < net_.arc(id).cap) return false;
    return true;
}

std::vector<Path> SplitGadget::decompose() const {
    // Walk saturated arcs from the super source, lowest attach first, consuming
    // flow as we go; leftover circular flow (if any) never reaches the source side.
    flow::Network scratch = net_;
    std::vector<Path> out;
    for (const auto& [x, attach] : source_arc_) {
        while (scratch.arc(attach).flow > 0) {
            scratch.add_flow(attach, -1);
            Path p{x};
            int cur = x;  // positioned at out_node(cur)
            for (;;) {
                int next = -1;
                for (const auto& [e, id] : edge_arc_) {
                    if (e.tail != cur || scratch.arc(id).flow <= 0) continue;
                    next = e.head;
                    scratch.add_flow(id, -1);
                    break;
                }
                if (next == -1) throw internal_error("flow decomposition lost its way");
                p.push_back(next);
                auto iit = internal_arc_.find(next);
                if (iit != internal_arc_.end() && scratch.arc(iit->second).flow > 0) {
                    scratch.add_flow(iit->second, -1);
                    cur = next;
                    continue;
                }
                auto sit = sink_arc_.find(next);
                if (sit == sink_arc_.end() || scratch.arc(sit->second).flow <= 0)
                    throw internal_error("flow decomposition stuck at " + g_.name(next));
                scratch.add_flow(sit->second, -1);
                break;
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

VertexSet SplitGadget::cut_from(const std::vector<char>& source_side) const {
    VertexSet cut;
    for (const auto& [v, id] : internal_arc_) {
        const auto& a = net_.arc(id);
        if (source_side[static_cast<size_t>(a.from)] && !source_side[static_cast<size_t>(a.to)])
            cut.push_back(v);
    }
    for (const auto& [x, id] : source_arc_) {
        const auto& a = net_.arc(id);
        if (a.flow == a.cap && source_side[static_cast<size_t>(a.from)] &&
            !source_side[static_cast<size_t>(a.to)])
            cut.push_back(x);
    }
    for (const auto& [y, id] : sink_arc_) {
        const auto& a = net_.arc(id);
        if (a.flow == a.cap && source_side[static_cast<size_t>(a.from)] &&
            !source_side[static_cast<size_t>(a.to)])
            cut.push_back(y);
    }
    canonicalize(cut);
    return cut;
}

VertexSet SplitGadget::min_cut_vertices() const {
    return cut_from(net_.residual_reachable(source()));
}

VertexSet SplitGadget::max_cut_vertices() const {
    auto coreach = net_.residual_coreach(sink());
    std::vector<char> source_side(coreach.size());
    for (size_t i = 0; i < coreach.size(); ++i) source_side[i] = !coreach[i];
    return cut_from(source_side);
}

}  // namespace flamekit::detail
