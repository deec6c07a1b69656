#include "flamekit/menger.hpp"

#include <algorithm>

#include "flamekit/setops.hpp"
#include "split_gadget.hpp"

namespace flamekit {

namespace {

void check_root_target(const RootedDigraph& d, int v) {
    require(v >= 0 && v < d.vertex_count(), "unknown-vertex", "target vertex out of range");
    require(v != d.root(), "target-is-root", "the target vertex may not be the root");
}

RootedDigraph strip_root_edge(const RootedDigraph& d, int v) {
    Edge rv{d.root(), v};
    return d.has_edge(rv) ? d.delete_edge(rv) : d;
}

void check_set_args(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    for (int v : set_union(X, Y))
        require(v >= 0 && v < d.vertex_count(), "unknown-vertex", "set member out of range");
    require(set_intersect(X, Y).empty(), "overlapping-sets",
            "source and target sets must be disjoint");
}

detail::GadgetOptions rv_options(const RootedDigraph& d, int v) {
    detail::GadgetOptions opt;
    opt.sources = {d.root()};
    opt.sinks = {v};
    opt.shared_source = true;
    opt.shared_sink = true;
    opt.no_internal = {std::min(d.root(), v), std::max(d.root(), v)};
    return opt;
}

detail::GadgetOptions set_options(const VertexSet& X, const VertexSet& Y) {
    detail::GadgetOptions opt;
    opt.sources = X;
    opt.sinks = Y;
    opt.cuttable_sources = true;
    opt.cuttable_sinks = true;
    opt.no_internal = set_union(X, Y);
    return opt;
}

}  // namespace

PathSystem max_disjoint_paths(const RootedDigraph& d, int v) {
    check_root_target(d, v);
    Edge rv{d.root(), v};
    if (d.has_edge(rv)) {
        PathSystem sys = max_disjoint_paths(d.delete_edge(rv), v);
        std::vector<Path> paths = sys.paths;
        paths.push_back({d.root(), v});
        return PathSystem::make(PathKind::xy, std::move(paths));
    }
    detail::SplitGadget gadget(d, rv_options(d, v));
    gadget.run_max_flow();
    return PathSystem::make(PathKind::xy, gadget.decompose());
}

int kappa(const RootedDigraph& d, int v) { return max_disjoint_paths(d, v).size(); }

OrthogonalPair erdos_menger_pair(const RootedDigraph& d, int v) {
    check_root_target(d, v);
    RootedDigraph d2 = strip_root_edge(d, v);
    detail::SplitGadget gadget(d2, rv_options(d2, v));
    gadget.run_max_flow();
    OrthogonalPair pair{PathSystem::make(PathKind::xy, gadget.decompose()),
                        Separation{gadget.min_cut_vertices()}};
    if (!orthogonal(pair.system, pair.separation.vertices))
        throw internal_error("pair of maximum system and minimum separation is not orthogonal");
    return pair;
}

OrthogonalPair erdos_menger_pair_sets(const RootedDigraph& d, const VertexSet& X,
                                      const VertexSet& Y) {
    check_set_args(d, X, Y);
    detail::SplitGadget gadget(d, set_options(X, Y));
    gadget.run_max_flow();
    OrthogonalPair pair{PathSystem::make(PathKind::XY, gadget.decompose()),
                        Separation{gadget.min_cut_vertices()}};
    if (!orthogonal(pair.system, pair.separation.vertices))
        throw internal_error("set pair of maximum system and minimum separation is not orthogonal");
    return pair;
}

bool leq_separation(const RootedDigraph& d, const VertexSet& X, const VertexSet& S,
                    const VertexSet& T) {
    return !exists_path_avoiding(d, SystemSpec{PathKind::XY, X, T}, S);
}

bool leq_separation_rv(const RootedDigraph& d, int v, const VertexSet& S, const VertexSet& T) {
    check_root_target(d, v);
    require(!contains(S, d.root()) && !contains(T, d.root()) && !contains(S, v) && !contains(T, v),
            "bad-separation", "root-to-v separations exclude the root and the target");
    RootedDigraph d2 = strip_root_edge(d, v);
    return !exists_path_avoiding(d2, SystemSpec{PathKind::xY, {d2.root()}, T}, S);
}

Separation min_separation(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    check_set_args(d, X, Y);
    detail::SplitGadget gadget(d, set_options(X, Y));
    gadget.run_max_flow();
    return Separation{gadget.min_cut_vertices()};
}

Separation max_separation(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    check_set_args(d, X, Y);
    detail::SplitGadget gadget(d, set_options(X, Y));
    gadget.run_max_flow();
    return Separation{gadget.max_cut_vertices()};
}

Separation min_separation_rv(const RootedDigraph& d, int v) {
    check_root_target(d, v);
    RootedDigraph d2 = strip_root_edge(d, v);
    detail::SplitGadget gadget(d2, rv_options(d2, v));
    gadget.run_max_flow();
    return Separation{gadget.min_cut_vertices()};
}

Separation max_separation_rv(const RootedDigraph& d, int v) {
    check_root_target(d, v);
    RootedDigraph d2 = strip_root_edge(d, v);
    detail::SplitGadget gadget(d2, rv_options(d2, v));
    gadget.run_max_flow();
    return Separation{gadget.max_cut_vertices()};
}

AugmentResult augment(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y,
                      const PathSystem& P) {
    check_set_args(d, X, Y);
    check_path_system(d, P, SystemSpec{PathKind::XY, X, Y});

    detail::SplitGadget gadget(d, set_options(X, Y));
    gadget.impose(P);
    AugmentResult res;
    if (gadget.net().augment_shortest(gadget.source(), gadget.sink())) {
        res.augmented = true;
        res.system = PathSystem::make(PathKind::XY, gadget.decompose());
        check_path_system(d, res.system, SystemSpec{PathKind::XY, X, Y});
        VertexSet ns = set_minus(res.system.initial_vertices(), P.initial_vertices());
        VertexSet nt = set_minus(res.system.terminal_vertices(), P.terminal_vertices());
        if (ns.size() != 1 || nt.size() != 1)
            throw internal_error("augmentation did not add exactly one source and one sink");
        res.new_source = ns.front();
        res.new_sink = nt.front();
        EdgeSet before = P.edges(), after = res.system.edges();
        res.edge_delta = static_cast<int>(set_minus(before, after).size() +
                                          set_minus(after, before).size());
        return res;
    }
    res.augmented = false;
    res.separation = Separation{gadget.min_cut_vertices()};
    if (!orthogonal(P, res.separation.vertices))
        throw internal_error("maximal system is not orthogonal to the minimum separation");
    return res;
}

}  // namespace flamekit
