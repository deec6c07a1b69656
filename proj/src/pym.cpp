#include "flamekit/pym.hpp"

#include <algorithm>

#include "flamekit/flame.hpp"
#include "flamekit/menger.hpp"
#include "flamekit/setops.hpp"
#include "split_gadget.hpp"

namespace flamekit {

namespace {

const std::set<Edge> kNoPreference;  // with this as bias set, every edge costs one

RootedDigraph strip_root_edge(const RootedDigraph& d, int v) {
    Edge rv{d.root(), v};
    return d.has_edge(rv) ? d.delete_edge(rv) : d;
}

detail::GadgetOptions rv_options(const RootedDigraph& d, int v, const std::set<Edge>* prefer) {
    detail::GadgetOptions opt;
    opt.sources = {d.root()};
    opt.sinks = {v};
    opt.shared_source = true;
    opt.shared_sink = true;
    opt.no_internal = {std::min(d.root(), v), std::max(d.root(), v)};
    opt.preferred = prefer;
    return opt;
}

PathSystem biased_max_system(const RootedDigraph& d2, int v, const std::set<Edge>* prefer) {
    detail::SplitGadget gadget(d2, rv_options(d2, v, prefer));
    gadget.run_max_flow();
    return PathSystem::make(PathKind::xy, gadget.decompose());
}

PathSystem biased_witness(const RootedDigraph& d2, int v, const EdgeSet& I,
                          const std::set<Edge>* prefer) {
    RootedDigraph restricted = d2.restrict_at(v, I);
    detail::SplitGadget gadget(restricted, rv_options(restricted, v, prefer));
    gadget.run_max_flow();
    PathSystem sys = PathSystem::make(PathKind::xy, gadget.decompose());
    if (sys.terminal_edges() != I)
        throw internal_error("witness recomputation lost a terminal edge");
    return sys;
}

// Terminal segment of each path from its last meeting with S.
std::vector<Path> terminal_segments(const PathSystem& sys, const VertexSet& S) {
    std::vector<Path> out;
    for (const Path& p : sys.paths) {
        int cut = -1;
        for (int i = 0; i < static_cast<int>(p.size()); ++i)
            if (contains(S, p[static_cast<size_t>(i)])) cut = i;
        if (cut < 0) throw internal_error("path misses the separation it must cross");
        out.emplace_back(p.begin() + cut, p.end());
    }
    return out;
}

PathSystem covering_menger_impl(const RootedDigraph& d, int v, const EdgeSet& I,
                                const Separation& S, const std::set<Edge>* prefer) {
    require(v != d.root() && v >= 0 && v < d.vertex_count(), "bad-target",
            "coverage lives at a non-root vertex");
    RootedDigraph d2 = strip_root_edge(d, v);
    for (int s : S.vertices)
        require(s != d.root() && s != v && s >= 0 && s < d.vertex_count(), "bad-separation",
                "a root-to-target separation excludes both endpoints");
    auto witness = is_in_G(d2, v, I);
    require(witness.has_value(), "not-realizable",
            "the requested in-edge set is not realizable without the direct root edge");
    SystemSpec rv_spec{PathKind::xy, {d2.root()}, {v}};
    require(is_separation(d2, rv_spec, S.vertices), "not-a-separation",
            "the given set does not separate the target from the root");

    if (S.vertices.empty()) return PathSystem::make(PathKind::xy, {});

    PathSystem max_sys = prefer ? biased_max_system(d2, v, prefer) : max_disjoint_paths(d2, v);
    require(max_sys.size() == static_cast<int>(S.vertices.size()), "not-erdos-menger",
            "separation size differs from the maximum disjoint path count");
    if (!orthogonal(max_sys, S.vertices))
        throw internal_error("minimum separation not orthogonal to a maximum system");
    PathSystem cover_sys = prefer ? biased_witness(d2, v, I, prefer) : witness->system;

    PathSystem p_seg = PathSystem::make(PathKind::Xy, terminal_segments(max_sys, S.vertices));
    PathSystem q_seg = PathSystem::make(PathKind::Xy, terminal_segments(cover_sys, S.vertices));
    PathSystem merged = pym_merge_to_vertex(d2, S.vertices, v, p_seg, q_seg);

    // Stitch the root-side prefixes of the maximum system onto the merged tails.
    std::vector<Path> result;
    for (const Path& p : max_sys.paths) {
        int s_at = -1;
        for (int i = 0; i < static_cast<int>(p.size()); ++i)
            if (contains(S.vertices, p[static_cast<size_t>(i)])) s_at = i;
        Path full(p.begin(), p.begin() + s_at + 1);
        int s = full.back();
        const Path* tail = nullptr;
        for (const Path& m : merged.paths)
            if (m.front() == s) tail = &m;
        if (!tail) throw internal_error("merged system misses a separator vertex");
        full.insert(full.end(), tail->begin() + 1, tail->end());
        result.push_back(std::move(full));
    }
    PathSystem r = PathSystem::make(PathKind::xy, std::move(result));

    check_path_system(d2, r, rv_spec);
    if (!orthogonal(r, S.vertices) || !subset_of(I, r.terminal_edges()))
        throw internal_error("covering system failed its contract");
    return r;
}

PathSystem covering_in_large_impl(const RootedDigraph& L, const RootedDigraph& D, int v,
                                  const EdgeSet& I, const std::set<Edge>* prefer) {
    require(L.spanning_subgraph_of(D), "not-spanning-subgraph",
            "the sparse side must be a spanning subgraph of the host");
    require(v != D.root() && v >= 0 && v < D.vertex_count(), "bad-target",
            "coverage lives at a non-root vertex");
    Edge rv{D.root(), v};
    RootedDigraph L2 = strip_root_edge(L, v);
    RootedDigraph D2 = strip_root_edge(D, v);
    int kL = kappa(L2, v), kD = kappa(D2, v);
    require(kL == kD && (!D.has_edge(rv) || L.has_edge(rv)), "not-v-large",
            "subgraph is not v-large: local connectivity " + std::to_string(kL) + " vs " +
                std::to_string(kD) + " at " + D.name(v));
    bool wants_trivial = contains(I, rv);
    require(!wants_trivial || L.has_edge(rv), "not-realizable",
            "the direct root edge is requested but missing from the subgraph");

    Separation S = min_separation_rv(D, v);
    PathSystem r = covering_menger_impl(L, v, set_minus(I, EdgeSet{rv}), S, prefer);
    if (wants_trivial) {
        std::vector<Path> paths = r.paths;
        paths.push_back({D.root(), v});
        r = PathSystem::make(PathKind::xy, std::move(paths));
    }
    if (!subset_of(I, r.terminal_edges()))
        throw internal_error("coverage lost the requested in-edge set");
    return r;
}

}  // namespace

PathSystem pym_merge(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y,
                     const PathSystem& P, const PathSystem& Q) {
    require(set_intersect(X, Y).empty(), "overlapping-sets",
            "source and target sets must be disjoint");
    SystemSpec spec{PathKind::XY, X, Y};
    check_path_system(d, P, spec);
    check_path_system(d, Q, spec);

    EdgeSet union_edges = set_union(P.edges(), Q.edges());
    RootedDigraph u = d.delete_edges(set_minus(d.edges(), union_edges));

    detail::GadgetOptions opt;
    opt.sources = X;
    opt.sinks = Y;
    opt.no_internal = set_union(X, Y);
    opt.forced_sources = P.initial_vertices();
    opt.forced_sinks = Q.terminal_vertices();
    opt.preferred = &kNoPreference;
    opt.circulation = true;
    detail::SplitGadget gadget(u, opt);
    gadget.run_while_negative();
    if (!gadget.forced_satisfied())
        throw internal_error("no merged system inside the union covers both endpoint sets");
    gadget.net().cancel_negative_cycles();
    if (!gadget.forced_satisfied())
        throw internal_error("cost cancelling dropped a required endpoint");

    PathSystem r = PathSystem::make(PathKind::XY, gadget.decompose());
    check_path_system(d, r, spec);
    if (!subset_of(P.initial_vertices(), r.initial_vertices()) ||
        !subset_of(Q.terminal_vertices(), r.terminal_vertices()) ||
        !subset_of(r.edges(), union_edges))
        throw internal_error("merged system failed its contract");
    return r;
}

PathSystem pym_merge_to_vertex(const RootedDigraph& d, const VertexSet& X, int y,
                               const PathSystem& P, const PathSystem& Q) {
    require(!contains(X, y), "overlapping-sets", "the target may not be a source");
    SystemSpec spec{PathKind::Xy, X, {y}};
    check_path_system(d, P, spec);
    check_path_system(d, Q, spec);

    // Subdivide the in-edges of y with reserved synthetic vertices, never emitted
    // in user-facing output.
    std::vector<std::string> names = d.names();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Edge& e : d.edges()) {
        if (e.head == y)
            edges.emplace_back(d.name(e.tail), "__sub_" + d.name(e.tail) + "_" + d.name(e.head));
        else
            edges.emplace_back(d.name(e.tail), d.name(e.head));
    }
    RootedDigraph h = RootedDigraph::build(d.name(d.root()), names, edges);

    auto lift = [&](const PathSystem& sys) {
        std::vector<Path> out;
        for (const Path& p : sys.paths) {
            Path q;
            for (int v : p) q.push_back(h.vertex(d.name(v)));
            int t = p[p.size() - 2];
            q.back() = h.vertex("__sub_" + d.name(t) + "_" + d.name(y));
            out.push_back(std::move(q));
        }
        return PathSystem::make(PathKind::XY, std::move(out));
    };
    VertexSet x_h, y_h;
    for (int x : X) x_h.push_back(h.vertex(d.name(x)));
    for (int t : d.in(y)) y_h.push_back(h.vertex("__sub_" + d.name(t) + "_" + d.name(y)));
    canonicalize(x_h);
    canonicalize(y_h);

    PathSystem merged_h = pym_merge(h, x_h, y_h, lift(P), lift(Q));

    std::vector<Path> out;
    for (const Path& p : merged_h.paths) {
        Path q;
        for (size_t i = 0; i + 1 < p.size(); ++i) q.push_back(d.vertex(h.name(p[i])));
        q.push_back(y);
        out.push_back(std::move(q));
    }
    PathSystem r = PathSystem::make(PathKind::Xy, std::move(out));
    check_path_system(d, r, spec);
    if (!subset_of(P.initial_vertices(), r.initial_vertices()) ||
        !subset_of(Q.terminal_edges(), r.terminal_edges()))
        throw internal_error("single-target merge failed its contract");
    return r;
}

PathSystem covering_menger_system(const RootedDigraph& d, int v, const EdgeSet& I,
                                  const Separation& S) {
    return covering_menger_impl(d, v, I, S, nullptr);
}

PathSystem covering_in_large(const RootedDigraph& L, const RootedDigraph& D, int v,
                             const EdgeSet& I) {
    return covering_in_large_impl(L, D, v, I, nullptr);
}

PathSystem covering_in_large_pref(const RootedDigraph& L, const RootedDigraph& D, int v,
                                  const EdgeSet& I, const std::set<Edge>* prefer) {
    return covering_in_large_impl(L, D, v, I, prefer);
}

}  // namespace flamekit
