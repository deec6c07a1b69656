#include "flamekit/incompressibility.hpp"

#include <algorithm>
#include <set>

#include "flamekit/menger.hpp"
#include "flamekit/setops.hpp"
#include "split_gadget.hpp"

namespace flamekit {

namespace {

VertexSet remap(const VertexSet& s, const RootedDigraph& from, const RootedDigraph& to,
                bool drop_missing = false) {
    VertexSet out;
    for (int v : s) {
        auto m = map_vertex(from, v, to);
        if (m)
            out.push_back(*m);
        else
            require(drop_missing, "unknown-vertex", "vertex vanished: " + from.name(v));
    }
    canonicalize(out);
    return out;
}

Path remap_path(const Path& p, const RootedDigraph& from, const RootedDigraph& to) {
    Path out;
    out.reserve(p.size());
    for (int v : p) out.push_back(to.vertex(from.name(v)));
    return out;
}

void check_sets(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    for (int v : set_union(X, Y))
        require(v >= 0 && v < d.vertex_count(), "unknown-vertex", "set member out of range");
}

// Disjoint-source flow check on the stripped digraph; vertices of X n Y are served
// by the single-vertex convention and take no part in the flow.
std::optional<JoinWitness> joinable_core(const RootedDigraph& stripped, const VertexSet& X,
                                         const VertexSet& Y) {
    VertexSet overlap = set_intersect(X, Y);
    VertexSet xs = set_minus(X, overlap), ys = set_minus(Y, overlap);
    if (xs.empty()) return JoinWitness{PathSystem::make(PathKind::XY, {}), overlap};
    detail::GadgetOptions opt;
    opt.sources = xs;
    opt.sinks = ys;
    opt.no_internal = set_union(X, Y);
    detail::SplitGadget gadget(stripped, opt);
    int flow = gadget.run_max_flow();
    if (flow != static_cast<int>(xs.size())) return std::nullopt;
    JoinWitness w{PathSystem::make(PathKind::XY, gadget.decompose()), overlap};
    if (w.system.initial_vertices() != xs)
        throw internal_error("joinability witness misses a source");
    return w;
}

std::optional<JoinWitness> joinable_in(const RootedDigraph& d, const VertexSet& X,
                                       const VertexSet& Y) {
    return joinable_core(strip_for_join(d, X, Y), X, Y);
}

bool incompressible_core(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    RootedDigraph stripped = strip_for_join(d, X, Y);
    if (!joinable_core(stripped, X, Y)) return false;
    VertexSet overlap = set_intersect(X, Y);
    for (int y : set_minus(Y, overlap)) {
        RootedDigraph del = stripped.delete_vertex(y);
        VertexSet x2 = remap(X, stripped, del);
        VertexSet y2 = remap(without_element(Y, y), stripped, del);
        if (joinable_core(del, x2, y2)) return false;  // a witness may dodge y entirely
    }
    return true;
}

}  // namespace

RootedDigraph strip_for_join(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    EdgeSet drop;
    for (int x : X)
        for (int t : d.in(x)) drop.push_back({t, x});
    for (int y : Y)
        for (int h : d.out(y)) drop.push_back({y, h});
    canonicalize(drop);
    return d.delete_edges(drop);
}

std::optional<JoinWitness> is_joinable(const RootedDigraph& d, const VertexSet& X,
                                       const VertexSet& Y) {
    check_sets(d, X, Y);
    return joinable_in(d, X, Y);
}

bool is_incompressible(const RootedDigraph& d, const VertexSet& X, const VertexSet& Y) {
    check_sets(d, X, Y);
    return incompressible_core(d, X, Y);
}

Separation incompressible_separation(const RootedDigraph& d, const VertexSet& X,
                                     const VertexSet& Y, int x) {
    check_sets(d, X, Y);
    require(contains(X, x), "bad-argument", "the distinguished vertex must lie in X");
    require(set_intersect(X, Y).empty(), "overlapping-sets",
            "source and target sets must be disjoint");
    RootedDigraph stripped = strip_for_join(d, X, Y);
    require(joinable_core(stripped, without_element(X, x), Y).has_value(), "not-joinable",
            "X minus the distinguished vertex must be joinable to Y");
    require(!joinable_core(stripped, X, Y).has_value(), "joinable",
            "X itself must not be joinable to Y");

    Separation s = min_separation(stripped, X, Y);
    if (!incompressible_core(stripped, without_element(X, x), s.vertices))
        throw internal_error("least separation is not incompressible for X minus x");
    return s;
}

VertexSet extend_joinable(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                          const VertexSet& Y, const VertexSet& Yp) {
    check_sets(d, X, Y);
    require(subset_of(Xp, X) && subset_of(Yp, Y), "bad-argument",
            "sub-sources must lie in X and sub-targets in Y");
    require(set_intersect(X, Y).empty(), "overlapping-sets",
            "source and target sets must be disjoint");
    RootedDigraph stripped = strip_for_join(d, X, Y);
    auto full = joinable_core(stripped, X, Y);
    require(full.has_value(), "not-joinable", "X must be joinable to Y");
    auto sub = joinable_core(stripped, Xp, Yp);
    require(sub.has_value(), "not-joinable", "Xp must be joinable to Yp");

    PathSystem cur = sub->system;
    SystemSpec spec{PathKind::XY, X, Y};
    while (cur.initial_vertices() != X) {
        AugmentResult step = augment(stripped, X, Y, cur);
        if (step.augmented) {
            cur = step.system;
            continue;
        }
        // Maximal already: reroute the full witness through the blocking separation,
        // then continue with the current targets.
        const VertexSet& S = step.separation.vertices;
        std::vector<Path> rerouted;
        for (const Path& p : full->system.paths) {
            int hit = -1;
            for (int i = 0; i < static_cast<int>(p.size()); ++i)
                if (contains(S, p[static_cast<size_t>(i)])) {
                    hit = i;
                    break;
                }
            if (hit < 0) throw internal_error("witness path avoids a blocking separation");
            Path q(p.begin(), p.begin() + hit + 1);
            int s = q.back();
            const Path* tail = nullptr;
            for (const Path& t : cur.paths) {
                auto it = std::find(t.begin(), t.end(), s);
                if (it != t.end()) {
                    if (tail) throw internal_error("separator vertex on two paths");
                    rerouted.emplace_back();
                    rerouted.back() = q;
                    rerouted.back().insert(rerouted.back().end(), it + 1, t.end());
                    tail = &t;
                }
            }
            if (!tail) throw internal_error("separator vertex not covered by the system");
        }
        cur = PathSystem::make(PathKind::XY, std::move(rerouted));
        break;
    }
    check_path_system(stripped, cur, spec);
    if (cur.initial_vertices() != X) throw internal_error("rerouted system misses a source");
    VertexSet result = cur.terminal_vertices();
    if (set_minus(result, Yp).size() > set_minus(X, Xp).size())
        throw internal_error("target growth exceeded the source slack");
    return result;
}

bool finitely_extendable(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                         const VertexSet& Y) {
    check_sets(d, X, Y);
    require(subset_of(Xp, X), "bad-argument", "Xp must lie in X");
    // Finite collapse: joinability is downward monotone in the source set, so every
    // finite enlargement of Xp is joinable iff X itself is.
    return joinable_in(d, X, Y).has_value();
}

VertexSet delete_preserving(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                            const VertexSet& Y, const VertexSet& U) {
    check_sets(d, X, Y);
    require(subset_of(Xp, X), "bad-argument", "Xp must lie in X");
    require(set_intersect(X, Y).empty(), "overlapping-sets",
            "source and target sets must be disjoint");
    require(set_intersect(U, Xp).empty(), "bad-argument", "U must avoid Xp");
    RootedDigraph stripped = strip_for_join(d, X, Y);
    require(joinable_core(stripped, X, Y).has_value(), "not-finitely-extendable",
            "Xp must be finitely extendable toward Y");
    {
        RootedDigraph del = stripped.delete_vertices(U);
        if (!joinable_core(del, remap(Xp, stripped, del), remap(set_minus(Y, U), stripped, del)))
            throw domain_error("not-joinable", "Xp must stay joinable to Y less U in d less U");
    }

    std::set<std::string> removed;  // W, tracked by name across shrinking graphs
    for (int u : U) removed.insert(stripped.name(u));
    std::set<std::string> extras;

    RootedDigraph h = stripped;
    VertexSet xc = X, yc = Y, xpc = Xp;
    for (int u_orig : U) {
        auto here = map_vertex(stripped, u_orig, h);
        if (!here) continue;  // already taken as an earlier extra
        int v = *here;
        if (contains(xc, v)) {
            // Sources have no in-edges: dropping one never hurts the others.
            RootedDigraph del = h.delete_vertex(v);
            xc = remap(without_element(xc, v), h, del);
            yc = remap(yc, h, del);
            xpc = remap(xpc, h, del);
            h = std::move(del);
            continue;
        }
        RootedDigraph del = h.delete_vertex(v);
        VertexSet x2 = remap(without_element(xc, v), h, del);
        VertexSet y2 = remap(set_minus(yc, VertexSet{v}), h, del);
        VertexSet xp2 = remap(xpc, h, del);
        if (joinable_core(del, x2, y2)) {
            h = std::move(del);
            xc = x2;
            yc = y2;
            xpc = xp2;
            continue;
        }
        // Greedy scan for the first source whose admission fails without v.
        int fail = -1;
        VertexSet grown = xp2;
        for (int z : set_minus(x2, xp2)) {
            if (joinable_core(del, with_element(grown, z), y2)) {
                grown = with_element(grown, z);
            } else {
                fail = z;
                break;
            }
        }
        if (fail < 0) throw internal_error("full source set became joinable after all");
        extras.insert(del.name(fail));
        removed.insert(del.name(fail));
        RootedDigraph del2 = del.delete_vertex(fail);
        xc = remap(without_element(x2, fail), del, del2);
        yc = remap(y2, del, del2);
        xpc = remap(xp2, del, del2);
        h = std::move(del2);
        if (!joinable_core(h, xc, yc))
            throw internal_error("deleting the failing source did not restore extendability");
    }

    VertexSet w;
    for (const std::string& name : removed) w.push_back(d.vertex(name));
    canonicalize(w);
    if (set_minus(w, U).size() > U.size())
        throw internal_error("more than |U| extra deletions");
    for (int e : set_minus(w, U))
        if (!contains(set_minus(X, Xp), e))
            throw internal_error("extra deletion outside X minus Xp");
    return w;
}

HitResult hit_all_families(const RootedDigraph& d, const VertexSet& X, const VertexSet& Xp,
                           const VertexSet& Y, const std::vector<VertexSet>& families) {
    check_sets(d, X, Y);
    require(subset_of(Xp, X), "bad-argument", "Xp must lie in X");
    require(set_intersect(X, Y).empty(), "overlapping-sets",
            "source and target sets must be disjoint");
    for (const VertexSet& f : families)
        require(subset_of(f, set_minus(X, Xp)), "bad-argument",
                "families must consist of vertices of X outside Xp");
    RootedDigraph stripped = strip_for_join(d, X, Y);

    auto exhaustive = [&]() -> HitResult {
        if (d.vertex_count() > 10) return HitResult{SearchStatus::indeterminate, {}, {}};
        VertexSet pool = set_minus(X, Xp);
        std::vector<VertexSet> candidates;
        size_t limit = size_t{1} << pool.size();
        for (size_t mask = 0; mask < limit; ++mask) {
            VertexSet extra;
            for (size_t i = 0; i < pool.size(); ++i)
                if (mask & (size_t{1} << i)) extra.push_back(pool[i]);
            candidates.push_back(std::move(extra));
        }
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            return std::pair(a.size(), a) < std::pair(b.size(), b);
        });
        for (const VertexSet& extra : candidates) {
            VertexSet o = set_union(Xp, extra);
            bool hits = true;
            for (const VertexSet& f : families)
                if (set_intersect(f, o).empty()) hits = false;
            if (!hits) continue;
            if (auto w = joinable_core(stripped, o, Y))
                return HitResult{SearchStatus::found, o, w->system};
        }
        return HitResult{SearchStatus::none, {}, {}};
    };

    if (!joinable_core(stripped, X, Y)) return exhaustive();

    // Greedy: serve one family per round, deleting each chosen path together with
    // the repair set that keeps the remainder extendable.
    RootedDigraph h = stripped;
    VertexSet xc = X, yc = Y, xpc = Xp;
    VertexSet chosen;  // indices of d
    std::vector<Path> collected;
    for (const VertexSet& family : families) {
        bool already = !set_intersect(family, chosen).empty();
        if (already) continue;
        VertexSet cands;
        for (int f : family)
            if (auto m = map_vertex(d, f, h)) cands.push_back(*m);
        canonicalize(cands);
        cands = set_intersect(cands, xc);
        if (cands.empty()) return exhaustive();
        int x = cands.front();
        auto wit = joinable_core(h, with_element(xpc, x), yc);
        if (!wit) return exhaustive();
        const Path* chosen_path = nullptr;
        for (const Path& p : wit->system.paths)
            if (p.front() == x) chosen_path = &p;
        if (!chosen_path) throw internal_error("joinability witness lost the chosen source");
        Path p_in_d = remap_path(*chosen_path, h, d);
        VertexSet u(chosen_path->begin(), chosen_path->end());
        canonicalize(u);
        VertexSet w;
        try {
            w = delete_preserving(h, xc, xpc, yc, u);
        } catch (const error&) {
            return exhaustive();
        }
        chosen.push_back(d.vertex(h.name(x)));
        canonicalize(chosen);
        collected.push_back(std::move(p_in_d));
        RootedDigraph del = h.delete_vertices(w);
        xc = remap(set_minus(xc, w), h, del);
        yc = remap(set_minus(yc, w), h, del);
        xpc = remap(set_minus(xpc, w), h, del);
        h = std::move(del);
    }
    auto fin = joinable_core(h, xpc, yc);
    if (!fin) return exhaustive();
    std::vector<Path> all = collected;
    for (const Path& p : fin->system.paths) all.push_back(remap_path(p, h, d));
    PathSystem sys = PathSystem::make(PathKind::XY, std::move(all));
    VertexSet o = set_union(Xp, chosen);
    if (!path_system_ok(stripped, sys, SystemSpec{PathKind::XY, X, Y}) ||
        sys.initial_vertices() != o)
        return exhaustive();
    for (const VertexSet& f : families)
        if (set_intersect(f, o).empty()) return exhaustive();
    return HitResult{SearchStatus::found, o, std::move(sys)};
}

AuxiliaryGraph build_auxiliary(const RootedDigraph& d, int w) {
    require(w != d.root() && w >= 0 && w < d.vertex_count(), "bad-target",
            "the auxiliary construction needs a non-root vertex");
    require(!d.has_edge(d.root(), w), "root-edge-present",
            "reduce the direct root edge before building the auxiliary digraph");

    std::vector<std::string> names{"__aux_root"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (v != d.root() && v != w) names.push_back(d.name(v));
    for (int t : d.in(w)) names.push_back("__x_" + d.name(t));
    for (int h : d.out(d.root())) names.push_back("__y_" + d.name(h));

    for (const Edge& e : d.edges()) {
        if (e.head == w)
            edges.emplace_back("__x_" + d.name(e.tail), d.name(e.tail));
        else if (e.tail == d.root())
            edges.emplace_back(d.name(e.head), "__y_" + d.name(e.head));
        else
            edges.emplace_back(d.name(e.head), d.name(e.tail));  // reversed
    }

    AuxiliaryGraph aux;
    aux.graph = RootedDigraph::build("__aux_root", names, edges);
    for (int t : d.in(w)) {
        int xv = aux.graph.vertex("__x_" + d.name(t));
        aux.X.push_back(xv);
        aux.source_edge[xv] = Edge{t, w};
        aux.edge_source[Edge{t, w}] = xv;
    }
    for (int h : d.out(d.root())) {
        int yv = aux.graph.vertex("__y_" + d.name(h));
        aux.Y.push_back(yv);
        aux.sink_edge[yv] = Edge{d.root(), h};
    }
    canonicalize(aux.X);
    canonicalize(aux.Y);
    return aux;
}

HitEdgesResult extend_hitting_G(const RootedDigraph& d, int w, const EdgeSet& I,
                                const std::vector<EdgeSet>& families, int cap) {
    require(w != d.root() && w >= 0 && w < d.vertex_count(), "bad-target",
            "in-edge extension lives at a non-root vertex");
    for (const Edge& e : I) require(d.has_edge(e) && e.head == w, "bad-argument",
                                    "I must consist of ingoing edges of the vertex");
    for (const EdgeSet& f : families)
        for (const Edge& e : f)
            require(d.has_edge(e) && e.head == w && !contains(I, e), "bad-argument",
                    "families must consist of ingoing edges of the vertex outside I");
    require(is_in_G(d, w, I).has_value(), "not-realizable", "I must be realizable");
    // Every finite superset of I must be realizable; verify while the surplus is
    // small enough, assume beyond the cap.
    EdgeSet surplus = set_minus(d.in_edges(w), I);
    if (static_cast<int>(surplus.size()) <= cap) {
        size_t limit = size_t{1} << surplus.size();
        for (size_t mask = 1; mask < limit; ++mask) {
            EdgeSet J = I;
            for (size_t i = 0; i < surplus.size(); ++i)
                if (mask & (size_t{1} << i)) J.push_back(surplus[i]);
            canonicalize(J);
            require(is_in_G(d, w, J).has_value(), "not-upward-realizable",
                    "a superset of I is not realizable");
        }
    }

    Edge rw{d.root(), w};
    bool had_rw = d.has_edge(rw);
    RootedDigraph core = had_rw ? d.delete_edge(rw) : d;
    bool add_rw = had_rw && contains(I, rw);
    std::vector<EdgeSet> residual_families;
    for (const EdgeSet& f : families) {
        if (had_rw && contains(f, rw)) {
            add_rw = true;  // the trivial edge will serve this family
            continue;
        }
        residual_families.push_back(f);
    }

    AuxiliaryGraph aux = build_auxiliary(core, w);
    VertexSet x_i;
    for (const Edge& e : I)
        if (!(e == rw)) x_i.push_back(aux.edge_source.at(e));
    canonicalize(x_i);
    std::vector<VertexSet> fam_v;
    for (const EdgeSet& f : residual_families) {
        VertexSet fv;
        for (const Edge& e : f) fv.push_back(aux.edge_source.at(e));
        canonicalize(fv);
        fam_v.push_back(std::move(fv));
    }
    HitResult hit = hit_all_families(aux.graph, aux.X, x_i, aux.Y, fam_v);
    if (hit.status != SearchStatus::found) return HitEdgesResult{hit.status, {}};

    EdgeSet result;
    for (int xv : hit.chosen) result.push_back(aux.source_edge.at(xv));
    if (add_rw) result.push_back(rw);
    canonicalize(result);
    if (!is_in_G(d, w, result).has_value())
        throw internal_error("extended in-edge set is not realizable");
    for (const EdgeSet& f : families)
        if (!f.empty() && set_intersect(f, result).empty())
            throw internal_error("extended in-edge set misses a family");
    return HitEdgesResult{SearchStatus::found, result};
}

namespace {

bool separates_from_root(const RootedDigraph& d, const VertexSet& S, int target) {
    if (contains(S, target)) return true;
    return !exists_path_avoiding(d, SystemSpec{PathKind::xy, {d.root()}, {target}}, S);
}

void check_bubble(const RootedDigraph& d, int w, const EdgeSet& I, Edge uv, const Separation& S,
                  const PathSystem& P) {
    if (contains(S.vertices, d.root())) throw internal_error("bubble: separation holds the root");
    if (!contains(S.vertices, uv.head)) throw internal_error("bubble: head missing from separation");
    check_path_system(d, P, SystemSpec{PathKind::xY, {d.root()}, S.vertices});
    if (P.terminal_vertices() != S.vertices)
        throw internal_error("bubble: system does not cover the separation");
    for (int t : d.in(uv.head))
        if (t != uv.tail && !separates_from_root(d, S.vertices, t))
            throw internal_error("bubble: a sibling tail escapes the separation");
    bool uv_last = false;
    for (const Path& p : P.paths)
        if (p.size() >= 2 && Edge{p[p.size() - 2], p.back()} == uv) uv_last = true;
    if (!uv_last) throw internal_error("bubble: the critical edge closes no path");
    (void)w;
    (void)I;
}

std::vector<Path> segments_until(const PathSystem& sys, const VertexSet& stop) {
    std::vector<Path> out;
    for (const Path& p : sys.paths) {
        Path q;
        for (int v : p) {
            q.push_back(v);
            if (contains(stop, v)) break;
        }
        if (!contains(stop, q.back()))
            throw internal_error("bubble: witness path never meets the separation");
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

BubbleResult bubble(const RootedDigraph& d, int w, const EdgeSet& I, Edge uv) {
    require(w != d.root() && w >= 0 && w < d.vertex_count(), "bad-target",
            "precondition: w is a non-root vertex");
    require(d.has_edge(uv), "unknown-edge", "precondition: uv is an edge of the digraph");
    require(uv.tail != d.root(), "bad-edge", "precondition: the tail of uv is not the root");
    require(uv.head != w, "bad-edge", "precondition: the head of uv is not w");

    Edge rw{d.root(), w};
    if (d.has_edge(rw)) {
        BubbleResult sub = bubble(d.delete_edge(rw), w, set_minus(I, EdgeSet{rw}), uv);
        Separation s{remap(sub.separation.vertices, d.delete_edge(rw), d)};
        std::vector<Path> paths;
        for (const Path& p : sub.system.paths) paths.push_back(remap_path(p, d.delete_edge(rw), d));
        PathSystem sys = PathSystem::make(PathKind::xY, paths);
        try {
            check_bubble(d, w, I, uv, s, sys);
            return BubbleResult{s, sys, sub.target_in_separation};
        } catch (const internal_error&) {
            // The trivial root edge reopens a route; close it at w itself.
            Separation s2{with_element(s.vertices, w)};
            paths.push_back({d.root(), w});
            PathSystem sys2 = PathSystem::make(PathKind::xY, std::move(paths));
            check_bubble(d, w, I, uv, s2, sys2);
            return BubbleResult{s2, sys2, true};
        }
    }

    auto wit = is_in_G(d, w, I);
    require(wit.has_value(), "not-realizable", "precondition: I is realizable at w");
    for (const Edge& f : set_minus(d.in_edges(w), I))
        require(is_in_G(d, w, with_element(I, f)).has_value(), "not-upward-realizable",
                "precondition: I plus " + d.name(f.tail) + " -> " + d.name(f.head) +
                    " is not realizable");
    {
        RootedDigraph without = d.delete_edge(uv);
        require(!is_in_G(without, w, I).has_value(), "not-critical",
                "precondition: I stays realizable without uv");
    }

    // Locate uv on the witness; it must appear since I is not realizable without it.
    Edge last_of_uv_path{-1, -1};
    for (const Path& p : wit->system.paths)
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (Edge{p[i], p[i + 1]} == uv) last_of_uv_path = Edge{p[p.size() - 2], p.back()};
    if (last_of_uv_path.tail < 0) throw internal_error("bubble: witness dodges the critical edge");

    AuxiliaryGraph aux = build_auxiliary(d, w);
    VertexSet x_i;
    for (const Edge& e : I) x_i.push_back(aux.edge_source.at(e));
    canonicalize(x_i);
    int x_crit = aux.edge_source.at(last_of_uv_path);
    Edge uv_aux{aux.graph.vertex(d.name(uv.head)), aux.graph.vertex(d.name(uv.tail))};
    RootedDigraph a2 = aux.graph.delete_edge(uv_aux);

    Separation s_aux = incompressible_separation(a2, x_i, aux.Y, x_crit);

    // Swap subdivision vertices for their unique original neighbours; minimality of
    // the separation rules out collisions.
    VertexSet swapped;
    for (int s : s_aux.vertices) {
        if (aux.source_edge.count(s))
            swapped.push_back(a2.vertex(d.name(aux.source_edge.at(s).tail)));
        else if (aux.sink_edge.count(s))
            swapped.push_back(a2.vertex(d.name(aux.sink_edge.at(s).head)));
        else
            swapped.push_back(s);
    }
    canonicalize(swapped);
    if (swapped.size() != s_aux.vertices.size())
        throw internal_error("bubble: boundary swap collided");
    SystemSpec aux_spec{PathKind::XY, x_i, aux.Y};
    if (exists_path_avoiding(a2, aux_spec, swapped))
        throw internal_error("bubble: swapped set no longer separates");
    if (!incompressible_core(a2, without_element(x_i, x_crit), swapped))
        throw internal_error("bubble: swapped set lost incompressibility");

    VertexSet s_d;
    for (int s : swapped) s_d.push_back(d.vertex(a2.name(s)));
    s_d = with_element(s_d, uv.head);

    bool tails_cut = true;
    for (int t : d.in(uv.head))
        if (t != uv.tail && !separates_from_root(d, s_d, t)) tails_cut = false;

    Separation s_final;
    PathSystem p_final;
    bool used_w = false;
    if (tails_cut) {
        if (!orthogonal(wit->system, s_d))
            throw internal_error("bubble: witness not orthogonal to the separation");
        p_final = PathSystem::make(PathKind::xY, segments_until(wit->system, s_d));
        s_final = Separation{s_d};
    } else {
        EdgeSet spare = set_minus(d.in_edges(w), I);
        if (spare.empty()) throw internal_error("bubble: second branch without a spare in-edge");
        auto rich = is_in_G(d, w, with_element(I, spare.front()));
        if (!rich) throw internal_error("bubble: spare extension vanished");
        VertexSet stop = with_element(s_d, w);
        p_final = PathSystem::make(PathKind::xY, segments_until(rich->system, stop));
        s_final = Separation{stop};
        used_w = true;
    }
    check_bubble(d, w, I, uv, s_final, p_final);
    return BubbleResult{s_final, p_final, used_w};
}

}  // namespace flamekit
