#include "flamekit/extend.hpp"

#include <algorithm>
#include <set>

#include "flamekit/menger.hpp"
#include "flamekit/pym.hpp"
#include "flamekit/setops.hpp"

namespace flamekit {

namespace {

// Vertices the root can reach while detouring around S.
std::vector<char> reach_avoiding(const RootedDigraph& d, const VertexSet& S) {
    std::vector<char> seen(static_cast<size_t>(d.vertex_count()), 0);
    std::vector<int> queue;
    if (!contains(S, d.root())) {
        seen[static_cast<size_t>(d.root())] = 1;
        queue.push_back(d.root());
    }
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int h : d.out(u)) {
            if (contains(S, h) || seen[static_cast<size_t>(h)]) continue;
            seen[static_cast<size_t>(h)] = 1;
            queue.push_back(h);
        }
    }
    return seen;
}

bool separated(const std::vector<char>& reach, const VertexSet& S, int v) {
    return contains(S, v) || !reach[static_cast<size_t>(v)];
}

}  // namespace

VertexSet separation_supremum(const RootedDigraph& d, int x,
                              const std::vector<VertexSet>& collection) {
    require(!collection.empty(), "empty-collection", "the separation collection may not be empty");
    require(x != d.root(), "bad-target", "the separated vertex may not be the root");
    std::vector<std::vector<char>> reaches;
    for (const VertexSet& S : collection) {
        require(!contains(S, d.root()), "bad-separation", "separations exclude the root");
        auto reach = reach_avoiding(d, S);
        require(separated(reach, S, x), "not-a-separation",
                "a collection member fails to separate the target from the root");
        reaches.push_back(std::move(reach));
    }
    VertexSet pool;
    for (const VertexSet& S : collection) pool = set_union(pool, S);
    VertexSet result;
    for (int s : pool) {
        bool everywhere = true;
        for (size_t i = 0; i < collection.size(); ++i)
            if (!separated(reaches[i], collection[i], s)) everywhere = false;
        if (everywhere) result.push_back(s);
    }
    auto reach = reach_avoiding(d, result);
    if (!separated(reach, result, x))
        throw internal_error("separation join no longer separates the target");
    return result;
}

EdgeSet key_I_star(const RootedDigraph& L, const RootedDigraph& G, int v, int cap) {
    require(G.spanning_subgraph_of(L), "not-spanning-subgraph",
            "the base must be a spanning subgraph of the quasi-flame");
    require(v != L.root() && v >= 0 && v < L.vertex_count(), "bad-target",
            "restriction lives at a non-root vertex");
    for (int h : L.out(L.root()))
        require(G.has_edge(L.root(), h), "missing-root-edges",
                "every root edge of the quasi-flame must already lie in the base");
    {
        QuasiFlameCheck qf = is_quasi_flame(L, G, cap);
        require(qf.ok, "not-quasi-flame", "the ambient digraph is not a quasi-flame over the base");
    }

    EdgeSet base = G.in_edges(v);
    RootedDigraph d0 = L.restrict_at(v, base);
    EdgeSet optional_edges = set_minus(L.in_edges(v), base);

    // Interval sets broken by the bare restriction, each with its set of
    // single-edge repairs among the optional in-edges of v.
    std::vector<EdgeSet> repairs;
    for (int w = 0; w < L.vertex_count(); ++w) {
        if (w == L.root() || w == v) continue;
        EdgeSet wbase = G.in_edges(w);
        EdgeSet wextra = set_minus(L.in_edges(w), wbase);
        if (static_cast<int>(wextra.size()) > cap)
            throw cap_error("interval at vertex " + L.name(w) + " exceeds the cap");
        size_t limit = size_t{1} << wextra.size();
        for (size_t mask = 0; mask < limit; ++mask) {
            EdgeSet I = wbase;
            for (size_t i = 0; i < wextra.size(); ++i)
                if (mask & (size_t{1} << i)) I.push_back(wextra[i]);
            canonicalize(I);
            if (is_in_G(d0, w, I).has_value()) continue;
            EdgeSet n_i;
            for (const Edge& e : optional_edges)
                if (is_in_G(d0.add_edge(e), w, I).has_value()) n_i.push_back(e);
            if (n_i.empty())
                throw internal_error("relevant set at " + L.name(w) + " has no repair edge");
            repairs.push_back(std::move(n_i));
        }
    }

    if (static_cast<int>(optional_edges.size()) > cap)
        throw cap_error("interval at vertex " + L.name(v) + " exceeds the cap");
    std::vector<size_t> masks;
    for (size_t mask = 0; mask < (size_t{1} << optional_edges.size()); ++mask)
        masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](size_t a, size_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return std::pair(pa, a) < std::pair(pb, b);
    });
    for (size_t mask : masks) {
        EdgeSet candidate = base;
        for (size_t i = 0; i < optional_edges.size(); ++i)
            if (mask & (size_t{1} << i)) candidate.push_back(optional_edges[i]);
        canonicalize(candidate);
        bool hits = true;
        for (const EdgeSet& n_i : repairs)
            if (set_intersect(n_i, candidate).empty()) hits = false;
        if (!hits) continue;
        if (!is_in_G(L, v, candidate).has_value()) continue;
        QuasiFlameCheck qf = is_quasi_flame(L.restrict_at(v, candidate), G, cap);
        if (!qf.ok)
            throw internal_error("restriction by the hitting set is not a quasi-flame");
        return candidate;
    }
    throw internal_error("no realizable hitting extension exists at " + L.name(v));
}

std::string to_string(ExtendMode mode) {
    return mode == ExtendMode::faithful ? "faithful" : "finite-direct";
}

ExtendMode extend_mode_from_string(const std::string& s) {
    if (s == "faithful") return ExtendMode::faithful;
    if (s == "finite-direct") return ExtendMode::finite_direct;
    throw domain_error("bad-mode", "unknown extension mode: " + s);
}

namespace {

std::vector<int> resolve_order(const RootedDigraph& d, const std::vector<int>& requested) {
    if (requested.empty()) {
        std::vector<int> order;
        for (int v = 0; v < d.vertex_count(); ++v)
            if (v != d.root()) order.push_back(v);
        return order;
    }
    VertexSet sorted(requested.begin(), requested.end());
    canonicalize(sorted);
    VertexSet expected;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (v != d.root()) expected.push_back(v);
    require(sorted == expected, "bad-order",
            "the vertex order must be a permutation of the non-root vertices");
    return requested;
}

void check_step(const ExtensionState& st, const RootedDigraph& D, ExtendMode mode, int v,
                int cap) {
    if (!st.grown.spanning_subgraph_of(st.host))
        throw internal_error("grown flame escaped the shrinking host");
    // Committed in-edges agree in both chains at every processed vertex, so later
    // steps can never disturb an earlier one.
    for (int p : st.processed)
        if (st.grown.in_edges(p) != st.host.in_edges(p))
            throw internal_error("processed vertex keeps uncommitted in-edges");
    Edge rv{D.root(), v};
    EdgeSet committed = set_minus(st.grown.in_edges(v), EdgeSet{rv});
    if (committed != set_minus(st.last_covering.terminal_edges(), EdgeSet{rv}))
        throw internal_error("committed in-edges differ from the covering system");
    if (!is_large(st.host, D).ok) throw internal_error("host lost largeness mid-run");
    if (mode == ExtendMode::faithful && !is_quasi_flame(st.host, st.grown, cap).ok)
        throw internal_error("host lost the quasi-flame property mid-run");
}

ExtensionState run_recursion(const RootedDigraph& D, const RootedDigraph& F_seeded,
                             const std::vector<int>& order, ExtendMode mode,
                             const ExtendOptions& opts) {
    ExtensionState st;
    st.host = mode == ExtendMode::faithful ? maximal_quasi_flame(D, F_seeded, opts.cap) : D;
    st.grown = F_seeded;
    for (int v : order) {
        if (mode == ExtendMode::faithful) {
            try {
                EdgeSet target = key_I_star(st.host, st.grown, v, opts.cap);
                st.last_covering = covering_in_large(st.host, D, v, target);
            } catch (const cap_error&) {
                throw;
            } catch (const domain_error& e) {
                throw internal_error(std::string("quasi-flame step failed: ") + e.what());
            }
        } else {
            std::set<Edge> prefer;
            for (const Edge& e : st.grown.edges()) prefer.insert(e);
            st.last_covering = covering_in_large_pref(st.host, D, v, st.grown.in_edges(v),
                                                      &prefer);
        }
        st.grown = st.grown.add_edges(set_minus(st.last_covering.edges(), st.grown.edges()));
        st.host = st.host.restrict_at(v, st.grown.in_edges(v));
        st.processed.push_back(v);
        if (opts.step_checks) check_step(st, D, mode, v, opts.cap);
    }
    return st;
}

}  // namespace

LargeFlameCertificate extend_flame(const RootedDigraph& D, const RootedDigraph& F,
                                   const ExtendOptions& opts) {
    require(F.spanning_subgraph_of(D), "not-spanning-subgraph",
            "the seed flame must be a spanning subgraph of the host digraph");
    {
        FlameCheck fc = is_flame(F);
        require(fc.ok, "not-a-flame",
                "the seed is not a flame; first failure at " +
                    (fc.failing_vertex >= 0 ? F.name(fc.failing_vertex) : std::string("?")));
    }
    std::vector<int> order = resolve_order(D, opts.vertex_order);

    // A flame stays a flame when the root's out-edges join it; seed them in.
    EdgeSet root_edges;
    for (int h : D.out(D.root()))
        if (!F.has_edge(D.root(), h)) root_edges.push_back({D.root(), h});
    RootedDigraph F_seeded = F.add_edges(root_edges);

    bool fallback = false;
    ExtensionState run;
    if (opts.mode == ExtendMode::faithful) {
        try {
            run = run_recursion(D, F_seeded, order, ExtendMode::faithful, opts);
        } catch (const cap_error& e) {
            throw cap_error(std::string(e.what()) + "; the finite-direct mode has no such cap");
        }
    } else {
        try {
            run = run_recursion(D, F_seeded, order, ExtendMode::finite_direct, opts);
        } catch (const domain_error&) {
            // A covering target fell out of the realizable family; the quasi-flame
            // route always succeeds, at interval-enumeration cost.
            run = run_recursion(D, F_seeded, order, ExtendMode::faithful, opts);
            fallback = true;
        }
    }

    LargeFlameCertificate cert;
    cert.f_star = std::move(run.grown);
    cert.mode = to_string(opts.mode);
    cert.vertex_order = order;
    cert.seed = opts.seed;
    cert.used_fallback = fallback;

    if (!F.spanning_subgraph_of(cert.f_star))
        throw internal_error("extension dropped an edge of the seed flame");
    FlameCheck fc = is_flame(cert.f_star);
    if (!fc.ok)
        throw internal_error("extension result is not a flame at " +
                             cert.f_star.name(fc.failing_vertex));
    cert.flame_witnesses = std::move(fc.witnesses);
    for (int v = 0; v < D.vertex_count(); ++v) {
        if (v == D.root()) continue;
        auto lw = is_v_large(cert.f_star, D, v);
        if (!lw)
            throw internal_error("extension result is not large at " + D.name(v));
        cert.largeness_witnesses.emplace(v, std::move(*lw));
    }
    return cert;
}

LargeFlameCertificate lovasz(const RootedDigraph& D, const ExtendOptions& opts) {
    RootedDigraph empty_flame = RootedDigraph::build(D.name(D.root()), D.names(), {});
    LargeFlameCertificate cert = extend_flame(D, empty_flame, opts);
    for (int v = 0; v < D.vertex_count(); ++v) {
        if (v == D.root()) continue;
        int host = kappa(D, v);
        int sparse = kappa(cert.f_star, v);
        int degree = static_cast<int>(cert.f_star.in(v).size());
        if (host != sparse || sparse != degree)
            throw internal_error("connectivity identity fails at " + D.name(v) + ": " +
                                 std::to_string(host) + "/" + std::to_string(sparse) + "/" +
                                 std::to_string(degree));
    }
    return cert;
}

}  // namespace flamekit
