#include "flamekit/flame.hpp"

#include <algorithm>

#include "flamekit/menger.hpp"
#include "flamekit/setops.hpp"

namespace flamekit {

namespace {

void check_spanning(const RootedDigraph& sub, const RootedDigraph& host, const char* who) {
    require(sub.spanning_subgraph_of(host), "not-spanning-subgraph",
            std::string(who) + ": expected a spanning subgraph of the host digraph");
}

// All edge sets in_g(v) u (subset of extras), ascending in the binary counter over
// the sorted extra edges. Throws past the cap.
std::vector<EdgeSet> interval_sets(const EdgeSet& base, const EdgeSet& extras, int cap,
                                   const RootedDigraph& d, int v) {
    if (static_cast<int>(extras.size()) > cap)
        throw cap_error("interval at vertex " + d.name(v) + " has " +
                        std::to_string(extras.size()) + " optional edges, cap is " +
                        std::to_string(cap));
    std::vector<EdgeSet> out;
    size_t limit = size_t{1} << extras.size();
    for (size_t mask = 0; mask < limit; ++mask) {
        EdgeSet I = base;
        for (size_t i = 0; i < extras.size(); ++i)
            if (mask & (size_t{1} << i)) I.push_back(extras[i]);
        canonicalize(I);
        out.push_back(std::move(I));
    }
    return out;
}

}  // namespace

std::optional<GWitness> is_in_G(const RootedDigraph& d, int v, const EdgeSet& I) {
    require(v != d.root(), "target-is-root", "in-edge sets live at non-root vertices");
    RootedDigraph restricted = d.restrict_at(v, I);  // validates I as ingoing edges of v
    PathSystem sys = max_disjoint_paths(restricted, v);
    if (sys.size() != static_cast<int>(I.size())) return std::nullopt;
    if (sys.terminal_edges() != I)
        throw internal_error("maximum system of the restriction misses a terminal edge");
    return GWitness{v, I, std::move(sys)};
}

FlameCheck is_flame(const RootedDigraph& f) {
    FlameCheck res;
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (v == f.root()) continue;
        auto w = is_in_G(f, v, f.in_edges(v));
        if (!w) {
            res.failing_vertex = v;
            return res;
        }
        res.witnesses.emplace(v, std::move(*w));
    }
    res.ok = true;
    return res;
}

std::optional<LargenessWitness> is_v_large(const RootedDigraph& L, const RootedDigraph& D, int v) {
    check_spanning(L, D, "is_v_large");
    require(v != D.root() && v >= 0 && v < D.vertex_count(), "bad-target",
            "largeness is checked at non-root vertices");
    Edge rv{D.root(), v};
    bool rv_pres = !D.has_edge(rv) || L.has_edge(rv);
    if (!rv_pres) return std::nullopt;
    RootedDigraph L2 = L.has_edge(rv) ? L.delete_edge(rv) : L;
    PathSystem sys = max_disjoint_paths(L2, v);
    Separation sep = min_separation_rv(D, v);
    if (sys.size() != static_cast<int>(sep.vertices.size())) return std::nullopt;
    if (!orthogonal(sys, sep.vertices))
        throw internal_error("equal-size maximum system and minimum separation not orthogonal");
    return LargenessWitness{v, std::move(sys), std::move(sep), rv_pres};
}

LargeCheck is_large(const RootedDigraph& L, const RootedDigraph& D) {
    check_spanning(L, D, "is_large");
    LargeCheck res;
    for (int v = 0; v < D.vertex_count(); ++v) {
        if (v == D.root()) continue;
        if (L.in(v).size() == D.in(v).size()) continue;  // in-edges untouched
        auto w = is_v_large(L, D, v);
        if (!w) {
            res.failing_vertex = v;
            return res;
        }
        res.witnesses.emplace(v, std::move(*w));
    }
    res.ok = true;
    return res;
}

std::optional<EdgeSet> quasi_flame_violation_at(const RootedDigraph& d, const RootedDigraph& g,
                                                int v, int cap) {
    EdgeSet base = g.in_edges(v);
    EdgeSet extras = set_minus(d.in_edges(v), base);
    for (const EdgeSet& I : interval_sets(base, extras, cap, d, v))
        if (!is_in_G(d, v, I)) return I;
    return std::nullopt;
}

QuasiFlameCheck is_quasi_flame(const RootedDigraph& d, const RootedDigraph& g, int cap) {
    check_spanning(g, d, "is_quasi_flame");
    QuasiFlameCheck res;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (v == d.root()) continue;
        if (auto bad = quasi_flame_violation_at(d, g, v, cap)) {
            res.vertex = v;
            res.failing = std::move(*bad);
            return res;
        }
    }
    res.ok = true;
    return res;
}

SuperlargeCheck superlarge_condition(const RootedDigraph& g, const RootedDigraph& d, int cap) {
    check_spanning(g, d, "superlarge_condition");
    SuperlargeCheck res;
    for (const Edge& uv : set_minus(d.edges(), g.edges())) {
        int v = uv.head;
        RootedDigraph g_plus = g.add_edge(uv);
        bool found = false;
        for (const EdgeSet& I : interval_sets({}, g.in_edges(v), cap, g, v)) {
            if (!is_in_G(g, v, I)) continue;
            if (!is_in_G(g_plus, v, with_element(I, uv))) {
                res.witnesses.emplace(uv, I);
                found = true;
                break;
            }
        }
        if (!found) {
            res.failing_edge = uv;
            return res;
        }
    }
    res.ok = true;
    return res;
}

RootedDigraph maximal_quasi_flame(const RootedDigraph& d, const RootedDigraph& f, int cap) {
    check_spanning(f, d, "maximal_quasi_flame");
    {
        FlameCheck fc = is_flame(f);
        require(fc.ok, "not-a-flame",
                "maximal_quasi_flame: the seed subgraph is not a flame (fails at " +
                    (fc.failing_vertex >= 0 ? f.name(fc.failing_vertex) : std::string("?")) + ")");
    }
    RootedDigraph z = f;
    bool changed = true;
    while (changed) {
        changed = false;
        EdgeSet remaining = set_minus(d.edges(), z.edges());
        std::sort(remaining.begin(), remaining.end(), [](const Edge& a, const Edge& b) {
            return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
        });
        for (const Edge& e : remaining) {
            RootedDigraph candidate = z.add_edge(e);
            // Only the head's interval changes, and realizable sets stay realizable
            // under edge addition, so the single-vertex check suffices.
            if (!quasi_flame_violation_at(candidate, f, e.head, cap)) {
                z = std::move(candidate);
                changed = true;
            }
        }
    }
    return z;
}

}  // namespace flamekit
