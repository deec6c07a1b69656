// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance here is exact (combinatorial identities, zero mismatches).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flamekit/extend.hpp"
#include "flamekit/flame.hpp"
#include "flamekit/generators.hpp"
#include "flamekit/incompressibility.hpp"
#include "flamekit/menger.hpp"
#include "flamekit/oracle.hpp"
#include "flamekit/pym.hpp"
#include "flamekit/setops.hpp"
#include "../test_util.hpp"

using namespace flamekit;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_bin;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RootedDigraph seeded_random(int i, int n_min, int n_max, std::uint64_t base) {
    static const double kProbs[] = {0.2, 0.35, 0.5};
    InstanceSpec spec;
    spec.kind = "random";
    spec.n = n_min + (i % (n_max - n_min + 1));
    spec.p = kProbs[i % 3];
    spec.seed = base + static_cast<std::uint64_t>(i);
    return gen(spec).graph;
}

VertexSet map_set(const VertexSet& s, const RootedDigraph& from, const RootedDigraph& to) {
    VertexSet out;
    for (int v : s)
        if (auto m = map_vertex(from, v, to)) out.push_back(*m);
    canonicalize(out);
    return out;
}

// ---------------------------------------------------------------- criterion 1
bool lovasz_identity(std::string& detail) {
    auto t0 = Clock::now();
    for (int i = 0; i < 200; ++i) {
        RootedDigraph d = seeded_random(i, 4, 10, 10'000);
        LargeFlameCertificate cert = lovasz(d);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == d.root()) continue;
            int host = kappa(d, v);
            if (host != kappa(cert.f_star, v) ||
                host != static_cast<int>(cert.f_star.in(v).size())) {
                detail = "identity broken at instance " + std::to_string(i);
                return false;
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "200 instances, " << secs << " s";
    detail = os.str();
    return secs < 60.0;
}

// ---------------------------------------------------------------- criterion 2
bool flame_extension(std::string& detail) {
    auto t0 = Clock::now();
    for (int i = 0; i < 200; ++i) {
        RootedDigraph d = seeded_random(i, 4, 10, 20'000);
        RootedDigraph f = fktest::grow_random_flame(d, 777 + static_cast<std::uint64_t>(i));
        for (ExtendMode mode : {ExtendMode::finite_direct, ExtendMode::faithful}) {
            ExtendOptions opts;
            opts.mode = mode;
            LargeFlameCertificate cert = extend_flame(d, f, opts);
            if (!f.spanning_subgraph_of(cert.f_star) || !is_flame(cert.f_star).ok ||
                !is_large(cert.f_star, d).ok) {
                detail = "certificate failed at instance " + std::to_string(i) + " mode " +
                         to_string(mode);
                return false;
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "200 pairs x 2 modes, " << secs << " s";
    detail = os.str();
    return secs < 120.0;
}

// ---------------------------------------------------------------- criterion 3
bool menger_duality(std::string& detail) {
    long long cases = 0, mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        RootedDigraph d = seeded_random(i, 4, 7, 30'000);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == d.root()) continue;
            ++cases;
            RootedDigraph d2 = d.has_edge(d.root(), v) ? d.delete_edge({d.root(), v}) : d;
            SystemSpec spec{PathKind::xy, {d2.root()}, {v}};
            auto brute = brute_separations(d2, spec);
            size_t best = static_cast<size_t>(d2.vertex_count());
            bool any = false;
            for (const auto& s : brute) best = std::min(best, s.size()), any = true;
            OrthogonalPair pair = erdos_menger_pair(d, v);
            bool ok = orthogonal(pair.system, pair.separation.vertices) &&
                      is_separation(d2, spec, pair.separation.vertices) &&
                      pair.system.size() == static_cast<int>(pair.separation.vertices.size());
            if (any) ok = ok && pair.system.size() == static_cast<int>(best);
            if (!ok) ++mismatches;
        }
    }
    detail = std::to_string(cases) + " pairs, " + std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
}

// ---------------------------------------------------------------- criterion 4
bool separation_lattice(std::string& detail) {
    long long violations = 0, checked = 0;
    for (int i = 0; i < 50; ++i) {
        RootedDigraph d = seeded_random(i, 4, 6, 40'000);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == d.root()) continue;
            RootedDigraph d2 = d.has_edge(d.root(), v) ? d.delete_edge({d.root(), v}) : d;
            auto seps = brute_separations(d2, SystemSpec{PathKind::xy, {d2.root()}, {v}});
            if (seps.empty()) continue;
            Separation lo = min_separation_rv(d, v), hi = max_separation_rv(d, v);
            for (const auto& t : seps) {
                ++checked;
                if (!leq_separation_rv(d, v, lo.vertices, t)) ++violations;
                if (!leq_separation_rv(d, v, t, hi.vertices)) ++violations;
            }
            for (const auto& s : seps) {
                for (const auto& t : seps) {
                    ++checked;
                    // greatest common lower bound within the enumerated family
                    bool meet = false, join_ = false;
                    for (const auto& cand : seps) {
                        if (leq_separation_rv(d, v, cand, s) &&
                            leq_separation_rv(d, v, cand, t)) {
                            bool top = true;
                            for (const auto& u : seps)
                                if (leq_separation_rv(d, v, u, s) &&
                                    leq_separation_rv(d, v, u, t) &&
                                    !leq_separation_rv(d, v, u, cand))
                                    top = false;
                            if (top) meet = true;
                        }
                        if (leq_separation_rv(d, v, s, cand) &&
                            leq_separation_rv(d, v, t, cand)) {
                            bool bottom = true;
                            for (const auto& u : seps)
                                if (leq_separation_rv(d, v, s, u) &&
                                    leq_separation_rv(d, v, t, u) &&
                                    !leq_separation_rv(d, v, cand, u))
                                    bottom = false;
                            if (bottom) join_ = true;
                        }
                    }
                    if (!meet || !join_) ++violations;
                }
            }
        }
    }
    // Set-form extremes against the set-form enumeration.
    for (int i = 0; i < 50; ++i) {
        RootedDigraph d = seeded_random(i, 5, 6, 45'000);
        if (d.vertex_count() < 5) continue;
        VertexSet X{1}, Y{d.vertex_count() - 2, d.vertex_count() - 1};
        canonicalize(Y);
        if (!set_intersect(X, Y).empty()) continue;
        auto seps = brute_separations(d, SystemSpec{PathKind::XY, X, Y});
        if (seps.empty()) continue;
        Separation lo = min_separation(d, X, Y), hi = max_separation(d, X, Y);
        for (const auto& t : seps) {
            ++checked;
            if (!leq_separation(d, X, lo.vertices, t)) ++violations;
            if (!leq_separation(d, X, t, hi.vertices)) ++violations;
        }
    }
    detail = std::to_string(checked) + " checks, " + std::to_string(violations) + " violations";
    return violations == 0;
}

// ---------------------------------------------------------------- criterion 5
bool pym_postconditions(std::string& detail) {
    long long merges = 0, violations = 0;
    for (int i = 0; i < 50; ++i) {
        RootedDigraph d = seeded_random(i, 5, 6, 50'000);
        if (d.vertex_count() < 5) continue;
        VertexSet X{1, 2}, Y{d.vertex_count() - 2, d.vertex_count() - 1};
        canonicalize(X);
        canonicalize(Y);
        if (!set_intersect(X, Y).empty()) continue;
        std::vector<PathSystem> systems;
        try {
            systems = brute_XY_systems(d, X, Y);
        } catch (const cap_error&) {
            continue;
        }
        for (const auto& p : systems) {
            for (const auto& q : systems) {
                ++merges;
                PathSystem r = pym_merge(d, X, Y, p, q);
                bool ok = subset_of(p.initial_vertices(), r.initial_vertices()) &&
                          subset_of(q.terminal_vertices(), r.terminal_vertices()) &&
                          subset_of(r.edges(), set_union(p.edges(), q.edges()));
                if (!ok) ++violations;
            }
        }
    }
    detail = std::to_string(merges) + " merges, " + std::to_string(violations) + " violations";
    return merges > 0 && violations == 0;
}

// ---------------------------------------------------------------- criterion 6
bool incompressibility_oracle(std::string& detail) {
    long long cases = 0, mismatches = 0;
    struct Panel {
        const char* kind;
        bool incompressible;
    };
    for (const Panel& p : std::initializer_list<Panel>{
             {"figure2a", false}, {"figure2b", false}, {"figure2c", false}, {"figure2d", true}}) {
        for (int n = 2; n <= 4; ++n) {
            ++cases;
            GeneratedInstance inst = gen({p.kind, n, 0, 0, 0, 0.0, 0});
            if (is_incompressible(inst.graph, inst.X, inst.Y) != p.incompressible) ++mismatches;
        }
    }
    for (int i = 0; i < 100; ++i) {
        RootedDigraph d = seeded_random(i, 5, 7, 60'000);
        if (d.vertex_count() < 5) continue;
        VertexSet X{1, 2}, Y{d.vertex_count() - 2, d.vertex_count() - 1};
        canonicalize(X);
        canonicalize(Y);
        if (!set_intersect(X, Y).empty()) continue;
        ++cases;
        bool fast = is_incompressible(d, X, Y);
        bool brute;
        try {
            RootedDigraph stripped = strip_for_join(d, X, Y);
            bool joinable = false, all_cover = true;
            for (const auto& s : brute_XY_systems(stripped, X, Y)) {
                if (s.initial_vertices() != X) continue;
                joinable = true;
                if (s.terminal_vertices() != Y) all_cover = false;
            }
            brute = joinable && all_cover;
        } catch (const cap_error&) {
            --cases;
            continue;
        }
        if (fast != brute) ++mismatches;
    }
    detail = std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
}

// ---------------------------------------------------------------- criterion 7
bool tightness_calculus(std::string& detail) {
    long long fin_diff = 0, remains = 0, as_many = 0, delete_one = 0, violations = 0;

    // Tightness survives re-adding finitely much deleted material.
    for (std::uint64_t seed = 0; fin_diff < 100 && seed < 4000; ++seed) {
        RootedDigraph core = gen({"figure2d", 2 + static_cast<int>(seed % 3), 0, 0, 0, 0.0, 0}).graph;
        // decorate with one extra vertex wired at random, then delete it again
        SplitMix64 rng{70'000 + seed};
        std::vector<std::pair<std::string, std::string>> extra;
        for (int v = 0; v < core.vertex_count(); ++v) {
            if (rng.next_unit() < 0.4) extra.emplace_back("extra", core.name(v));
            if (rng.next_unit() < 0.4 && v != core.root()) extra.emplace_back(core.name(v), "extra");
        }
        std::vector<std::pair<std::string, std::string>> all;
        for (const Edge& e : core.edges()) all.emplace_back(core.name(e.tail), core.name(e.head));
        all.insert(all.end(), extra.begin(), extra.end());
        RootedDigraph d;
        try {
            d = RootedDigraph::build(core.name(core.root()), core.names(), all);
        } catch (const domain_error&) {
            continue;
        }
        if (!d.find("extra")) continue;
        int n = 2 + static_cast<int>(seed % 3);
        VertexSet X, Y;
        for (int k = 1; k <= n; ++k) {
            X.push_back(d.vertex("v" + std::to_string(k)));
            Y.push_back(d.vertex("w" + std::to_string(k)));
        }
        canonicalize(X);
        canonicalize(Y);
        RootedDigraph sub = d.delete_vertex(d.vertex("extra"));
        if (!is_incompressible(sub, map_set(X, d, sub), map_set(Y, d, sub))) continue;
        ++fin_diff;
        if (!is_incompressible(d, X, Y)) ++violations;
    }

    // Tightness of the trimmed pair plus joinability lifts to the full pair.
    for (std::uint64_t seed = 0; remains < 100 && seed < 4000; ++seed) {
        RootedDigraph d = seeded_random(static_cast<int>(seed), 6, 7, 80'000);
        VertexSet X{1, 2, 3}, Y;
        for (int v = d.vertex_count() - 3; v < d.vertex_count(); ++v) Y.push_back(v);
        canonicalize(Y);
        if (!set_intersect(X, Y).empty()) continue;
        int x = X.back(), y = Y.back();
        if (!is_incompressible(d, without_element(X, x), without_element(Y, y))) continue;
        if (!is_joinable(d, X, Y)) continue;
        ++remains;
        if (!is_incompressible(d, X, Y)) ++violations;
    }

    // New targets never exceed the source slack, exactly.
    for (std::uint64_t seed = 0; as_many < 100 && seed < 4000; ++seed) {
        RootedDigraph d = seeded_random(static_cast<int>(seed), 6, 8, 90'000);
        VertexSet X{1, 2, 3}, Y;
        for (int v = d.vertex_count() - 3; v < d.vertex_count(); ++v) Y.push_back(v);
        canonicalize(Y);
        if (!set_intersect(X, Y).empty()) continue;
        if (!is_joinable(d, X, Y)) continue;
        VertexSet xp{X.front()};
        // the sub-pair must be witnessed under the (X, Y) stripping convention
        auto wp = is_joinable(strip_for_join(d, X, Y), xp, Y);
        if (!wp) continue;
        VertexSet yp = wp->system.terminal_vertices();
        ++as_many;
        VertexSet got = extend_joinable(d, X, xp, Y, yp);
        if (set_minus(got, yp).size() > set_minus(X, xp).size() || !is_joinable(d, X, got))
            ++violations;
    }

    // Deletion repair uses at most |U| extra vertices, exactly, and preserves
    // extendability.
    for (std::uint64_t seed = 0; delete_one < 100 && seed < 6000; ++seed) {
        RootedDigraph d = seeded_random(static_cast<int>(seed), 6, 8, 95'000);
        VertexSet X{1, 2, 3}, Y;
        for (int v = d.vertex_count() - 3; v < d.vertex_count(); ++v) Y.push_back(v);
        canonicalize(Y);
        if (!set_intersect(X, Y).empty()) continue;
        VertexSet xp{X.front()};
        if (!finitely_extendable(d, X, xp, Y)) continue;
        int u = X[1] + (static_cast<int>(seed) % 2 == 0 ? 0 : 1);
        if (contains(xp, u) || u >= d.vertex_count() || u == d.root()) continue;
        VertexSet us{u};
        {
            RootedDigraph stripped = strip_for_join(d, X, Y);
            RootedDigraph del = stripped.delete_vertices(us);
            if (!is_joinable(del, map_set(xp, stripped, del),
                             map_set(set_minus(Y, us), stripped, del)))
                continue;
        }
        ++delete_one;
        VertexSet w = delete_preserving(d, X, xp, Y, us);
        bool ok = subset_of(us, w) && set_minus(w, us).size() <= us.size() &&
                  subset_of(set_minus(w, us), set_minus(X, xp));
        RootedDigraph after = d.delete_vertices(w);
        ok = ok && finitely_extendable(after, map_set(set_minus(X, w), d, after),
                                       map_set(set_minus(xp, w), d, after),
                                       map_set(set_minus(Y, w), d, after));
        if (!ok) ++violations;
    }

    detail = std::to_string(fin_diff) + "/" + std::to_string(remains) + "/" +
             std::to_string(as_many) + "/" + std::to_string(delete_one) + " instances, " +
             std::to_string(violations) + " violations";
    return fin_diff >= 100 && remains >= 100 && as_many >= 100 && delete_one >= 100 &&
           violations == 0;
}

// ---------------------------------------------------------------- criterion 8
bool bubble_postconditions(std::string& detail) {
    long long found = 0, violations = 0, second_branch = 0;

    auto check_instance = [&](const RootedDigraph& d, int w, const EdgeSet& I, Edge uv) {
        ++found;
        BubbleResult res;  // the operation re-verifies everything before returning
        try {
            res = bubble(d, w, I, uv);
        } catch (const error&) {
            ++violations;
            return;
        }
        second_branch += res.target_in_separation ? 1 : 0;
        bool ok = contains(res.separation.vertices, uv.head) &&
                  !contains(res.separation.vertices, d.root()) &&
                  res.system.terminal_vertices() == res.separation.vertices;
        bool uv_last = false;
        for (const Path& p : res.system.paths)
            if (Edge{p[p.size() - 2], p.back()} == uv) uv_last = true;
        ok = ok && uv_last;
        for (int t : d.in(uv.head)) {
            if (t == uv.tail || contains(res.separation.vertices, t)) continue;
            if (exists_path_avoiding(d, SystemSpec{PathKind::xy, {d.root()}, {t}},
                                     res.separation.vertices))
                ok = false;
        }
        if (!ok) ++violations;
    };

    // Guaranteed family: chains of varying length always satisfy the preconditions.
    for (int len = 2; len <= 5; ++len) {
        InstanceSpec spec{"chain", len + 1, 0, 0, 0, 0.0, 0};
        RootedDigraph d = gen(spec).graph;
        int w = d.vertex("c" + std::to_string(len + 1));
        int v = d.vertex("c" + std::to_string(len));
        int u = len >= 2 ? d.vertex("c" + std::to_string(len - 1)) : d.root();
        if (u == d.root()) continue;
        check_instance(d, w, d.in_edges(w), Edge{u, v});
    }

    for (std::uint64_t seed = 0; seed < 200 && found < 120; ++seed) {
        RootedDigraph d = seeded_random(static_cast<int>(seed), 5, 8, 100'000);
        for (int w = 1; w < d.vertex_count(); ++w) {
            if (d.has_edge(d.root(), w) || d.in(w).empty()) continue;
            std::vector<EdgeSet> family;
            try {
                family = brute_G(d, w);
            } catch (const cap_error&) {
                continue;
            }
            for (const EdgeSet& I : family) {
                bool one_up = true;
                for (const Edge& f : set_minus(d.in_edges(w), I))
                    if (!contains(family, with_element(I, f))) one_up = false;
                if (!one_up) continue;
                auto wit = is_in_G(d, w, I);
                if (!wit) continue;
                for (const Edge& uv : wit->system.edges()) {
                    if (uv.tail == d.root() || uv.head == w) continue;
                    if (is_in_G(d.delete_edge(uv), w, I).has_value()) continue;
                    check_instance(d, w, I, uv);
                }
            }
        }
    }
    detail = std::to_string(found) + " instances (" + std::to_string(second_branch) +
             " via the extended separation), " + std::to_string(violations) + " violations";
    return found >= 30 && violations == 0;
}

// ---------------------------------------------------------------- criterion 9
bool key_extension(std::string& detail) {
    long long instances = 0, violations = 0;
    for (std::uint64_t seed = 0; instances < 50 && seed < 600; ++seed) {
        RootedDigraph d = seeded_random(static_cast<int>(seed), 5, 6, 110'000);
        bool dense = false;
        for (int v = 0; v < d.vertex_count(); ++v)
            if (d.in(v).size() > 4) dense = true;
        if (dense) continue;
        RootedDigraph g = fktest::grow_random_flame(d, 31 + seed);
        RootedDigraph l = maximal_quasi_flame(d, g);
        for (int v = 0; v < l.vertex_count() && instances < 50; ++v) {
            if (v == l.root()) continue;
            ++instances;
            EdgeSet istar = key_I_star(l, g, v);
            bool ok = subset_of(g.in_edges(v), istar) && is_in_G(l, v, istar).has_value() &&
                      is_quasi_flame(l.restrict_at(v, istar), g).ok;
            if (!ok) ++violations;
        }
    }
    detail = std::to_string(instances) + " instances, " + std::to_string(violations) +
             " violations";
    return instances >= 50 && violations == 0;
}

// --------------------------------------------------------------- criterion 10
std::string run_pipe(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

bool cli_determinism(std::string& detail) {
    if (g_cli_bin.empty()) {
        detail = "no CLI binary given";
        return false;
    }
    const std::string gen_cmd = g_cli_bin + " gen --kind random --n 9 --p 0.35 --seed 7";
    std::vector<std::string> cmds = {
        gen_cmd,
        gen_cmd + " | " + g_cli_bin + " lovasz",
        gen_cmd + " | " + g_cli_bin + " menger --target v3",
        gen_cmd + " | " + g_cli_bin + " separation-min --target v3",
        g_cli_bin + " gen --kind fig1 --n0 2 --n1 3 --n2 2 | " + g_cli_bin + " lovasz --mode faithful",
        g_cli_bin + " oracle-compare --suite lattice --max-n 5 --cases 5 --seed 3",
    };
    int idx = 0;
    for (const std::string& cmd : cmds) {
        ++idx;
        std::string a = run_pipe(cmd), b = run_pipe(cmd);
        if (a.empty() || a != b) {
            detail = "invocation " + std::to_string(idx) + " not byte-stable";
            return false;
        }
    }
    detail = std::to_string(cmds.size()) + " invocations, all byte-stable";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_bin = argv[1];

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"lovasz-identity", lovasz_identity},
        {"flame-extension", flame_extension},
        {"menger-duality-orthogonality", menger_duality},
        {"separation-lattice", separation_lattice},
        {"pym-merge", pym_postconditions},
        {"incompressibility-oracle", incompressibility_oracle},
        {"tightness-calculus-properties", tightness_calculus},
        {"bubble-certificates", bubble_postconditions},
        {"key-extension", key_extension},
        {"cli-determinism", cli_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " [" << (i + 1) << "/10] " << criteria[i].name
                  << " (" << detail << ")\n"
                  << std::flush;
        failures += ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
