// Command-line front end: every subcommand reads the edge-list format (file or
// stdin), emits canonical JSON (or DOT where it makes sense) on stdout, and maps
// error categories onto exit codes: 1 parse, 2 domain, 3 cap refusal.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flamekit/certificates.hpp"
#include "flamekit/extend.hpp"
#include "flamekit/flame.hpp"
#include "flamekit/generators.hpp"
#include "flamekit/incompressibility.hpp"
#include "flamekit/menger.hpp"
#include "flamekit/oracle.hpp"
#include "flamekit/pym.hpp"
#include "flamekit/setops.hpp"

namespace fk = flamekit;
using fk::json;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw fk::domain_error("no-such-file", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fk::RootedDigraph load_digraph(const std::string& path) {
    return fk::RootedDigraph::from_data(fk::parse_digraph(read_input(path)));
}

// flame-check and large-check accept either an edge list or a certificate.
fk::RootedDigraph load_digraph_or_certificate(const std::string& path) {
    std::string text = read_input(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{')
        return fk::f_star_from_certificate(json::parse(text));
    return fk::RootedDigraph::from_data(fk::parse_digraph(text));
}

fk::VertexSet parse_vertex_list(const fk::RootedDigraph& d, const std::string& csv) {
    fk::VertexSet out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(d.vertex(tok));
    fk::canonicalize(out);
    return out;
}

fk::EdgeSet parse_edge_list_arg(const fk::RootedDigraph& d, const std::string& csv) {
    fk::EdgeSet out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        fk::require(colon != std::string::npos, "bad-edge-arg",
                    "edges are written tail:head, got " + tok);
        out.push_back({d.vertex(tok.substr(0, colon)), d.vertex(tok.substr(colon + 1))});
    }
    fk::canonicalize(out);
    return out;
}

void emit(const json& j) { std::cout << fk::canonical_dump(j); }

std::uint64_t env_seed() {
    const char* s = std::getenv("FLAMEKIT_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
}

json names_of(const fk::RootedDigraph& d, const fk::VertexSet& vs) {
    json arr = json::array();
    for (int v : vs) arr.push_back(d.name(v));
    return arr;
}

// ---- oracle-compare suites -------------------------------------------------

struct SuiteStats {
    long long cases = 0;
    long long mismatches = 0;
};

fk::RootedDigraph random_case(int i, int max_n, std::uint64_t seed) {
    static const double kProbs[] = {0.2, 0.35, 0.5};
    fk::InstanceSpec spec;
    spec.kind = "random";
    spec.n = 4 + (i % std::max(1, max_n - 3));
    spec.p = kProbs[i % 3];
    spec.seed = seed + static_cast<std::uint64_t>(i);
    return fk::gen(spec).graph;
}

SuiteStats suite_menger(int cases, int max_n, std::uint64_t seed) {
    SuiteStats st;
    for (int i = 0; i < cases; ++i) {
        fk::RootedDigraph d = random_case(i, max_n, seed);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == d.root()) continue;
            ++st.cases;
            fk::RootedDigraph d2 =
                d.has_edge(d.root(), v) ? d.delete_edge({d.root(), v}) : d;
            auto brute = fk::brute_separations(
                d2, fk::SystemSpec{fk::PathKind::xy, {d2.root()}, {v}});
            size_t min_sep = brute.empty() ? 0 : brute.front().size();
            for (const auto& s : brute) min_sep = std::min(min_sep, s.size());
            fk::OrthogonalPair pair = fk::erdos_menger_pair(d, v);
            bool ok = pair.system.size() == static_cast<int>(min_sep) &&
                      fk::orthogonal(pair.system, pair.separation.vertices) &&
                      fk::is_separation(d2, fk::SystemSpec{fk::PathKind::xy, {d2.root()}, {v}},
                                        pair.separation.vertices);
            if (!ok) ++st.mismatches;
        }
    }
    return st;
}

SuiteStats suite_lattice(int cases, int max_n, std::uint64_t seed) {
    SuiteStats st;
    for (int i = 0; i < cases; ++i) {
        fk::RootedDigraph d = random_case(i, std::min(max_n, 6), seed);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == d.root()) continue;
            ++st.cases;
            fk::RootedDigraph d2 =
                d.has_edge(d.root(), v) ? d.delete_edge({d.root(), v}) : d;
            auto brute = fk::brute_separations(
                d2, fk::SystemSpec{fk::PathKind::xy, {d2.root()}, {v}});
            fk::Separation lo = fk::min_separation_rv(d, v);
            fk::Separation hi = fk::max_separation_rv(d, v);
            bool ok = true;
            for (const auto& t : brute) {
                if (!fk::leq_separation_rv(d, v, lo.vertices, t)) ok = false;
                if (!fk::leq_separation_rv(d, v, t, hi.vertices)) ok = false;
            }
            if (!ok) ++st.mismatches;
        }
    }
    return st;
}

SuiteStats suite_g_sets(int cases, int max_n, std::uint64_t seed) {
    SuiteStats st;
    for (int i = 0; i < cases; ++i) {
        fk::RootedDigraph d = random_case(i, max_n, seed);
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == d.root()) continue;
            ++st.cases;
            auto family = fk::brute_G(d, v);
            fk::EdgeSet in = d.in_edges(v);
            bool ok = true;
            size_t limit = size_t{1} << in.size();
            for (size_t mask = 0; mask < limit; ++mask) {
                fk::EdgeSet I;
                for (size_t b = 0; b < in.size(); ++b)
                    if (mask & (size_t{1} << b)) I.push_back(in[b]);
                bool fast = fk::is_in_G(d, v, I).has_value();
                bool brute = fk::contains(family, I);
                if (fast != brute) ok = false;
            }
            if (!ok) ++st.mismatches;
        }
    }
    return st;
}

SuiteStats suite_pym(int cases, int max_n, std::uint64_t seed) {
    SuiteStats st;
    for (int i = 0; i < cases; ++i) {
        fk::RootedDigraph d = random_case(i, std::min(max_n, 6), seed);
        if (d.vertex_count() < 4) continue;
        fk::VertexSet X{1}, Y{d.vertex_count() - 1};
        if (d.vertex_count() >= 6) {
            X.push_back(2);
            Y.push_back(d.vertex_count() - 2);
        }
        fk::canonicalize(X);
        fk::canonicalize(Y);
        if (!fk::set_intersect(X, Y).empty()) continue;
        std::vector<fk::PathSystem> systems;
        try {
            systems = fk::brute_XY_systems(d, X, Y);
        } catch (const fk::cap_error&) {
            continue;
        }
        for (const auto& p : systems) {
            for (const auto& q : systems) {
                ++st.cases;
                fk::PathSystem r = fk::pym_merge(d, X, Y, p, q);
                bool ok = fk::subset_of(p.initial_vertices(), r.initial_vertices()) &&
                          fk::subset_of(q.terminal_vertices(), r.terminal_vertices()) &&
                          fk::subset_of(r.edges(), fk::set_union(p.edges(), q.edges()));
                if (!ok) ++st.mismatches;
            }
        }
    }
    return st;
}

bool brute_incompressible(const fk::RootedDigraph& d, const fk::VertexSet& X,
                          const fk::VertexSet& Y) {
    auto systems = fk::brute_XY_systems(fk::strip_for_join(d, X, Y), X, Y);
    bool joinable = false, all_cover = true;
    for (const auto& s : systems) {
        if (s.initial_vertices() != X) continue;
        joinable = true;
        if (s.terminal_vertices() != Y) all_cover = false;
    }
    return joinable && all_cover;
}

SuiteStats suite_incompressible(int cases, int max_n, std::uint64_t seed) {
    SuiteStats st;
    // The four panel families first, then random instances.
    struct Panel {
        const char* kind;
        bool joinable, incompressible;
    };
    const Panel panels[] = {{"figure2a", false, false},
                            {"figure2b", true, false},
                            {"figure2c", true, false},
                            {"figure2d", true, true}};
    for (const Panel& p : panels) {
        ++st.cases;
        fk::GeneratedInstance inst = fk::gen({p.kind, 3, 0, 0, 0, 0.0, 0});
        bool j = fk::is_joinable(inst.graph, inst.X, inst.Y).has_value();
        bool inc = fk::is_incompressible(inst.graph, inst.X, inst.Y);
        if (j != p.joinable || inc != p.incompressible) ++st.mismatches;
    }
    for (int i = 0; i < cases; ++i) {
        fk::RootedDigraph d = random_case(i, std::min(max_n, 7), seed);
        if (d.vertex_count() < 4) continue;
        fk::VertexSet X{1}, Y{d.vertex_count() - 1};
        if (d.vertex_count() >= 6) X.push_back(2);
        if (d.vertex_count() >= 7) Y.push_back(d.vertex_count() - 2);
        fk::canonicalize(X);
        fk::canonicalize(Y);
        if (!fk::set_intersect(X, Y).empty()) continue;
        ++st.cases;
        bool fast = fk::is_incompressible(d, X, Y);
        bool brute = false;
        try {
            brute = brute_incompressible(d, X, Y);
        } catch (const fk::cap_error&) {
            --st.cases;
            continue;
        }
        if (fast != brute) ++st.mismatches;
    }
    return st;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rooted-digraph connectivity toolkit: flames, separations, linkages"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string target, base, ambient, flame_path, sources_csv, targets_csv;
    std::string mode_str = "finite-direct", order_csv, kind, edge_arg, edges_arg, spec_path;
    std::string suite = "menger";
    bool dot = false;
    int cap = fk::kDefaultInDegreeCap;
    long long seed_arg = -1;
    fk::InstanceSpec gspec;
    int max_n = 7, num_cases = 100;

    auto* c_validate = app.add_subcommand("validate", "check the structural invariants");
    c_validate->add_option("input", input);

    auto* c_kappa = app.add_subcommand("kappa", "local connectivity from the root");
    c_kappa->add_option("--target", target)->required();
    c_kappa->add_option("input", input);

    auto* c_menger = app.add_subcommand("menger", "maximum system with orthogonal separation");
    c_menger->add_option("--target", target)->required();
    c_menger->add_option("input", input);

    auto* c_sep_min = app.add_subcommand("separation-min", "least minimum separation");
    auto* c_sep_max = app.add_subcommand("separation-max", "greatest minimum separation");
    for (auto* c : {c_sep_min, c_sep_max}) {
        c->add_option("--target", target);
        c->add_option("--sources", sources_csv);
        c->add_option("--targets", targets_csv);
        c->add_option("input", input);
    }

    auto* c_flame = app.add_subcommand("flame-check", "is the digraph a flame?");
    c_flame->add_option("input", input);

    auto* c_large = app.add_subcommand("large-check", "does the subgraph preserve connectivity?");
    c_large->add_option("--ambient", ambient)->required();
    c_large->add_option("input", input);

    auto* c_qf = app.add_subcommand("quasi-flame-check", "interval realizability over a base");
    c_qf->add_option("--base", base)->required();
    c_qf->add_option("--cap-in-degree", cap);
    c_qf->add_option("input", input);

    auto* c_extend = app.add_subcommand("extend", "grow a flame until it is large");
    c_extend->add_option("--flame", flame_path)->required();
    c_extend->add_option("--mode", mode_str);
    c_extend->add_option("--order", order_csv);
    c_extend->add_option("--seed", seed_arg);
    c_extend->add_option("--cap-in-degree", cap);
    c_extend->add_flag("--dot", dot);
    c_extend->add_option("input", input);

    auto* c_lovasz = app.add_subcommand("lovasz", "large flame from the edgeless seed");
    c_lovasz->add_option("--mode", mode_str);
    c_lovasz->add_option("--seed", seed_arg);
    c_lovasz->add_option("--cap-in-degree", cap);
    c_lovasz->add_flag("--dot", dot);
    c_lovasz->add_option("input", input);

    auto* c_join = app.add_subcommand("joinable", "disjoint paths covering the source set");
    auto* c_incomp = app.add_subcommand("incompressible", "every covering system covers Y");
    for (auto* c : {c_join, c_incomp}) {
        c->add_option("--sources", sources_csv)->required();
        c->add_option("--targets", targets_csv)->required();
        c->add_option("input", input);
    }

    auto* c_bubble = app.add_subcommand("bubble", "separation certificate for a critical edge");
    c_bubble->add_option("--at", target)->required();
    c_bubble->add_option("--edges", edges_arg)->required();
    c_bubble->add_option("--edge", edge_arg)->required();
    c_bubble->add_option("input", input);

    auto* c_gen = app.add_subcommand("gen", "deterministic instance generators");
    c_gen->add_option("--kind", gspec.kind);
    c_gen->add_option("--n", gspec.n);
    c_gen->add_option("--n0", gspec.n0);
    c_gen->add_option("--n1", gspec.n1);
    c_gen->add_option("--n2", gspec.n2);
    c_gen->add_option("--p", gspec.p);
    bool gen_seed_given = false;
    c_gen->add_option("--seed", seed_arg)->each([&](const std::string&) { gen_seed_given = true; });
    c_gen->add_option("--spec", spec_path);
    c_gen->add_flag("--dot", dot);

    auto* c_oracle = app.add_subcommand("oracle-compare", "fast routes against brute force");
    c_oracle->add_option("--suite", suite);
    c_oracle->add_option("--max-n", max_n);
    c_oracle->add_option("--cases", num_cases);
    c_oracle->add_option("--seed", seed_arg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << fk::canonical_dump(json{{"error", "usage"}, {"detail", e.what()}});
        return 2;
    }

    try {
        if (*c_validate) {
            fk::DigraphData data = fk::parse_digraph(read_input(input));
            auto diags = fk::validate(data);
            json arr = json::array();
            for (const auto& d : diags) arr.push_back({{"kind", d.kind}, {"detail", d.detail}});
            emit(json{{"diagnostics", arr}});
            return diags.empty() ? 0 : 2;
        }
        if (*c_kappa) {
            fk::RootedDigraph d = load_digraph(input);
            emit(json{{"kappa", fk::kappa(d, d.vertex(target))}});
            return 0;
        }
        if (*c_menger) {
            fk::RootedDigraph d = load_digraph(input);
            emit(fk::pair_to_json(d, fk::erdos_menger_pair(d, d.vertex(target))));
            return 0;
        }
        if (*c_sep_min || *c_sep_max) {
            bool want_min = static_cast<bool>(*c_sep_min);
            fk::RootedDigraph d = load_digraph(input);
            fk::Separation s;
            if (!target.empty()) {
                int v = d.vertex(target);
                s = want_min ? fk::min_separation_rv(d, v) : fk::max_separation_rv(d, v);
            } else {
                fk::require(!sources_csv.empty() && !targets_csv.empty(), "bad-usage",
                            "give either --target or both --sources and --targets");
                fk::VertexSet X = parse_vertex_list(d, sources_csv);
                fk::VertexSet Y = parse_vertex_list(d, targets_csv);
                s = want_min ? fk::min_separation(d, X, Y) : fk::max_separation(d, X, Y);
            }
            emit(json{{"separation", names_of(d, s.vertices)}});
            return 0;
        }
        if (*c_flame) {
            fk::RootedDigraph f = load_digraph_or_certificate(input);
            fk::FlameCheck fc = fk::is_flame(f);
            if (!fc.ok) {
                emit(json{{"is_flame", false}, {"failing_vertex", f.name(fc.failing_vertex)}});
                return 2;
            }
            json w = json::object();
            for (const auto& [v, gw] : fc.witnesses) w[f.name(v)] = fk::paths_to_json(f, gw.system);
            emit(json{{"is_flame", true}, {"witnesses", w}});
            return 0;
        }
        if (*c_large) {
            fk::RootedDigraph host = load_digraph(ambient);
            fk::RootedDigraph sub = fk::reindex_like(load_digraph_or_certificate(input), host);
            fk::LargeCheck lc = fk::is_large(sub, host);
            if (!lc.ok) {
                emit(json{{"is_large", false}, {"failing_vertex", host.name(lc.failing_vertex)}});
                return 2;
            }
            json w = json::object();
            for (const auto& [v, lw] : lc.witnesses) {
                w[host.name(v)] = json{{"paths", fk::paths_to_json(sub, lw.system)},
                                       {"separation", names_of(host, lw.separation.vertices)}};
            }
            emit(json{{"is_large", true}, {"witnesses", w}});
            return 0;
        }
        if (*c_qf) {
            fk::RootedDigraph d = load_digraph(input);
            fk::RootedDigraph g = fk::reindex_like(load_digraph(base), d);
            fk::QuasiFlameCheck qc = fk::is_quasi_flame(d, g, cap);
            if (!qc.ok) {
                json bad = json::array();
                for (const fk::Edge& e : qc.failing) bad.push_back({d.name(e.tail), d.name(e.head)});
                emit(json{{"is_quasi_flame", false},
                          {"vertex", d.name(qc.vertex)},
                          {"failing_set", bad}});
                return 2;
            }
            emit(json{{"is_quasi_flame", true}});
            return 0;
        }
        if (*c_extend || *c_lovasz) {
            fk::RootedDigraph d = load_digraph(input);
            fk::ExtendOptions opts;
            opts.mode = fk::extend_mode_from_string(mode_str);
            opts.cap = cap;
            if (seed_arg >= 0) opts.seed = seed_arg;
            if (!order_csv.empty()) {
                std::istringstream ss(order_csv);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) opts.vertex_order.push_back(d.vertex(tok));
            }
            fk::LargeFlameCertificate cert =
                *c_extend ? fk::extend_flame(d, fk::reindex_like(load_digraph(flame_path), d), opts)
                          : fk::lovasz(d, opts);
            if (dot)
                std::cout << fk::to_dot(cert.f_star);
            else
                emit(fk::certificate_to_json(cert));
            return 0;
        }
        if (*c_join) {
            fk::RootedDigraph d = load_digraph(input);
            fk::VertexSet X = parse_vertex_list(d, sources_csv);
            fk::VertexSet Y = parse_vertex_list(d, targets_csv);
            auto w = fk::is_joinable(d, X, Y);
            if (!w) {
                emit(json{{"joinable", false}});
                return 0;
            }
            emit(json{{"joinable", true},
                      {"witness", fk::paths_to_json(d, w->system)},
                      {"trivial", names_of(d, w->trivial)}});
            return 0;
        }
        if (*c_incomp) {
            fk::RootedDigraph d = load_digraph(input);
            emit(json{{"incompressible",
                       fk::is_incompressible(d, parse_vertex_list(d, sources_csv),
                                             parse_vertex_list(d, targets_csv))}});
            return 0;
        }
        if (*c_bubble) {
            fk::RootedDigraph d = load_digraph(input);
            fk::BubbleResult res = fk::bubble(d, d.vertex(target),
                                              parse_edge_list_arg(d, edges_arg),
                                              parse_edge_list_arg(d, edge_arg).front());
            emit(json{{"separation", names_of(d, res.separation.vertices)},
                      {"paths", fk::paths_to_json(d, res.system)},
                      {"target_in_separation", res.target_in_separation}});
            return 0;
        }
        if (*c_gen) {
            if (!spec_path.empty()) {
                json j = json::parse(read_input(spec_path));
                gspec.kind = j.at("kind").get<std::string>();
                gspec.n = j.value("n", 0);
                gspec.n0 = j.value("n0", 0);
                gspec.n1 = j.value("n1", 0);
                gspec.n2 = j.value("n2", 0);
                gspec.p = j.value("p", 0.0);
                gspec.seed = j.value("seed", std::uint64_t{0});
                if (j.contains("seed")) gen_seed_given = true;
            } else {
                gspec.seed = gen_seed_given ? static_cast<std::uint64_t>(seed_arg) : env_seed();
            }
            fk::GeneratedInstance inst = fk::gen(gspec);
            if (dot) {
                std::cout << fk::to_dot(inst.graph);
                return 0;
            }
            std::cout << fk::serialize(inst.graph);
            if (!inst.X.empty()) {
                std::cout << "# X";
                for (int v : inst.X) std::cout << " " << inst.graph.name(v);
                std::cout << "\n# Y";
                for (int v : inst.Y) std::cout << " " << inst.graph.name(v);
                std::cout << "\n";
            }
            return 0;
        }
        if (*c_oracle) {
            std::uint64_t seed = seed_arg >= 0 ? static_cast<std::uint64_t>(seed_arg) : env_seed();
            SuiteStats st;
            if (suite == "menger")
                st = suite_menger(num_cases, max_n, seed);
            else if (suite == "lattice")
                st = suite_lattice(num_cases, max_n, seed);
            else if (suite == "g-sets")
                st = suite_g_sets(num_cases, max_n, seed);
            else if (suite == "pym")
                st = suite_pym(num_cases, max_n, seed);
            else if (suite == "incompressible")
                st = suite_incompressible(num_cases, max_n, seed);
            else
                throw fk::domain_error("bad-suite", "unknown suite: " + suite);
            emit(json{{"suite", suite}, {"cases", st.cases}, {"mismatches", st.mismatches}});
            return st.mismatches == 0 ? 0 : 2;
        }
    } catch (const fk::parse_error& e) {
        std::cerr << fk::canonical_dump(
            json{{"error", "parse"}, {"line", e.line()}, {"detail", e.what()}});
        return 1;
    } catch (const fk::cap_error& e) {
        std::cerr << fk::canonical_dump(json{{"error", "cap"}, {"detail", e.what()}});
        return 3;
    } catch (const fk::internal_error& e) {
        std::cerr << fk::canonical_dump(json{{"error", "internal"}, {"detail", e.what()}});
        return 4;
    } catch (const fk::error& e) {
        std::cerr << fk::canonical_dump(
            json{{"error", e.code()}, {"detail", e.what()}});
        return 2;
    } catch (const json::exception& e) {
        std::cerr << fk::canonical_dump(json{{"error", "bad-json"}, {"detail", e.what()}});
        return 2;
    }
    return 0;
}
