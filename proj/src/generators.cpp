#include "flamekit/generators.hpp"

#include "flamekit/setops.hpp"

namespace flamekit {

namespace {

using EdgeNames = std::vector<std::pair<std::string, std::string>>;

GeneratedInstance make(const std::string& root, const std::vector<std::string>& vertices,
                       const EdgeNames& edges) {
    GeneratedInstance inst;
    inst.graph = RootedDigraph::build(root, vertices, edges);
    return inst;
}

std::string num_name(const char* prefix, int i) { return prefix + std::to_string(i); }

GeneratedInstance gen_random(const InstanceSpec& spec) {
    require(spec.n >= 1, "bad-spec", "random: n must be at least 1");
    require(spec.p >= 0.0 && spec.p <= 1.0, "bad-spec", "random: p must lie in [0, 1]");
    std::vector<std::string> names{"r"};
    for (int i = 1; i < spec.n; ++i) names.push_back(num_name("v", i));
    SplitMix64 rng{spec.seed};
    EdgeNames edges;
    for (int i = 0; i < spec.n; ++i) {
        for (int j = 0; j < spec.n; ++j) {
            if (i == j || j == 0) continue;  // no loops, the root keeps in-degree zero
            if (rng.next_unit() < spec.p) edges.emplace_back(names[static_cast<size_t>(i)],
                                                             names[static_cast<size_t>(j)]);
        }
    }
    return make("r", names, edges);
}

GeneratedInstance gen_fig1(const InstanceSpec& spec) {
    require(spec.n0 >= 1 && spec.n1 >= 1 && spec.n2 >= 1, "bad-spec",
            "fig1: all three layer sizes must be at least 1");
    std::vector<std::string> names{"r"};
    EdgeNames edges;
    for (int i = 0; i < spec.n0; ++i) {
        names.push_back(num_name("a", i));
        edges.emplace_back("r", num_name("a", i));
    }
    for (int j = 0; j < spec.n1; ++j) names.push_back(num_name("b", j));
    for (int k = 0; k < spec.n2; ++k) names.push_back(num_name("c", k));
    for (int i = 0; i < spec.n0; ++i)
        for (int j = 0; j < spec.n1; ++j) edges.emplace_back(num_name("a", i), num_name("b", j));
    for (int j = 0; j < spec.n1; ++j)
        for (int k = 0; k < spec.n2; ++k) edges.emplace_back(num_name("b", j), num_name("c", k));
    return make("r", names, edges);
}

GeneratedInstance gen_chain(const InstanceSpec& spec) {
    require(spec.n >= 1, "bad-spec", "chain: n must be at least 1");
    std::vector<std::string> names{"r"};
    EdgeNames edges;
    std::string prev = "r";
    for (int i = 1; i <= spec.n; ++i) {
        names.push_back(num_name("c", i));
        edges.emplace_back(prev, num_name("c", i));
        prev = num_name("c", i);
    }
    return make("r", names, edges);
}

GeneratedInstance gen_star(const InstanceSpec& spec) {
    require(spec.n >= 1, "bad-spec", "star: n must be at least 1");
    std::vector<std::string> names{"r"};
    EdgeNames edges;
    for (int i = 1; i <= spec.n; ++i) {
        names.push_back(num_name("s", i));
        edges.emplace_back("r", num_name("s", i));
    }
    return make("r", names, edges);
}

// The four source/sink panel families, truncated to finite size with their
// classifications intact: (a) not joinable, (b) and (c) joinable but compressible,
// (d) incompressible. The root is an isolated formal vertex.
GeneratedInstance gen_figure2(const InstanceSpec& spec, char panel) {
    require(spec.n >= 1, "bad-spec", "figure2: n must be at least 1");
    const int n = spec.n;
    std::vector<std::string> names{"r"};
    EdgeNames edges;
    int x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    switch (panel) {
        case 'a':  // n+1 sources fan into n sinks
            x_lo = 0, x_hi = n, y_lo = 1, y_hi = n;
            for (int i = 1; i <= n; ++i) {
                edges.emplace_back(num_name("v", i), num_name("w", i));
                edges.emplace_back("v0", num_name("w", i));
            }
            break;
        case 'b':  // n sources, a shared extra sink w0
            x_lo = 1, x_hi = n, y_lo = 0, y_hi = n;
            for (int i = 1; i <= n; ++i) {
                edges.emplace_back(num_name("v", i), num_name("w", i));
                edges.emplace_back(num_name("v", i), "w0");
            }
            break;
        case 'c':  // upper-triangular fan, one sink more than sources
            x_lo = 0, x_hi = n - 1, y_lo = 0, y_hi = n;
            for (int i = 0; i <= n - 1; ++i)
                for (int j = i; j <= n; ++j)
                    edges.emplace_back(num_name("v", i), num_name("w", j));
            break;
        case 'd':  // perfect matching
            x_lo = 1, x_hi = n, y_lo = 1, y_hi = n;
            for (int i = 1; i <= n; ++i) edges.emplace_back(num_name("v", i), num_name("w", i));
            break;
    }
    for (int i = x_lo; i <= x_hi; ++i) names.push_back(num_name("v", i));
    for (int j = y_lo; j <= y_hi; ++j) names.push_back(num_name("w", j));
    GeneratedInstance inst = make("r", names, edges);
    for (int i = x_lo; i <= x_hi; ++i) inst.X.push_back(inst.graph.vertex(num_name("v", i)));
    for (int j = y_lo; j <= y_hi; ++j) inst.Y.push_back(inst.graph.vertex(num_name("w", j)));
    canonicalize(inst.X);
    canonicalize(inst.Y);
    return inst;
}

}  // namespace

GeneratedInstance gen(const InstanceSpec& spec) {
    if (spec.kind == "random") return gen_random(spec);
    if (spec.kind == "fig1") return gen_fig1(spec);
    if (spec.kind == "chain") return gen_chain(spec);
    if (spec.kind == "star") return gen_star(spec);
    if (spec.kind == "figure2a") return gen_figure2(spec, 'a');
    if (spec.kind == "figure2b") return gen_figure2(spec, 'b');
    if (spec.kind == "figure2c") return gen_figure2(spec, 'c');
    if (spec.kind == "figure2d") return gen_figure2(spec, 'd');
    throw domain_error("bad-spec", "unknown instance kind: " + spec.kind);
}

}  // namespace flamekit
