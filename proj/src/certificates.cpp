#include "flamekit/certificates.hpp"

#include <algorithm>

namespace flamekit {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json digraph_to_json(const RootedDigraph& d) {
    json vm = json::object();
    for (int v = 0; v < d.vertex_count(); ++v) vm[d.name(v)] = v;
    json edges = json::array();
    for (const Edge& e : d.edges()) edges.push_back({d.name(e.tail), d.name(e.head)});
    return json{{"root", d.name(d.root())}, {"vertex_map", vm}, {"edges", edges}};
}

namespace {

std::vector<std::string> names_from_vertex_map(const json& vm) {
    std::vector<std::string> names(vm.size());
    for (const auto& [name, idx] : vm.items()) {
        size_t i = idx.get<size_t>();
        if (i >= names.size() || !names[i].empty())
            throw domain_error("bad-certificate", "vertex_map indices must be dense and unique");
        names[i] = name;
    }
    return names;
}

std::vector<std::pair<std::string, std::string>> edge_list(const json& edges) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw domain_error("bad-certificate", "edges must be [tail, head] pairs");
        out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return out;
}

}  // namespace

RootedDigraph digraph_from_json(const json& j) {
    return RootedDigraph::build(j.at("root").get<std::string>(),
                                names_from_vertex_map(j.at("vertex_map")),
                                edge_list(j.at("edges")));
}

json paths_to_json(const RootedDigraph& d, const PathSystem& ps) {
    json arr = json::array();
    for (const Path& p : ps.paths) {
        json names = json::array();
        for (int v : p) names.push_back(d.name(v));
        arr.push_back(std::move(names));
    }
    return arr;
}

json pair_to_json(const RootedDigraph& d, const OrthogonalPair& pair) {
    json vm = json::object();
    for (int v = 0; v < d.vertex_count(); ++v) vm[d.name(v)] = v;
    json sep = json::array();
    for (int v : pair.separation.vertices) sep.push_back(d.name(v));
    return json{{"kind", to_string(pair.system.kind)},
                {"paths", paths_to_json(d, pair.system)},
                {"root", d.name(d.root())},
                {"separation", sep},
                {"vertex_map", vm}};
}

json certificate_to_json(const LargeFlameCertificate& cert) {
    const RootedDigraph& f = cert.f_star;
    json vm = json::object();
    for (int v = 0; v < f.vertex_count(); ++v) vm[f.name(v)] = v;
    json edges = json::array();
    for (const Edge& e : f.edges()) edges.push_back({f.name(e.tail), f.name(e.head)});
    json flame = json::object();
    for (const auto& [v, w] : cert.flame_witnesses) flame[f.name(v)] = paths_to_json(f, w.system);
    json largeness = json::object();
    for (const auto& [v, w] : cert.largeness_witnesses) {
        json sep = json::array();
        for (int s : w.separation.vertices) sep.push_back(f.name(s));
        largeness[f.name(v)] = json{{"paths", paths_to_json(f, w.system)}, {"separation", sep}};
    }
    json order = json::array();
    for (int v : cert.vertex_order) order.push_back(f.name(v));
    return json{{"root", f.name(f.root())},
                {"vertex_map", vm},
                {"f_star_edges", edges},
                {"flame_witnesses", flame},
                {"largeness_witnesses", largeness},
                {"mode", cert.mode},
                {"vertex_order", order},
                {"seed", cert.seed ? json(*cert.seed) : json(nullptr)}};
}

RootedDigraph f_star_from_certificate(const json& j) {
    return RootedDigraph::build(j.at("root").get<std::string>(),
                                names_from_vertex_map(j.at("vertex_map")),
                                edge_list(j.at("f_star_edges")));
}

}  // namespace flamekit
