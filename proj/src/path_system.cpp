#include "flamekit/path_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flamekit/setops.hpp"

namespace flamekit {

std::string to_string(PathKind k) {
    switch (k) {
        case PathKind::xy: return "xy";
        case PathKind::XY: return "XY";
        case PathKind::xY: return "xY";
        case PathKind::Xy: return "Xy";
    }
    return "?";
}

PathKind path_kind_from_string(const std::string& s) {
    if (s == "xy") return PathKind::xy;
    if (s == "XY") return PathKind::XY;
    if (s == "xY") return PathKind::xY;
    if (s == "Xy") return PathKind::Xy;
    throw domain_error("bad-kind", "unknown path-system kind: " + s);
}

PathSystem PathSystem::make(PathKind kind, std::vector<Path> paths) {
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    return PathSystem{kind, std::move(paths)};
}

VertexSet PathSystem::initial_vertices() const {
    VertexSet out;
    for (const Path& p : paths) out.push_back(p.front());
    canonicalize(out);
    return out;
}

VertexSet PathSystem::terminal_vertices() const {
    VertexSet out;
    for (const Path& p : paths) out.push_back(p.back());
    canonicalize(out);
    return out;
}

EdgeSet PathSystem::initial_edges() const {
    EdgeSet out;
    for (const Path& p : paths) out.push_back({p[0], p[1]});
    canonicalize(out);
    return out;
}

EdgeSet PathSystem::terminal_edges() const {
    EdgeSet out;
    for (const Path& p : paths) out.push_back({p[p.size() - 2], p.back()});
    canonicalize(out);
    return out;
}

VertexSet PathSystem::vertices() const {
    VertexSet out;
    for (const Path& p : paths) out.insert(out.end(), p.begin(), p.end());
    canonicalize(out);
    return out;
}

EdgeSet PathSystem::edges() const {
    EdgeSet out;
    for (const Path& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) out.push_back({p[i], p[i + 1]});
    canonicalize(out);
    return out;
}

namespace {

VertexSet interior(const Path& p) {
    VertexSet out(p.begin() + 1, p.end() - 1);
    canonicalize(out);
    return out;
}

void check_one_path(const RootedDigraph& g, const Path& p) {
    require(p.size() >= 2, "bad-path", "a path needs at least one edge");
    std::set<int> seen;
    for (int v : p) {
        require(v >= 0 && v < g.vertex_count(), "bad-path", "path vertex out of range");
        require(seen.insert(v).second, "bad-path", "path revisits " + g.name(v));
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        require(g.has_edge(p[i], p[i + 1]), "bad-path",
                "missing edge " + g.name(p[i]) + " -> " + g.name(p[i + 1]));
}

}  // namespace

void check_path_system(const RootedDigraph& g, const PathSystem& ps, const SystemSpec& spec) {
    const bool single_source = spec.kind == PathKind::xy || spec.kind == PathKind::xY;
    const bool single_target = spec.kind == PathKind::xy || spec.kind == PathKind::Xy;
    if (single_source)
        require(spec.sources.size() == 1, "bad-spec", "kind needs exactly one source vertex");
    if (single_target)
        require(spec.targets.size() == 1, "bad-spec", "kind needs exactly one target vertex");

    VertexSet internal_excluded;
    switch (spec.kind) {
        case PathKind::xy: internal_excluded = set_union(spec.sources, spec.targets); break;
        case PathKind::XY: internal_excluded = set_union(spec.sources, spec.targets); break;
        case PathKind::xY: internal_excluded = set_union(spec.targets, spec.sources); break;
        case PathKind::Xy: internal_excluded = set_union(spec.sources, spec.targets); break;
    }

    for (const Path& p : ps.paths) {
        check_one_path(g, p);
        require(contains(spec.sources, p.front()), "bad-system",
                "path starts outside the source set: " + g.name(p.front()));
        require(contains(spec.targets, p.back()), "bad-system",
                "path ends outside the target set: " + g.name(p.back()));
        for (int v : interior(p))
            require(!contains(internal_excluded, v), "bad-system",
                    "path passes through endpoint vertex " + g.name(v));
    }

    // Pairwise disjointness per kind. Shared vertices allowed: xy -> {x, y},
    // xY -> {x}, Xy -> {y}, XY -> none.
    VertexSet shared;
    switch (spec.kind) {
        case PathKind::xy: shared = set_union(spec.sources, spec.targets); break;
        case PathKind::XY: shared = {}; break;
        case PathKind::xY: shared = spec.sources; break;
        case PathKind::Xy: shared = spec.targets; break;
    }
    for (size_t i = 0; i < ps.paths.size(); ++i) {
        for (size_t j = i + 1; j < ps.paths.size(); ++j) {
            VertexSet a(ps.paths[i].begin(), ps.paths[i].end());
            VertexSet b(ps.paths[j].begin(), ps.paths[j].end());
            canonicalize(a);
            canonicalize(b);
            for (int v : set_intersect(a, b))
                require(contains(shared, v), "bad-system",
                        "paths share vertex " + g.name(v));
        }
    }
}

bool path_system_ok(const RootedDigraph& g, const PathSystem& ps, const SystemSpec& spec) {
    try {
        check_path_system(g, ps, spec);
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

bool exists_path_avoiding(const RootedDigraph& g, const SystemSpec& spec, const VertexSet& avoid) {
    VertexSet internal_excluded = set_union(spec.sources, spec.targets);
    if (spec.kind == PathKind::xY) internal_excluded = set_union(spec.targets, spec.sources);
    // All kinds exclude their endpoint sets from path interiors; for single-endpoint
    // kinds that is vacuous on simple paths, so one rule serves all four.

    std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
    std::deque<int> queue;
    for (int s : spec.sources) {
        if (contains(avoid, s)) continue;
        if (!visited[static_cast<size_t>(s)]) {
            visited[static_cast<size_t>(s)] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int h : g.out(u)) {
            if (contains(avoid, h)) continue;
            if (contains(spec.targets, h)) return true;
            if (contains(internal_excluded, h)) continue;
            if (!visited[static_cast<size_t>(h)]) {
                visited[static_cast<size_t>(h)] = 1;
                queue.push_back(h);
            }
        }
    }
    return false;
}

bool is_separation(const RootedDigraph& g, const SystemSpec& spec, const VertexSet& S) {
    if (spec.kind == PathKind::xy) {
        for (int v : set_union(spec.sources, spec.targets))
            if (contains(S, v)) return false;
    }
    return !exists_path_avoiding(g, spec, S);
}

bool orthogonal(const PathSystem& ps, const VertexSet& S) {
    for (const Path& p : ps.paths) {
        int hits = 0;
        for (int v : p) hits += contains(S, v) ? 1 : 0;
        if (hits != 1) return false;
    }
    return subset_of(S, ps.vertices());
}

}  // namespace flamekit
