#include "flamekit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "flamekit/setops.hpp"

namespace flamekit {

namespace {

void check_vertex_cap(const RootedDigraph& d, const char* what) {
    if (d.vertex_count() > kBruteVertexCap)
        throw cap_error(std::string(what) + ": more than " + std::to_string(kBruteVertexCap) +
                        " vertices");
}

// Vertices two paths may share, given the kind.
VertexSet shared_vertices(const SystemSpec& spec) {
    switch (spec.kind) {
        case PathKind::xy: return set_union(spec.sources, spec.targets);
        case PathKind::XY: return {};
        case PathKind::xY: return spec.sources;
        case PathKind::Xy: return spec.targets;
    }
    return {};
}

bool compatible(const Path& a, const Path& b, const VertexSet& shared) {
    VertexSet va(a.begin(), a.end()), vb(b.begin(), b.end());
    canonicalize(va);
    canonicalize(vb);
    return subset_of(set_intersect(va, vb), shared);
}

std::vector<PathSystem> enumerate_systems(const SystemSpec& spec,
                                          const std::vector<Path>& paths) {
    if (static_cast<int>(paths.size()) > kBrutePathCap)
        throw cap_error("system enumeration: more than " + std::to_string(kBrutePathCap) +
                        " candidate paths");
    VertexSet shared = shared_vertices(spec);
    std::vector<std::vector<char>> comp(paths.size(), std::vector<char>(paths.size(), 0));
    for (size_t i = 0; i < paths.size(); ++i)
        for (size_t j = i + 1; j < paths.size(); ++j)
            comp[i][j] = comp[j][i] = compatible(paths[i], paths[j], shared) ? 1 : 0;

    std::vector<PathSystem> out;
    std::vector<size_t> chosen;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == paths.size()) {
            std::vector<Path> ps;
            ps.reserve(chosen.size());
            for (size_t k : chosen) ps.push_back(paths[k]);
            out.push_back(PathSystem::make(spec.kind, std::move(ps)));
            return;
        }
        rec(i + 1);
        for (size_t k : chosen)
            if (!comp[k][i]) return;
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const PathSystem& a, const PathSystem& b) { return a.paths < b.paths; });
    return out;
}

}  // namespace

std::vector<Path> enumerate_paths(const RootedDigraph& d, const SystemSpec& spec) {
    VertexSet internal_excluded = set_union(spec.sources, spec.targets);
    std::vector<Path> out;
    Path cur;
    std::vector<char> on_path(static_cast<size_t>(d.vertex_count()), 0);
    std::function<void(int)> dfs = [&](int u) {
        for (int h : d.out(u)) {
            if (on_path[static_cast<size_t>(h)]) continue;
            if (contains(spec.targets, h)) {
                cur.push_back(h);
                out.push_back(cur);
                cur.pop_back();
                continue;
            }
            if (contains(internal_excluded, h)) continue;
            cur.push_back(h);
            on_path[static_cast<size_t>(h)] = 1;
            dfs(h);
            on_path[static_cast<size_t>(h)] = 0;
            cur.pop_back();
        }
    };
    for (int s : spec.sources) {
        cur = {s};
        on_path.assign(static_cast<size_t>(d.vertex_count()), 0);
        on_path[static_cast<size_t>(s)] = 1;
        dfs(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathSystem> brute_all_path_systems(const RootedDigraph& d, int v) {
    check_vertex_cap(d, "path-system enumeration");
    require(v != d.root() && v >= 0 && v < d.vertex_count(), "bad-target",
            "target must be a non-root vertex");
    SystemSpec spec{PathKind::xy, {d.root()}, {v}};
    return enumerate_systems(spec, enumerate_paths(d, spec));
}

long long count_path_systems_alt(const RootedDigraph& d, int v) {
    check_vertex_cap(d, "path-system recount");
    SystemSpec spec{PathKind::xy, {d.root()}, {v}};
    auto paths = enumerate_paths(d, spec);
    VertexSet shared = shared_vertices(spec);
    // Count by descending index with explicit pairwise checks against the stack;
    // deliberately a different recursion than enumerate_systems.
    std::vector<size_t> stack;
    std::function<long long(int)> rec = [&](int i) -> long long {
        if (i < 0) return 1;
        long long total = rec(i - 1);
        for (size_t k : stack)
            if (!compatible(paths[k], paths[static_cast<size_t>(i)], shared)) return total;
        stack.push_back(static_cast<size_t>(i));
        total += rec(i - 1);
        stack.pop_back();
        return total;
    };
    return rec(static_cast<int>(paths.size()) - 1);
}

std::vector<EdgeSet> brute_G(const RootedDigraph& d, int v) {
    std::vector<EdgeSet> out;
    for (const PathSystem& ps : brute_all_path_systems(d, v)) out.push_back(ps.terminal_edges());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> brute_separations(const RootedDigraph& d, const SystemSpec& spec) {
    check_vertex_cap(d, "separation enumeration");
    VertexSet candidates;
    for (int v = 0; v < d.vertex_count(); ++v) candidates.push_back(v);
    if (spec.kind == PathKind::xy)
        candidates = set_minus(candidates, set_union(spec.sources, spec.targets));

    std::vector<VertexSet> seps;
    size_t limit = size_t{1} << candidates.size();
    for (size_t mask = 0; mask < limit; ++mask) {
        VertexSet S;
        for (size_t i = 0; i < candidates.size(); ++i)
            if (mask & (size_t{1} << i)) S.push_back(candidates[i]);
        if (is_separation(d, spec, S)) seps.push_back(std::move(S));
    }
    size_t min_size = SIZE_MAX;
    for (const auto& s : seps) min_size = std::min(min_size, s.size());
    std::vector<VertexSet> out;
    for (auto& s : seps)
        if (s.size() == min_size) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathSystem> brute_XY_systems(const RootedDigraph& d, const VertexSet& X,
                                         const VertexSet& Y) {
    check_vertex_cap(d, "system enumeration");
    SystemSpec spec{PathKind::XY, X, Y};
    return enumerate_systems(spec, enumerate_paths(d, spec));
}

}  // namespace flamekit
