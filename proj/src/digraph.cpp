#include "flamekit/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "flamekit/setops.hpp"

namespace flamekit {

bool valid_vertex_id(const std::string& id) {
    if (id.empty()) return false;
    for (unsigned char c : id) {
        if (!(std::isalnum(c) || c == '_' || c == '.' || c == '-')) return false;
    }
    return true;
}

std::vector<Diagnostic> validate(const DigraphData& data) {
    std::vector<Diagnostic> out;
    std::set<std::string> declared(data.vertices.begin(), data.vertices.end());
    declared.insert(data.root);
    for (const auto& [t, h] : data.edges) {
        declared.insert(t);
        declared.insert(h);
    }

    if (data.root.empty()) out.push_back({"no-root", "no root vertex declared"});
    for (const std::string& v : declared) {
        if (!valid_vertex_id(v)) out.push_back({"bad-id", v});
    }

    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : data.edges) {
        if (e.first == e.second) out.push_back({"loop", "loop at " + e.first});
        if (!seen.insert(e).second)
            out.push_back({"parallel-edge", e.first + " -> " + e.second});
        if (e.second == data.root)
            out.push_back({"root-in-edge", e.first + " -> " + e.second});
    }
    // Endpoints are auto-declared by edges, so "undeclared-endpoint" can only arise
    // for data assembled by hand with an explicit vertex list meant to be exhaustive.
    return out;
}

RootedDigraph RootedDigraph::from_checked(std::string root, std::vector<std::string> vertices,
                                          const std::vector<std::pair<std::string, std::string>>& edges) {
    RootedDigraph g;
    auto intern = [&g](const std::string& name) {
        auto it = g.index_.find(name);
        if (it != g.index_.end()) return it->second;
        int id = static_cast<int>(g.names_.size());
        g.names_.push_back(name);
        g.index_.emplace(name, id);
        return id;
    };
    g.root_ = intern(root);
    for (const std::string& v : vertices) intern(v);
    for (const auto& [t, h] : edges) {
        intern(t);
        intern(h);
    }
    g.out_.assign(g.names_.size(), {});
    g.in_.assign(g.names_.size(), {});
    for (const auto& [t, h] : edges) g.insert_edge_unchecked(g.index_.at(t), g.index_.at(h));
    for (auto& v : g.out_) canonicalize(v);
    for (auto& v : g.in_) canonicalize(v);
    return g;
}

void RootedDigraph::insert_edge_unchecked(int tail, int head) {
    out_[static_cast<size_t>(tail)].push_back(head);
    in_[static_cast<size_t>(head)].push_back(tail);
    ++edge_count_;
}

RootedDigraph RootedDigraph::from_data(const DigraphData& data) {
    auto diags = validate(data);
    if (!diags.empty()) {
        std::string msg = "invalid digraph:";
        for (const auto& d : diags) msg += " [" + d.kind + " " + d.detail + "]";
        throw domain_error("invalid-digraph", msg);
    }
    return from_checked(data.root, data.vertices, data.edges);
}

RootedDigraph RootedDigraph::build(const std::string& root,
                                   const std::vector<std::string>& vertices,
                                   const std::vector<std::pair<std::string, std::string>>& edges) {
    DigraphData data{root, vertices, edges};
    return from_data(data);
}

std::optional<int> RootedDigraph::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootedDigraph::vertex(const std::string& name) const {
    auto v = find(name);
    require(v.has_value(), "unknown-vertex", "unknown vertex id: " + name);
    return *v;
}

bool RootedDigraph::has_edge(int tail, int head) const {
    if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count()) return false;
    const auto& o = out_[static_cast<size_t>(tail)];
    return std::binary_search(o.begin(), o.end(), head);
}

EdgeSet RootedDigraph::in_edges(int v) const {
    EdgeSet out;
    out.reserve(in(v).size());
    for (int t : in(v)) out.push_back({t, v});
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet RootedDigraph::out_edges(int v) const {
    EdgeSet res;
    res.reserve(out(v).size());
    for (int h : out(v)) res.push_back({v, h});
    return res;
}

EdgeSet RootedDigraph::edges() const {
    EdgeSet res;
    res.reserve(static_cast<size_t>(edge_count_));
    for (int v = 0; v < vertex_count(); ++v)
        for (int h : out(v)) res.push_back({v, h});
    std::sort(res.begin(), res.end());
    return res;
}

RootedDigraph RootedDigraph::restrict_at(int v, const EdgeSet& keep) const {
    require(v != root_, "restrict-root", "cannot restrict ingoing edges at the root");
    require(v >= 0 && v < vertex_count(), "unknown-vertex", "restrict_at: vertex out of range");
    for (const Edge& e : keep)
        require(e.head == v && has_edge(e), "restrict-bad-edge",
                "restrict_at: " + name(e.tail) + " -> " + name(e.head) + " is not an ingoing edge of " + name(v));
    EdgeSet drop;
    for (int t : in(v)) {
        Edge e{t, v};
        if (!contains(keep, e)) drop.push_back(e);
    }
    return delete_edges(drop);
}

RootedDigraph RootedDigraph::delete_vertices(const VertexSet& xs) const {
    for (int x : xs) {
        require(x >= 0 && x < vertex_count(), "unknown-vertex", "delete: vertex out of range");
        require(x != root_, "delete-root", "cannot delete the root vertex");
    }
    std::vector<char> gone(static_cast<size_t>(vertex_count()), 0);
    for (int x : xs) gone[static_cast<size_t>(x)] = 1;
    std::vector<std::string> vertices;
    for (int v = 0; v < vertex_count(); ++v)
        if (!gone[static_cast<size_t>(v)]) vertices.push_back(name(v));
    std::vector<std::pair<std::string, std::string>> es;
    for (int v = 0; v < vertex_count(); ++v) {
        if (gone[static_cast<size_t>(v)]) continue;
        for (int h : out(v))
            if (!gone[static_cast<size_t>(h)]) es.emplace_back(name(v), name(h));
    }
    return from_checked(name(root_), vertices, es);
}

RootedDigraph RootedDigraph::delete_edges(const EdgeSet& es) const {
    for (const Edge& e : es)
        require(has_edge(e), "unknown-edge",
                "delete: no edge " + name(e.tail) + " -> " + name(e.head));
    std::set<Edge> drop(es.begin(), es.end());
    std::vector<std::pair<std::string, std::string>> keep;
    for (int v = 0; v < vertex_count(); ++v)
        for (int h : out(v))
            if (!drop.count({v, h})) keep.emplace_back(name(v), name(h));
    return from_checked(name(root_), names_, keep);
}

RootedDigraph RootedDigraph::add_edge(Edge e) const { return add_edges({e}); }

RootedDigraph RootedDigraph::add_edges(const EdgeSet& es) const {
    std::vector<std::pair<std::string, std::string>> all;
    for (int v = 0; v < vertex_count(); ++v)
        for (int h : out(v)) all.emplace_back(name(v), name(h));
    for (const Edge& e : es) {
        require(e.tail >= 0 && e.tail < vertex_count() && e.head >= 0 && e.head < vertex_count(),
                "unknown-vertex", "add_edge: endpoint out of range");
        require(e.tail != e.head, "loop", "add_edge: loop at " + name(e.tail));
        require(e.head != root_, "root-in-edge", "add_edge: root cannot gain ingoing edges");
        require(!has_edge(e), "parallel-edge",
                "add_edge: duplicate edge " + name(e.tail) + " -> " + name(e.head));
        all.emplace_back(name(e.tail), name(e.head));
    }
    return from_checked(name(root_), names_, all);
}

bool RootedDigraph::same_vertices(const RootedDigraph& other) const {
    return names_ == other.names_;
}

bool RootedDigraph::spanning_subgraph_of(const RootedDigraph& host) const {
    if (!same_vertices(host) || root_ != host.root_) return false;
    for (int v = 0; v < vertex_count(); ++v)
        for (int h : out(v))
            if (!host.has_edge(v, h)) return false;
    return true;
}

bool RootedDigraph::operator==(const RootedDigraph& other) const {
    if (name(root_) != other.name(other.root_)) return false;
    std::vector<std::string> a = names_, b = other.names_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    std::set<std::pair<std::string, std::string>> ea, eb;
    for (int v = 0; v < vertex_count(); ++v)
        for (int h : out(v)) ea.emplace(name(v), name(h));
    for (int v = 0; v < other.vertex_count(); ++v)
        for (int h : other.out(v)) eb.emplace(other.name(v), other.name(h));
    return ea == eb;
}

std::optional<int> map_vertex(const RootedDigraph& from, int v, const RootedDigraph& to) {
    return to.find(from.name(v));
}

RootedDigraph reindex_like(const RootedDigraph& g, const RootedDigraph& host) {
    require(g.name(g.root()) == host.name(host.root()), "root-mismatch",
            "the graphs name different roots");
    std::vector<std::string> a = g.names(), b = host.names();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    require(a == b, "vertex-mismatch", "the graphs carry different vertex sets");
    std::vector<std::pair<std::string, std::string>> es;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int h : g.out(v)) es.emplace_back(g.name(v), g.name(h));
    return RootedDigraph::build(host.name(host.root()), host.names(), es);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

}  // namespace

DigraphData parse_digraph(const std::string& text) {
    DigraphData data;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_root = false;
    std::set<std::pair<std::string, std::string>> seen;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!have_root) {
            if (toks.size() != 2 || toks[0] != "root")
                throw parse_error(lineno, "expected `root <id>` as the first non-comment line");
            if (!valid_vertex_id(toks[1]))
                throw parse_error(lineno, "invalid vertex id: " + toks[1]);
            data.root = toks[1];
            have_root = true;
            continue;
        }
        for (const auto& t : toks)
            if (!valid_vertex_id(t)) throw parse_error(lineno, "invalid vertex id: " + t);
        if (toks.size() == 1) {
            data.vertices.push_back(toks[0]);
        } else if (toks.size() == 2) {
            if (!seen.emplace(toks[0], toks[1]).second)
                throw parse_error(lineno, "duplicate edge " + toks[0] + " " + toks[1]);
            data.edges.emplace_back(toks[0], toks[1]);
        } else {
            throw parse_error(lineno, "expected `<tail> <head>` or a single vertex id");
        }
    }
    if (!have_root) throw parse_error(lineno, "missing `root <id>` line");
    return data;
}

namespace {

// Canonical presentation: isolated vertices and edges in name order, so the bytes
// do not depend on internal vertex numbering.
std::vector<std::string> isolated_names(const RootedDigraph& d) {
    std::vector<std::string> out;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (v != d.root() && d.in(v).empty() && d.out(v).empty()) out.push_back(d.name(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::string, std::string>> named_edges(const RootedDigraph& d) {
    std::vector<std::pair<std::string, std::string>> out;
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int h : d.out(v)) out.emplace_back(d.name(v), d.name(h));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string serialize(const RootedDigraph& d) {
    std::ostringstream os;
    os << "root " << d.name(d.root()) << "\n";
    for (const auto& v : isolated_names(d)) os << v << "\n";
    for (const auto& [t, h] : named_edges(d)) os << t << " " << h << "\n";
    return os.str();
}

std::string to_dot(const RootedDigraph& d) {
    std::ostringstream os;
    os << "digraph {\n";
    os << "  \"" << d.name(d.root()) << "\" [shape=doublecircle];\n";
    for (const auto& v : isolated_names(d)) os << "  \"" << v << "\";\n";
    for (const auto& [t, h] : named_edges(d))
        os << "  \"" << t << "\" -> \"" << h << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace flamekit
