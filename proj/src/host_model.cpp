#include "enptkit/host_model.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace enptkit {

namespace {

std::uint64_t fnv(std::uint64_t h, std::string_view s)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
    return h;
}

bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b)
{
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// vertices of degree >= 3 in the union of two edge sets
std::vector<int> junctions(const HostTree& tree, const std::vector<int>& edges)
{
    std::vector<int> touched;
    std::vector<int> out;
    thread_local std::vector<int> deg;
    if (static_cast<int>(deg.size()) < tree.size()) deg.assign(tree.size(), 0);
    for (int e : edges) {
        auto [u, v] = tree.edge(e);
        if (deg[u]++ == 0) touched.push_back(u);
        if (deg[v]++ == 0) touched.push_back(v);
    }
    for (int v : touched) {
        if (deg[v] >= 3) out.push_back(v);
        deg[v] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_same_tree(const HostTree& tree, const TreePath& p, const TreePath& q)
{
    if (p.tree_fingerprint() != tree.fingerprint() || q.tree_fingerprint() != tree.fingerprint())
        throw Error(ErrorKind::DifferentHostTrees, "paths do not live on the given tree");
}

} // namespace

HostTree::HostTree(std::vector<std::string> vertices, const std::vector<LabelEdge>& edges)
    : labels_(std::move(vertices))
{
    for (int k = 0; k < size(); ++k) {
        if (!index_.emplace(labels_[k], k).second)
            throw Error(ErrorKind::InvalidTree, "duplicate vertex '" + labels_[k] + "'");
    }
    if (labels_.empty()) throw Error(ErrorKind::InvalidTree, "empty vertex set");
    if (static_cast<int>(edges.size()) != size() - 1)
        throw Error(ErrorKind::InvalidTree, "a tree on " + std::to_string(size()) + " vertices needs " +
                                                std::to_string(size() - 1) + " edges");
    for (const auto& [a, b] : edges) {
        auto ia = index_.find(a), ib = index_.find(b);
        if (ia == index_.end() || ib == index_.end())
            throw Error(ErrorKind::UnknownVertex, "edge {" + a + "," + b + "}");
        if (ia->second == ib->second) throw Error(ErrorKind::InvalidTree, "self-loop at '" + a + "'");
        edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error(ErrorKind::InvalidTree, "parallel edges");
    adj_.assign(size(), {});
    adj_edge_.assign(size(), {});
    for (int e = 0; e < num_edges(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_edge_[u].push_back(e);
        adj_[v].push_back(u);
        adj_edge_[v].push_back(e);
    }
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != size()) throw Error(ErrorKind::InvalidTree, "not connected");

    fingerprint_ = 1469598103934665603ULL;
    for (const auto& l : labels_) fingerprint_ = fnv(fingerprint_, l);
    for (auto [u, v] : edges_) {
        fingerprint_ = fnv(fingerprint_, std::to_string(u));
        fingerprint_ = fnv(fingerprint_, std::to_string(v));
    }
}

int HostTree::index(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, "'" + std::string(label) + "'");
    return it->second;
}

int HostTree::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int HostTree::edge_id(int u, int v) const
{
    const auto& a = adj_[u];
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] == v) return adj_edge_[u][k];
    return -1;
}

std::vector<LabelEdge> HostTree::label_edges() const
{
    std::vector<LabelEdge> out;
    for (auto [u, v] : edges_) out.emplace_back(labels_[u], labels_[v]);
    return out;
}

std::vector<int> HostTree::leaves() const
{
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> HostTree::vertex_path(int u, int v) const
{
    std::vector<int> parent(size(), -1);
    std::deque<int> queue{u};
    parent[u] = u;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) break;
        for (int y : adj_[x])
            if (parent[y] < 0) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> out{v};
    while (out.back() != u) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::string HostTree::fresh_label(std::string_view prefix) const
{
    for (int k = 0;; ++k) {
        std::string s = std::string(prefix) + std::to_string(k);
        if (!contains(s)) return s;
    }
}

TreePath::TreePath(const HostTree& tree, std::vector<int> vertices)
    : vertices_(std::move(vertices)), tree_fp_(tree.fingerprint())
{
    if (vertices_.size() < 2) throw Error(ErrorKind::InvalidPath, "a path needs at least one edge");
    std::vector<int> seen = vertices_;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error(ErrorKind::InvalidPath, "repeated vertex");
    for (size_t k = 0; k + 1 < vertices_.size(); ++k) {
        int e = tree.edge_id(vertices_[k], vertices_[k + 1]);
        if (e < 0)
            throw Error(ErrorKind::InvalidPath,
                        "'" + tree.label(vertices_[k]) + "' and '" + tree.label(vertices_[k + 1]) + "' are not adjacent");
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

bool TreePath::has_edge(int eid) const { return std::binary_search(edges_.begin(), edges_.end(), eid); }

bool TreePath::has_vertex(int v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }

int TreePath::tail_at(const HostTree& tree, int w) const
{
    if (w == front()) return tree.edge_id(vertices_[0], vertices_[1]);
    if (w == back()) return tree.edge_id(vertices_[vertices_.size() - 2], vertices_.back());
    throw Error(ErrorKind::Inapplicable, "'" + tree.label(w) + "' is not an endpoint");
}

std::vector<std::string> TreePath::labels(const HostTree& tree) const
{
    std::vector<std::string> out;
    for (int v : vertices_) out.push_back(tree.label(v));
    return out;
}

std::vector<std::string> Representation::ids() const
{
    std::vector<std::string> out;
    for (const auto& [id, p] : paths) out.push_back(id);
    return out;
}

const TreePath& Representation::path(const std::string& id) const
{
    auto it = paths.find(id);
    if (it == paths.end()) throw Error(ErrorKind::IdMismatch, "no path '" + id + "'");
    return it->second;
}

Representation make_representation(HostTree tree, const LabelPathMap& paths)
{
    Representation rep;
    rep.tree = std::move(tree);
    for (const auto& [id, seq] : paths) {
        std::vector<int> vs;
        for (const auto& l : seq) vs.push_back(rep.tree.index(l));
        rep.paths.emplace(id, TreePath(rep.tree, std::move(vs)));
    }
    return rep;
}

LabelPathMap label_paths(const Representation& rep)
{
    LabelPathMap out;
    for (const auto& [id, p] : rep.paths) out.emplace(id, p.labels(rep.tree));
    return out;
}

Representation rebuild(const std::vector<std::string>& vertices, const std::vector<LabelEdge>& edges, const LabelPathMap& paths)
{
    return make_representation(HostTree(vertices, edges), paths);
}

const char* to_string(PathRelation r)
{
    switch (r) {
    case PathRelation::Parallel: return "Parallel";
    case PathRelation::NonSplitting: return "NonSplitting";
    case PathRelation::Splitting: return "Splitting";
    }
    return "?";
}

TreePath tree_path(const HostTree& tree, std::string_view u, std::string_view v)
{
    return tree_path(tree, tree.index(u), tree.index(v));
}

TreePath tree_path(const HostTree& tree, int u, int v)
{
    if (u < 0 || v < 0 || u >= tree.size() || v >= tree.size()) throw Error(ErrorKind::UnknownVertex, "index out of range");
    if (u == v) throw Error(ErrorKind::EqualEndpoints, "'" + tree.label(u) + "'");
    return TreePath(tree, tree.vertex_path(u, v));
}

std::vector<int> split_vertices(const HostTree& tree, const TreePath& p, const TreePath& q)
{
    check_same_tree(tree, p, q);
    return junctions(tree, sorted_union(p.edges(), q.edges()));
}

PathRelation relation(const HostTree& tree, const TreePath& p, const TreePath& q)
{
    check_same_tree(tree, p, q);
    if (!sorted_intersects(p.edges(), q.edges())) return PathRelation::Parallel;
    return junctions(tree, sorted_union(p.edges(), q.edges())).empty() ? PathRelation::NonSplitting
                                                                        : PathRelation::Splitting;
}

TreePath union_path(const HostTree& tree, const TreePath& p, const TreePath& q)
{
    if (relation(tree, p, q) != PathRelation::NonSplitting)
        throw Error(ErrorKind::NotUnionable, "paths are not non-splitting");
    auto es = sorted_union(p.edges(), q.edges());
    std::vector<int> deg(tree.size(), 0);
    for (int e : es) {
        ++deg[tree.edge(e).first];
        ++deg[tree.edge(e).second];
    }
    int start = -1;
    for (int v = 0; v < tree.size() && start < 0; ++v)
        if (deg[v] == 1) start = v;
    // the endpoint closer to p's front keeps p's orientation
    int a = start, b = -1;
    for (int v = tree.size() - 1; v >= 0; --v)
        if (deg[v] == 1 && v != a) {
            b = v;
            break;
        }
    auto walk = tree.vertex_path(a, b);
    auto pos = [&](int v) { return std::find(walk.begin(), walk.end(), v) - walk.begin(); };
    if (pos(p.front()) > pos(p.back())) std::reverse(walk.begin(), walk.end());
    return TreePath(tree, std::move(walk));
}

DerivedGraphs derive_graphs(const Representation& rep)
{
    DerivedGraphs g;
    g.ids = rep.ids();
    std::vector<const TreePath*> ps;
    std::vector<std::vector<int>> vsets;
    for (const auto& [id, p] : rep.paths) {
        ps.push_back(&p);
        auto vs = p.vertices();
        std::sort(vs.begin(), vs.end());
        vsets.push_back(std::move(vs));
    }
    for (size_t a = 0; a < ps.size(); ++a)
        for (size_t b = a + 1; b < ps.size(); ++b) {
            if (!sorted_intersects(vsets[a], vsets[b])) continue;
            IdEdge e{g.ids[a], g.ids[b]};
            g.vpt.push_back(e);
            if (!sorted_intersects(ps[a]->edges(), ps[b]->edges())) continue;
            g.ept.push_back(e);
            if (junctions(rep.tree, sorted_union(ps[a]->edges(), ps[b]->edges())).empty()) g.enpt.push_back(e);
        }
    return g;
}

std::vector<std::string> paths_through(const Representation& rep, int eid)
{
    std::vector<std::string> out;
    for (const auto& [id, p] : rep.paths)
        if (p.has_edge(eid)) out.push_back(id);
    return out;
}

CliqueClass classify_max_clique(const Representation& rep, const std::set<std::string, NaturalLess>& clique)
{
    CliqueClass out;
    if (clique.empty()) return out;
    const auto& t = rep.tree;
    for (int e = 0; e < t.num_edges(); ++e) {
        auto through = paths_through(rep, e);
        if (std::set<std::string, NaturalLess>(through.begin(), through.end()) == clique) {
            out.kind = CliqueClass::EdgeClique;
            out.edge = t.edge(e);
            return out;
        }
    }
    for (int c = 0; c < t.size(); ++c) {
        const auto& nb = t.neighbors(c);
        int d = static_cast<int>(nb.size());
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y)
                for (int z = y + 1; z < d; ++z) {
                    int ex = t.edge_id(c, nb[x]), ey = t.edge_id(c, nb[y]), ez = t.edge_id(c, nb[z]);
                    std::set<std::string, NaturalLess> uses;
                    for (const auto& [id, p] : rep.paths) {
                        int k = p.has_edge(ex) + p.has_edge(ey) + p.has_edge(ez);
                        if (k == 2) uses.insert(id);
                    }
                    if (uses == clique) {
                        out.kind = CliqueClass::ClawClique;
                        out.center = c;
                        out.arms = {nb[x], nb[y], nb[z]};
                        return out;
                    }
                }
    }
    return out;
}

P3Check satisfies_p3(const Representation& rep)
{
    P3Check out;
    std::vector<std::string> ids;
    std::vector<const TreePath*> ps;
    for (const auto& [id, p] : rep.paths) {
        ids.push_back(id);
        ps.push_back(&p);
    }
    size_t n = ps.size();
    // 0 parallel, 1 blue, 2 red
    std::vector<std::vector<char>> col(n, std::vector<char>(n, 0));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            auto r = relation(rep.tree, *ps[a], *ps[b]);
            col[a][b] = col[b][a] = r == PathRelation::Parallel ? 0 : r == PathRelation::NonSplitting ? 1 : 2;
        }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            if (col[a][b] != 2) continue;
            for (size_t c = b + 1; c < n; ++c) {
                if (col[a][c] != 2 || col[b][c] != 2) continue;
                std::vector<int> ab;
                std::set_intersection(ps[a]->edges().begin(), ps[a]->edges().end(), ps[b]->edges().begin(),
                                      ps[b]->edges().end(), std::back_inserter(ab));
                if (sorted_intersects(ab, ps[c]->edges())) {
                    out.ok = false;
                    out.witness = std::array<std::string, 3>{ids[a], ids[b], ids[c]};
                    return out;
                }
            }
        }
    return out;
}

} // namespace enptkit
