#include "enptkit/pair_model.hpp"

#include <algorithm>
#include <set>

namespace enptkit {

GraphPair::GraphPair(std::vector<std::string> vertices, const std::vector<IdEdge>& edges, const std::vector<IdEdge>& blue)
    : ids_(std::move(vertices))
{
    std::sort(ids_.begin(), ids_.end(), NaturalLess{});
    for (int k = 0; k < size(); ++k)
        if (!index_.emplace(ids_[k], k).second) throw Error(ErrorKind::SchemaError, "duplicate vertex '" + ids_[k] + "'");
    color_.assign(size(), std::vector<std::uint8_t>(size(), 0));
    auto put = [&](const IdEdge& e, std::uint8_t c) {
        int a = index(e.first), b = index(e.second);
        if (a == b) throw Error(ErrorKind::SchemaError, "self-loop at '" + e.first + "'");
        color_[a][b] = color_[b][a] = std::max(color_[a][b], c);
    };
    for (const auto& e : edges) put(e, 1);
    for (const auto& e : blue) {
        int a = index(e.first), b = index(e.second);
        if (color_[a][b] == 0)
            throw Error(ErrorKind::SchemaError, "blue edge {" + e.first + "," + e.second + "} missing from E(G)");
        put(e, 2);
    }
}

int GraphPair::index(std::string_view id) const
{
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, "'" + std::string(id) + "'");
    return it->second;
}

std::vector<int> GraphPair::neighbors(int v) const
{
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
        if (color_[v][w]) out.push_back(w);
    return out;
}

std::vector<int> GraphPair::blue_neighbors(int v) const
{
    std::vector<int> out;
    for (int w = 0; w < size(); ++w)
        if (color_[v][w] == 2) out.push_back(w);
    return out;
}

std::vector<IdEdge> GraphPair::edges() const
{
    std::vector<IdEdge> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (color_[a][b]) out.emplace_back(ids_[a], ids_[b]);
    return out;
}

std::vector<IdEdge> GraphPair::blue_edges() const
{
    std::vector<IdEdge> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (color_[a][b] == 2) out.emplace_back(ids_[a], ids_[b]);
    return out;
}

std::vector<IdEdge> GraphPair::red_edges() const
{
    std::vector<IdEdge> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (color_[a][b] == 1) out.emplace_back(ids_[a], ids_[b]);
    return out;
}

GraphPair cycle_plus_chords(int n, const std::vector<std::pair<int, int>>& red_chords)
{
    std::vector<std::string> vs;
    std::vector<IdEdge> all, blue;
    for (int k = 0; k < n; ++k) vs.push_back(std::to_string(k));
    for (int k = 0; k < n; ++k) {
        IdEdge e{std::to_string(k), std::to_string((k + 1) % n)};
        all.push_back(e);
        blue.push_back(e);
    }
    for (auto [a, b] : red_chords) all.emplace_back(std::to_string(a), std::to_string(b));
    return GraphPair(vs, all, blue);
}

std::vector<int> blue_cycle(const GraphPair& pair)
{
    int n = pair.size();
    if (n < 3) throw Error(ErrorKind::NotHamiltonianPair, "fewer than 3 vertices");
    int blue_count = 0;
    for (int v = 0; v < n; ++v) {
        if (pair.blue_neighbors(v).size() != 2)
            throw Error(ErrorKind::NotHamiltonianPair, "vertex '" + pair.id(v) + "' does not have blue degree 2");
        blue_count += 2;
    }
    auto nb0 = pair.blue_neighbors(0);
    std::vector<int> order{0, nb0[0]};
    while (static_cast<int>(order.size()) < n) {
        auto nb = pair.blue_neighbors(order.back());
        int next = nb[0] == order[order.size() - 2] ? nb[1] : nb[0];
        if (next == 0) break;
        order.push_back(next);
    }
    if (static_cast<int>(order.size()) != n || !pair.is_blue(order.back(), 0))
        throw Error(ErrorKind::NotHamiltonianPair, "blue edges do not form one Hamiltonian cycle");
    return order;
}

bool is_hamiltonian_pair(const GraphPair& pair)
{
    try {
        blue_cycle(pair);
        return true;
    } catch (const Error&) {
        return false;
    }
}

const char* to_string(TriangleClass c)
{
    switch (c) {
    case TriangleClass::RedTriangle: return "RedTriangle";
    case TriangleClass::BRR: return "BRR";
    case TriangleClass::BBR: return "BBR";
    case TriangleClass::BlueTriangle: return "BlueTriangle";
    }
    return "?";
}

GraphPair induced_subpair(const GraphPair& pair, const std::vector<std::string>& subset)
{
    std::set<std::string, NaturalLess> keep(subset.begin(), subset.end());
    for (const auto& v : keep) pair.index(v);
    std::vector<IdEdge> all, blue;
    for (const auto& e : pair.edges())
        if (keep.count(e.first) && keep.count(e.second)) {
            all.push_back(e);
            if (pair.is_blue(e.first, e.second)) blue.push_back(e);
        }
    return GraphPair(std::vector<std::string>(keep.begin(), keep.end()), all, blue);
}

TriangleClass classify_triangle(const GraphPair& pair, const std::array<std::string, 3>& tri)
{
    int a = pair.index(tri[0]), b = pair.index(tri[1]), c = pair.index(tri[2]);
    if (a == b || b == c || a == c || !pair.has_edge(a, b) || !pair.has_edge(b, c) || !pair.has_edge(a, c))
        throw Error(ErrorKind::NotATriangle, "{" + tri[0] + "," + tri[1] + "," + tri[2] + "}");
    int blue = pair.is_blue(a, b) + pair.is_blue(b, c) + pair.is_blue(a, c);
    return static_cast<TriangleClass>(blue);
}

bool is_contractible(const GraphPair& pair, std::string_view a, std::string_view b)
{
    int x = pair.index(a), y = pair.index(b);
    if (!pair.is_blue(x, y)) throw Error(ErrorKind::NotBlueEdge, "{" + std::string(a) + "," + std::string(b) + "}");
    for (int z = 0; z < pair.size(); ++z) {
        if (z == x || z == y) continue;
        // a BBR triangle through {x,y}: one more blue edge at x or y, closed by a red edge
        if (pair.is_blue(x, z) && pair.is_red(y, z)) return false;
        if (pair.is_blue(y, z) && pair.is_red(x, z)) return false;
    }
    return true;
}

std::vector<IdEdge> contractible_edges(const GraphPair& pair)
{
    std::vector<IdEdge> out;
    for (const auto& e : pair.blue_edges())
        if (is_contractible(pair, e.first, e.second)) out.push_back(e);
    return out;
}

GraphPair merge_vertices(const GraphPair& pair, std::string_view a, std::string_view b)
{
    int x = pair.index(a), y = pair.index(b);
    if (x == y) throw Error(ErrorKind::NotContractible, "loop");
    std::string m = merged_name(pair.id(x), pair.id(y));
    auto rename = [&](int v) { return v == x || v == y ? m : pair.id(v); };
    std::vector<std::string> vs;
    for (int v = 0; v < pair.size(); ++v)
        if (v != y) vs.push_back(rename(v));
    std::vector<IdEdge> all, blue;
    for (int u = 0; u < pair.size(); ++u)
        for (int v = u + 1; v < pair.size(); ++v) {
            if (!pair.has_edge(u, v)) continue;
            auto ru = rename(u), rv = rename(v);
            if (ru == rv) continue;
            all.emplace_back(ru, rv);
            if (pair.is_blue(u, v)) blue.emplace_back(ru, rv);
        }
    return GraphPair(vs, all, blue);
}

GraphPair contract_pair(const GraphPair& pair, std::string_view a, std::string_view b)
{
    if (!is_contractible(pair, a, b))
        throw Error(ErrorKind::NotContractible, "{" + std::string(a) + "," + std::string(b) + "} lies in a BBR triangle");
    return merge_vertices(pair, a, b);
}

std::string resolve_vertex(const GraphPair& pair, const std::string& original)
{
    if (pair.contains(original)) return original;
    auto want = name_components(original);
    for (const auto& id : pair.ids()) {
        auto have = name_components(id);
        bool all = std::all_of(want.begin(), want.end(), [&](const std::string& w) {
            return std::find(have.begin(), have.end(), w) != have.end();
        });
        if (all) return id;
    }
    throw Error(ErrorKind::UnknownVertex, "'" + original + "'");
}

GraphPair contract_set(const GraphPair& pair, const std::vector<IdEdge>& edges)
{
    GraphPair cur = pair;
    for (const auto& [a, b] : edges) cur = contract_pair(cur, resolve_vertex(cur, a), resolve_vertex(cur, b));
    return cur;
}

std::string cycle_step(const GraphPair& pair, const std::string& from, const std::string& away)
{
    auto nb = pair.blue_neighbors(pair.index(from));
    if (nb.size() != 2) throw Error(ErrorKind::NotHamiltonianPair, "blue degree of '" + from + "'");
    return pair.id(nb[0]) == away ? pair.id(nb[1]) : pair.id(nb[0]);
}

std::vector<K4P4Witness> find_k4p4(const GraphPair& pair)
{
    std::vector<K4P4Witness> out;
    int n = pair.size();
    if (n < 5) return out;
    auto c = blue_cycle(pair);
    for (int i = 0; i < n; ++i) {
        int q[4] = {c[i], c[(i + 1) % n], c[(i + 2) % n], c[(i + 3) % n]};
        if (!pair.is_red(q[0], q[2]) || !pair.is_red(q[1], q[3]) || !pair.is_red(q[0], q[3])) continue;
        K4P4Witness w;
        for (int k = 0; k < 4; ++k) w.quad[k] = pair.id(q[k]);
        if (n >= 6) {
            auto closed = [&](int j) {
                auto nb = pair.neighbors(j);
                if (nb.size() != 3) return false;
                return std::all_of(nb.begin(), nb.end(), [&](int v) { return v == q[0] || v == q[1] || v == q[2] || v == q[3]; });
            };
            bool i1 = closed(q[1]), i2 = closed(q[2]);
            if (i1 != i2) {
                w.isolated = pair.id(i1 ? q[1] : q[2]);
                if (i1) w.bracket = w.quad;
                else w.bracket = std::array<std::string, 4>{w.quad[3], w.quad[2], w.quad[1], w.quad[0]};
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::optional<K4P4Witness> twin_of(const GraphPair& pair, const K4P4Witness& k)
{
    if (pair.size() < 7) throw Error(ErrorKind::PreconditionViolated, "twin detection needs n >= 7");
    if (!k.bracket) throw Error(ErrorKind::NotAK4P4, "isolated vertex undetermined");
    const auto& b = *k.bracket;
    std::string b4 = cycle_step(pair, b[3], b[2]);
    std::string b5 = cycle_step(pair, b4, b[3]);
    if (!pair.has_edge(b[2], b4)) return std::nullopt;
    for (const auto& w : find_k4p4(pair))
        if (w.bracket && (*w.bracket)[0] == b5 && (*w.bracket)[1] == b4 && (*w.bracket)[2] == b[3] && (*w.bracket)[3] == b[2])
            return w;
    K4P4Witness t;
    t.bracket = std::array<std::string, 4>{b5, b4, b[3], b[2]};
    t.quad = {b[2], b[3], b4, b5};
    t.isolated = b4;
    return t;
}

GraphPair aggressive_contract(const GraphPair& pair, const K4P4Witness& k)
{
    if (!k.bracket) throw Error(ErrorKind::NotAK4P4, "isolated vertex undetermined");
    const auto& b = *k.bracket;
    bool found = false;
    for (const auto& w : find_k4p4(pair))
        if (w.bracket && *w.bracket == b) found = true;
    if (!found) throw Error(ErrorKind::NotAK4P4, "[" + b[0] + "," + b[1] + "," + b[2] + "," + b[3] + "]");
    return merge_vertices(pair, b[2], b[3]);
}

bool satisfies_p1(const GraphPair& pair) { return contractible_edges(pair).empty(); }

bool satisfies_p2(const GraphPair& pair) { return find_k4p4(pair).empty(); }

SimpleGraph::SimpleGraph(std::vector<std::string> vertex_ids) : ids(std::move(vertex_ids)), adj(ids.size()) {}

bool SimpleGraph::adjacent(int a, int b) const
{
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

int SimpleGraph::num_edges() const
{
    int s = 0;
    for (const auto& a : adj) s += static_cast<int>(a.size());
    return s / 2;
}

void SimpleGraph::add_edge(int a, int b)
{
    if (a == b || adjacent(a, b)) return;
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.emplace_back(a, b);
}

} // namespace enptkit
