#include "enptkit/hardness.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace enptkit {

namespace {

std::string u_name(const std::string& v, int k) { return "u_" + v + "_" + std::to_string(k); }
std::string up_name(const std::string& v, int k) { return "u'_" + v + "_" + std::to_string(k); }
std::string uk_name(int k) { return "u_" + std::to_string(k); }
std::string upk_name(int k) { return "u'_" + std::to_string(k); }

} // namespace

SimpleGraph component_graph(const GraphPair& pair, const std::vector<std::string>& S)
{
    int n = pair.size();
    std::vector<char> in_s(n, 0);
    for (const auto& s : S) in_s[pair.index(s)] = 1;
    std::vector<int> comp(n, -1);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) {
        if (in_s[v] || comp[v] >= 0) continue;
        int c = static_cast<int>(names.size());
        names.push_back(pair.id(v)); // ids are naturally sorted, so v is the smallest member
        std::vector<int> stack{v};
        comp[v] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : pair.neighbors(x))
                if (!in_s[y] && comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
        }
    }
    SimpleGraph g(names);
    for (int s = 0; s < n; ++s) {
        if (!in_s[s]) continue;
        std::set<int> touch;
        for (int y : pair.blue_neighbors(s))
            if (!in_s[y]) touch.insert(comp[y]);
        for (auto a = touch.begin(); a != touch.end(); ++a)
            for (auto b = std::next(a); b != touch.end(); ++b) g.add_edge(*a, *b);
    }
    return g;
}

ReductionInstance build_reduction_pair(const SimpleGraph& H)
{
    int m = static_cast<int>(H.edges.size());
    if (m == 0) throw Error(ErrorKind::EmptyEdgeSet, "H has no edges");
    ReductionInstance inst{H, GraphPair({}, {}, {}), {}, {}, {}};

    std::vector<std::string> cyc;
    for (int k = 0; k < m; ++k) {
        const auto& vi = H.ids[H.edges[k].first];
        const auto& vj = H.ids[H.edges[k].second];
        std::array<std::string, 6> seg{u_name(vi, k), up_name(vi, k), u_name(vj, k), up_name(vj, k), uk_name(k), upk_name(k)};
        inst.segments.push_back(seg);
        for (const auto& x : seg) cyc.push_back(x);
    }
    int N = static_cast<int>(cyc.size());
    std::map<std::string, int> pos;
    for (int k = 0; k < N; ++k) pos[cyc[k]] = k;

    std::vector<IdEdge> all, blue;
    for (int k = 0; k < N; ++k) {
        blue.emplace_back(cyc[k], cyc[(k + 1) % N]);
        all.push_back(blue.back());
        if (k % 2 == 1) inst.K.push_back(cyc[k]);
    }
    for (size_t a = 0; a < inst.K.size(); ++a)
        for (size_t b = a + 1; b < inst.K.size(); ++b) all.emplace_back(inst.K[a], inst.K[b]);

    for (int i = 0; i < H.size(); ++i) {
        std::vector<std::string> q;
        for (int k = 0; k < m; ++k)
            if (H.edges[k].first == i || H.edges[k].second == i) q.push_back(u_name(H.ids[i], k));
        int d = static_cast<int>(q.size());
        for (int t = 0; t + 1 < d; ++t) all.emplace_back(q[t], q[t + 1]);
        // u_{i,k_t} meets the paths ending at leaf l_{i,k_s} for s = t-1 and s > t
        for (int t = 0; t < d; ++t)
            for (int s = 0; s < d; ++s) {
                if (!(s == t - 1 || s > t)) continue;
                int p = pos.at(q[s]);
                all.emplace_back(q[t], cyc[(p + N - 1) % N]);
                all.emplace_back(q[t], cyc[(p + 1) % N]);
            }
        inst.Q.push_back(std::move(q));
    }
    inst.pair = GraphPair(cyc, all, blue);
    return inst;
}

Coloring lift_coloring(const ReductionInstance& inst, const std::vector<int>& h_colors)
{
    Coloring out;
    for (int i = 0; i < inst.H.size(); ++i)
        if (!inst.Q[i].empty()) out[inst.Q[i].front()] = h_colors.at(i);
    int m = static_cast<int>(inst.segments.size());
    auto color_of_u = [&](const std::string& u) {
        for (int i = 0; i < inst.H.size(); ++i)
            if (std::find(inst.Q[i].begin(), inst.Q[i].end(), u) != inst.Q[i].end()) return h_colors.at(i);
        return 0;
    };
    for (int k = 0; k < m; ++k) {
        int a = color_of_u(inst.segments[k][2]);
        int b = color_of_u(inst.segments[(k + 1) % m][0]);
        int c = 1;
        while (c == a || c == b) ++c;
        out[uk_name(k)] = c;
    }
    return out;
}

Representation build_rep_from_coloring(const ReductionInstance& inst, const Coloring& coloring)
{
    SimpleGraph comp = component_graph(inst.pair, inst.K);
    std::vector<int> col(comp.size(), 0);
    for (int c = 0; c < comp.size(); ++c) {
        auto it = coloring.find(comp.ids[c]);
        if (it == coloring.end() || it->second < 1 || it->second > 3)
            throw Error(ErrorKind::ImproperColoring, "missing or out-of-range color for " + comp.ids[c]);
        col[c] = it->second;
    }
    for (auto [a, b] : comp.edges)
        if (col[a] == col[b]) throw Error(ErrorKind::ImproperColoring, comp.ids[a] + " and " + comp.ids[b] + " share a color");

    const SimpleGraph& H = inst.H;
    int m = static_cast<int>(inst.segments.size());
    std::map<std::string, int> comp_index;
    for (int c = 0; c < comp.size(); ++c) comp_index[comp.ids[c]] = c;

    std::vector<std::string> vs{"r"};
    std::vector<LabelEdge> es;
    std::map<std::string, std::string> leaf_of; // pair vertex -> leaf label
    LabelPathMap paths;
    auto add = [&](const std::string& parent, const std::string& child) {
        vs.push_back(child);
        es.emplace_back(parent, child);
    };
    for (int color = 1; color <= 3; ++color) {
        std::string tip = "r";
        for (int k = 0; k < m; ++k) {
            if (col[comp_index.at(uk_name(k))] != color) continue;
            std::string e = "e" + std::to_string(k), l = "l" + std::to_string(k);
            add(tip, e);
            add(e, l);
            leaf_of[uk_name(k)] = l;
            paths.emplace(uk_name(k), std::vector<std::string>{l, e});
            tip = e;
        }
        for (int i = 0; i < H.size(); ++i) {
            const auto& q = inst.Q[i];
            if (q.empty() || col[comp_index.at(q.front())] != color) continue;
            std::string si = std::to_string(i);
            std::string v = "v" + si, w = "w" + si;
            add(tip, v);
            add(v, w);
            std::vector<std::string> chain{v, w}; // chain[t + 1] = w_{i,k_t}, 1-based t
            for (const auto& u : q) {
                std::string k = u.substr(u.rfind('_') + 1);
                std::string wk = "w" + si + "_" + k, lk = "l" + si + "_" + k;
                add(chain.back(), wk);
                add(wk, lk);
                leaf_of[u] = lk;
                chain.push_back(wk);
                size_t t = chain.size() - 1;
                paths.emplace(u, std::vector<std::string>{lk, wk, chain[t - 1], chain[t - 2]});
            }
            tip = v;
        }
    }
    HostTree tree(vs, es);
    for (const auto& kv : inst.K) {
        auto nb = inst.pair.blue_neighbors(inst.pair.index(kv));
        if (nb.size() != 2) throw Error(ErrorKind::PreconditionViolated, "K vertex without two cycle neighbours");
        auto route = tree.vertex_path(tree.index(leaf_of.at(inst.pair.id(nb[0]))), tree.index(leaf_of.at(inst.pair.id(nb[1]))));
        std::vector<std::string> seq;
        for (int x : route) seq.push_back(tree.label(x));
        paths.emplace(kv, std::move(seq));
    }
    return rebuild(vs, es, paths);
}

std::optional<std::vector<int>> three_colorable(const SimpleGraph& g)
{
    int n = g.size();
    if (n > 20) throw Error(ErrorKind::TooLarge, "three_colorable handles at most 20 vertices");
    std::vector<int> col(n, 0);
    // highest degree first; a new color is only tried once per step, which removes color permutations
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.adj[a].size() > g.adj[b].size(); });
    std::function<bool(int, int)> go = [&](int idx, int used) {
        if (idx == n) return true;
        int v = order[idx];
        for (int c = 1; c <= std::min(3, used + 1); ++c) {
            bool ok = true;
            for (int w : g.adj[v])
                if (col[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[v] = c;
            if (go(idx + 1, std::max(used, c))) return true;
            col[v] = 0;
        }
        return false;
    };
    if (go(0, 0)) return col;
    return std::nullopt;
}

} // namespace enptkit
