#pragma once

#include "enptkit/host_model.hpp"
#include "enptkit/minify.hpp"
#include "enptkit/pair_model.hpp"
#include "enptkit/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using namespace enptkit;
using Seq = std::vector<std::string>;

inline Representation make(const std::vector<LabelEdge>& edges, const std::map<std::string, Seq>& paths)
{
    std::set<std::string> vs;
    for (const auto& [a, b] : edges) {
        vs.insert(a);
        vs.insert(b);
    }
    LabelPathMap lp(paths.begin(), paths.end());
    return rebuild(Seq(vs.begin(), vs.end()), edges, lp);
}

// five paths on an 8-edge tree; VPT, EPT and ENPT all differ
inline Representation five_paths()
{
    return make({{"A", "B"}, {"B", "C"}, {"B", "E"}, {"B", "x1"}, {"x1", "x2"}, {"x2", "D"}, {"D", "F"}, {"D", "G"}},
                {{"1", {"C", "B", "E"}},
                 {"2", {"A", "B", "C"}},
                 {"3", {"A", "B", "x1", "x2"}},
                 {"4", {"E", "B", "x1", "x2", "D", "G"}},
                 {"5", {"x1", "x2", "D", "F"}}});
}

// C5 with red {1,3},{1,4}
inline Representation eptn_c5()
{
    return make({{"a", "u"}, {"b", "u"}, {"u", "s1"}, {"s1", "s2"}, {"s2", "v"}, {"v", "c"}, {"v", "d"}},
                {{"0", {"u", "s1"}},
                 {"1", {"a", "u", "s1", "s2", "v", "c"}},
                 {"2", {"s2", "v"}},
                 {"3", {"s1", "s2", "v", "d"}},
                 {"4", {"b", "u", "s1", "s2"}}});
}

// C5 with red {0,2},{0,3},{1,3},{1,4}
inline Representation c5_with_k4p4()
{
    return make({{"a", "u"}, {"b", "u"}, {"u", "m"}, {"m", "v"}, {"v", "c"}, {"v", "d"}},
                {{"0", {"b", "u", "m", "v"}},
                 {"1", {"u", "m", "v", "c"}},
                 {"2", {"a", "u", "m"}},
                 {"3", {"a", "u", "m", "v", "d"}},
                 {"4", {"m", "v", "d"}}});
}

// ENPT is C10 but the long paths do not follow a cyclic leaf order
inline Representation monster_c10()
{
    return make({{"A", "a1"}, {"A", "a2"}, {"A", "s1"}, {"s1", "s2"}, {"s2", "s3"}, {"s3", "s4"}, {"s4", "c"}, {"c", "R"},
                 {"c", "m1"}, {"m1", "L"}, {"c", "t4"}, {"t4", "t3"}, {"t3", "t2"}, {"t2", "t1"}, {"t1", "B"}, {"B", "b1"},
                 {"B", "b2"}},
                {{"1", {"s1", "s2", "s3", "s4", "c", "R"}},
                 {"2", {"a1", "A", "s1", "s2", "s3", "s4"}},
                 {"3", {"s3", "s4", "c", "t4", "t3"}},
                 {"4", {"b1", "B", "t1", "t2", "t3", "t4"}},
                 {"5", {"t1", "t2", "t3", "t4", "c", "R"}},
                 {"6", {"b2", "B", "t1", "t2"}},
                 {"7", {"L", "m1", "c", "t4", "t3", "t2", "t1", "B", "b2"}},
                 {"8", {"L", "m1"}},
                 {"9", {"a2", "A", "s1", "s2", "s3", "s4", "c", "m1", "L"}},
                 {"10", {"a2", "A", "s1", "s2"}}});
}

// k leaves around one center, path m joins leaves m and m+1
inline Representation pie(int k)
{
    std::vector<LabelEdge> es;
    std::map<std::string, Seq> ps;
    for (int m = 0; m < k; ++m) es.emplace_back("c", "l" + std::to_string(m));
    for (int m = 0; m < k; ++m) ps[std::to_string(m)] = {"l" + std::to_string(m), "c", "l" + std::to_string((m + 1) % k)};
    return make(es, ps);
}

// ---- independent relation oracle on label sequences ----

enum class Rel { Parallel, NonSplitting, Splitting };

inline std::set<std::pair<std::string, std::string>> edge_set(const Seq& s)
{
    std::set<std::pair<std::string, std::string>> out;
    for (size_t k = 0; k + 1 < s.size(); ++k) out.insert(std::minmax(s[k], s[k + 1]));
    return out;
}

inline Rel naive_relation(const Seq& p, const Seq& q)
{
    auto a = edge_set(p), b = edge_set(q);
    bool shared = false;
    for (const auto& e : a) shared = shared || b.count(e);
    if (!shared) return Rel::Parallel;
    std::map<std::string, int> deg;
    std::set<std::pair<std::string, std::string>> all = a;
    all.insert(b.begin(), b.end());
    for (const auto& [x, y] : all) {
        ++deg[x];
        ++deg[y];
    }
    for (const auto& [v, d] : deg)
        if (d >= 3) return Rel::Splitting;
    return Rel::NonSplitting;
}

struct NaiveGraphs {
    std::set<IdEdge> vpt, ept, enpt;
};

inline NaiveGraphs naive_derive(const std::map<std::string, Seq>& paths)
{
    NaiveGraphs g;
    for (auto a = paths.begin(); a != paths.end(); ++a)
        for (auto b = std::next(a); b != paths.end(); ++b) {
            IdEdge e = NaturalLess{}(a->first, b->first) ? IdEdge{a->first, b->first} : IdEdge{b->first, a->first};
            std::set<std::string> va(a->second.begin(), a->second.end());
            bool meet = std::any_of(b->second.begin(), b->second.end(), [&](const std::string& v) { return va.count(v) > 0; });
            if (meet) g.vpt.insert(e);
            Rel r = naive_relation(a->second, b->second);
            if (r != Rel::Parallel) g.ept.insert(e);
            if (r == Rel::NonSplitting) g.enpt.insert(e);
        }
    return g;
}

inline std::map<std::string, Seq> as_sequences(const Representation& rep)
{
    std::map<std::string, Seq> out;
    for (const auto& [id, p] : rep.paths) out[id] = p.labels(rep.tree);
    return out;
}

inline std::set<IdEdge> as_set(const std::vector<IdEdge>& v) { return {v.begin(), v.end()}; }

// maximal cliques, Bron-Kerbosch without pivoting
inline void bron_kerbosch(const std::vector<std::set<int>>& adj, std::set<int> r, std::set<int> p, std::set<int> x,
                          std::vector<std::set<int>>& out)
{
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    for (int v : std::set<int>(p)) {
        std::set<int> r2 = r, p2, x2;
        r2.insert(v);
        for (int w : p)
            if (adj[v].count(w)) p2.insert(w);
        for (int w : x)
            if (adj[v].count(w)) x2.insert(w);
        bron_kerbosch(adj, r2, p2, x2, out);
        p.erase(v);
        x.insert(v);
    }
}

// ---- random generators ----

inline HostTree random_tree(std::mt19937& rng, int n)
{
    Seq vs;
    std::vector<LabelEdge> es;
    for (int k = 0; k < n; ++k) vs.push_back("t" + std::to_string(k));
    for (int k = 1; k < n; ++k) es.emplace_back(vs[std::uniform_int_distribution<int>(0, k - 1)(rng)], vs[k]);
    return HostTree(vs, es);
}

inline Representation random_rep(std::mt19937& rng, int tree_vertices, int paths)
{
    HostTree t = random_tree(rng, tree_vertices);
    LabelPathMap lp;
    std::uniform_int_distribution<int> pick(0, tree_vertices - 1);
    for (int k = 0; k < paths; ++k) {
        int u = pick(rng), v = pick(rng);
        while (v == u) v = pick(rng);
        Seq s;
        for (int x : t.vertex_path(u, v)) s.push_back(t.label(x));
        lp.emplace(std::to_string(k), s);
    }
    return rebuild(t.labels(), t.label_edges(), lp);
}

inline std::vector<std::pair<int, int>> chords_of(const GraphPair& p)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v] : p.red_edges()) out.emplace_back(p.index(u), p.index(v));
    return out;
}

// split cycle position k of C_n + chords into two consecutive vertices, sharing out its chords at random
inline GraphPair split_vertex(std::mt19937& rng, const GraphPair& p, int k)
{
    int n = p.size();
    auto shift = [&](int x) { return x > k ? x + 1 : x; };
    std::vector<std::pair<int, int>> out;
    std::uniform_int_distribution<int> three(0, 2);
    for (auto [a, b] : chords_of(p)) {
        if (a != k && b != k) {
            out.emplace_back(shift(a), shift(b));
            continue;
        }
        int x = shift(a == k ? b : a);
        int mode = three(rng);
        if (mode != 1) out.emplace_back(k, x);
        if (mode != 0) out.emplace_back(k + 1, x);
    }
    std::bernoulli_distribution coin(0.3);
    int m = n + 1;
    if (coin(rng)) out.emplace_back(k, (k + 2) % m);
    if (coin(rng)) out.emplace_back(k + 1, (k + m - 1) % m);
    std::vector<std::pair<int, int>> clean;
    for (auto [a, b] : out) {
        if (a > b) std::swap(a, b);
        int d = b - a;
        if (d <= 1 || d == n) continue;
        clean.emplace_back(a, b);
    }
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
    return cycle_plus_chords(n + 1, clean);
}

// runs `body` once per admissible pick sequence (depth-first odometer); returns the number of runs
inline int for_each_pick_order(const std::function<SolveOutcome(const SolverOptions&)>& run,
                               const std::function<void(const SolveOutcome&)>& body, int cap)
{
    std::vector<int> script, counts;
    int runs = 0;
    for (;;) {
        size_t at = 0;
        counts.clear();
        SolverOptions opts;
        opts.choose = [&](int count) {
            if (at >= script.size()) script.push_back(0);
            counts.push_back(count);
            return script[at++];
        };
        body(run(opts));
        if (++runs >= cap) return runs;
        script.resize(counts.size());
        int i = static_cast<int>(counts.size()) - 1;
        while (i >= 0 && script[i] + 1 >= counts[i]) --i;
        if (i < 0) return runs;
        ++script[i];
        script.resize(i + 1);
    }
}

// seeded YES instances with at least two pick sequences, grown by vertex splitting from small YES pairs
inline std::vector<GraphPair> yes_instances(unsigned seed, size_t want, int max_n)
{
    std::mt19937 rng(seed);
    std::vector<GraphPair> pool = {cycle_plus_chords(6, {{0, 2}, {0, 4}, {2, 4}}),
                                   cycle_plus_chords(7, {{0, 2}, {0, 4}, {0, 5}, {2, 4}}),
                                   cycle_plus_chords(7, {{0, 2}, {0, 3}, {0, 5}, {1, 3}, {1, 5}, {1, 6}, {3, 5}})};
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<GraphPair> out;
    for (int attempt = 0; attempt < 200000 && out.size() < want; ++attempt) {
        const GraphPair& base = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
        if (base.size() >= max_n) continue;
        GraphPair next = split_vertex(rng, base, std::uniform_int_distribution<int>(0, base.size() - 1)(rng));
        auto key = std::make_pair(next.size(), chords_of(next));
        if (!seen.insert(key.second).second) continue;
        auto res = solve(next);
        if (!res.rep) continue;
        pool.push_back(next);
        int orders = 0;
        for_each_pick_order([&](const SolverOptions& o) { return solve(next, o); }, [&](const SolveOutcome&) { ++orders; }, 3);
        if (orders >= 2) out.push_back(next);
    }
    return out;
}

} // namespace fixtures
