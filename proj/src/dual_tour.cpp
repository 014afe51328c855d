#include "enptkit/dual_tour.hpp"
#include "enptkit/minify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace enptkit {

namespace {

bool crosses(int a, int b, int c, int d, int n)
{
    (void)n;
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) return false;
    bool c_in = a < c && c < b;
    bool d_in = a < d && d < b;
    return c_in != d_in;
}

std::vector<std::pair<int, int>> chords_by_position(const GraphPair& pair, const std::vector<int>& cyc)
{
    int n = pair.size();
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[cyc[k]] = k;
    std::vector<std::pair<int, int>> out;
    for (const auto& [a, b] : pair.red_edges()) {
        int x = pos[pair.index(a)], y = pos[pair.index(b)];
        out.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool is_outerplanar(const GraphPair& pair)
{
    auto cyc = blue_cycle(pair);
    auto ch = chords_by_position(pair, cyc);
    for (size_t i = 0; i < ch.size(); ++i)
        for (size_t j = i + 1; j < ch.size(); ++j)
            if (crosses(ch[i].first, ch[i].second, ch[j].first, ch[j].second, pair.size())) return false;
    return true;
}

GraphPair maximal_outerplanar_subgraph(const GraphPair& pair)
{
    auto cyc = blue_cycle(pair);
    int n = pair.size();
    auto ch = chords_by_position(pair, cyc);
    auto len = [n](const std::pair<int, int>& c) { return std::min(c.second - c.first, n - (c.second - c.first)); };
    std::stable_sort(ch.begin(), ch.end(), [&](const auto& x, const auto& y) { return len(x) < len(y); });
    std::vector<std::pair<int, int>> kept;
    for (const auto& c : ch) {
        bool ok = std::none_of(kept.begin(), kept.end(),
                               [&](const auto& k) { return crosses(c.first, c.second, k.first, k.second, n); });
        if (ok) kept.push_back(c);
    }
    std::vector<IdEdge> all = pair.blue_edges(), blue = pair.blue_edges();
    for (auto [x, y] : kept) all.emplace_back(pair.id(cyc[x]), pair.id(cyc[y]));
    return GraphPair(pair.ids(), all, blue);
}

int WeakDualTree::degree(int f) const
{
    int d = 0;
    for (auto [a, b] : adjacency) d += (a == f) + (b == f);
    return d;
}

WeakDualTree weak_dual_tree(const GraphPair& opg)
{
    auto cyc = blue_cycle(opg);
    int n = opg.size();
    auto ch = chords_by_position(opg, cyc);
    for (size_t i = 0; i < ch.size(); ++i)
        for (size_t j = i + 1; j < ch.size(); ++j)
            if (crosses(ch[i].first, ch[i].second, ch[j].first, ch[j].second, n))
                throw Error(ErrorKind::NotOuterplanar, "chords cross");
    std::set<std::pair<int, int>> chord_set(ch.begin(), ch.end());

    // split the polygon along chords; positions stay sorted inside every piece
    std::vector<std::vector<int>> pending{{}};
    for (int k = 0; k < n; ++k) pending[0].push_back(k);
    std::vector<std::vector<int>> faces;
    while (!pending.empty()) {
        auto poly = std::move(pending.back());
        pending.pop_back();
        int m = static_cast<int>(poly.size());
        bool split = false;
        for (int a = 0; a < m && !split; ++a)
            for (int b = a + 2; b < m && !split; ++b) {
                if (a == 0 && b == m - 1) continue;
                if (!chord_set.count({poly[a], poly[b]})) continue;
                std::vector<int> left(poly.begin() + a, poly.begin() + b + 1);
                std::vector<int> right(poly.begin(), poly.begin() + a + 1);
                right.insert(right.end(), poly.begin() + b, poly.end());
                pending.push_back(std::move(left));
                pending.push_back(std::move(right));
                split = true;
            }
        if (!split) faces.push_back(std::move(poly));
    }
    std::sort(faces.begin(), faces.end());

    WeakDualTree wdt;
    for (const auto& f : faces) {
        Face face;
        int m = static_cast<int>(f.size());
        for (int k = 0; k < m; ++k) {
            face.boundary.push_back(opg.id(cyc[f[k]]));
            int a = f[k], b = f[(k + 1) % m];
            if (chord_set.count({std::min(a, b), std::max(a, b)})) ++face.red_edges;
        }
        wdt.faces.push_back(std::move(face));
    }
    auto has_side = [](const std::vector<int>& f, int a, int b) {
        int m = static_cast<int>(f.size());
        for (int k = 0; k < m; ++k) {
            int x = f[k], y = f[(k + 1) % m];
            if ((x == a && y == b) || (x == b && y == a)) return true;
        }
        return false;
    };
    for (auto [a, b] : ch) {
        std::vector<int> owners;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            if (has_side(faces[f], a, b)) owners.push_back(f);
        if (owners.size() == 2) {
            wdt.adjacency.emplace_back(owners[0], owners[1]);
            wdt.shared_chord.emplace_back(opg.id(cyc[a]), opg.id(cyc[b]));
        }
    }
    return wdt;
}

Representation build_planar_tour(const GraphPair& pair)
{
    int n = pair.size();
    if (n < 5) throw Error(ErrorKind::PreconditionViolated, "planar tours need n >= 5");
    auto cyc = blue_cycle(pair);
    if (!satisfies_p1(pair)) throw Error(ErrorKind::PreconditionViolated, "pair has a contractible edge");
    if (!satisfies_p2(pair)) throw Error(ErrorKind::PreconditionViolated, "pair contains a K4P4");
    if (!is_outerplanar(pair)) throw Error(ErrorKind::NoRepresentation, "G is not outerplanar");
    auto wdt = weak_dual_tree(pair);

    // faces touching the outer face must be triangles with two cycle edges
    for (const auto& f : wdt.faces) {
        int m = static_cast<int>(f.boundary.size());
        int cycle_edges = m - f.red_edges;
        if (cycle_edges > 0 && (m != 3 || cycle_edges != 2))
            throw Error(ErrorKind::NoRepresentation, "a face on the outer face is not a BBR triangle");
    }

    std::vector<std::string> fv;
    for (size_t f = 0; f < wdt.faces.size(); ++f) fv.push_back("f" + std::to_string(f));
    std::vector<LabelEdge> fe;
    std::map<std::pair<std::string, std::string>, int> chord_edge;
    for (size_t k = 0; k < wdt.adjacency.size(); ++k) {
        auto [a, b] = wdt.adjacency[k];
        fe.emplace_back(fv[a], fv[b]);
        auto c = wdt.shared_chord[k];
        chord_edge[c] = static_cast<int>(k);
        chord_edge[{c.second, c.first}] = static_cast<int>(k);
    }
    HostTree tree(fv, fe);

    auto contains = [&](int f, const std::string& v) {
        const auto& b = wdt.faces[f].boundary;
        return std::find(b.begin(), b.end(), v) != b.end();
    };
    LabelPathMap paths;
    for (int k = 0; k < n; ++k) {
        const std::string& j = pair.id(cyc[k]);
        const std::string& prev = pair.id(cyc[(k + n - 1) % n]);
        const std::string& next = pair.id(cyc[(k + 1) % n]);
        if (pair.neighbors(cyc[k]).size() == 2) {
            auto [a, b] = wdt.adjacency.at(chord_edge.at({prev, next}));
            paths[j] = {fv[a], fv[b]};
            continue;
        }
        // faces around j, from the one holding {prev,j} across chords at j
        int start = -1;
        for (int f = 0; f < static_cast<int>(wdt.faces.size()); ++f) {
            const auto& b = wdt.faces[f].boundary;
            int m = static_cast<int>(b.size());
            for (int s = 0; s < m; ++s)
                if ((b[s] == prev && b[(s + 1) % m] == j) || (b[s] == j && b[(s + 1) % m] == prev)) start = f;
        }
        std::vector<std::string> seq{fv[start]};
        int cur = start, from = -1;
        for (;;) {
            int step = -1;
            for (size_t a = 0; a < wdt.adjacency.size(); ++a) {
                auto [x, y] = wdt.adjacency[a];
                int other = x == cur ? y : y == cur ? x : -1;
                if (other < 0 || other == from) continue;
                const auto& c = wdt.shared_chord[a];
                if ((c.first == j || c.second == j) && contains(other, j)) step = other;
            }
            if (step < 0) break;
            from = cur;
            cur = step;
            seq.push_back(fv[cur]);
        }
        if (seq.size() < 2) throw Error(ErrorKind::NoRepresentation, "vertex '" + j + "' has no chord");
        paths[j] = seq;
    }
    return make_representation(std::move(tree), paths);
}

bool is_dfs_leaf_order(const HostTree& tree, const std::vector<int>& cyclic_leaves)
{
    int L = static_cast<int>(cyclic_leaves.size());
    for (auto [u, v] : tree.edges()) {
        // leaves on v's side
        std::vector<char> side(tree.size(), 0);
        std::vector<int> stack{v};
        side[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : tree.neighbors(x))
                if (!side[y] && y != u) {
                    side[y] = 1;
                    stack.push_back(y);
                }
        }
        int changes = 0;
        for (int k = 0; k < L; ++k) changes += side[cyclic_leaves[k]] != side[cyclic_leaves[(k + 1) % L]];
        if (changes > 2) return false;
    }
    return true;
}

Representation strip_cherries(const Representation& rep, int* removed)
{
    Representation cur = rep;
    int count = 0;
    for (;;) {
        const auto& t = cur.tree;
        std::vector<int> ends(t.size(), 0);
        for (const auto& [id, p] : cur.paths) {
            ++ends[p.front()];
            ++ends[p.back()];
        }
        auto owner = [&](int leaf) -> std::string {
            for (const auto& [id, p] : cur.paths)
                if (p.is_endpoint(leaf)) return id;
            return {};
        };
        bool done = true;
        for (int c = 0; c < t.size() && done; ++c) {
            std::vector<int> lv;
            for (int x : t.neighbors(c))
                if (t.degree(x) == 1 && ends[x] == 1) lv.push_back(x);
            for (size_t a = 0; a < lv.size() && done; ++a)
                for (size_t b = a + 1; b < lv.size() && done; ++b) {
                    auto pa = owner(lv[a]), pb = owner(lv[b]);
                    if (pa == pb || cur.paths.at(pa).length() < 2 || cur.paths.at(pb).length() < 2) continue;
                    if (t.size() - 2 < 2) continue;
                    auto lp = label_paths(cur);
                    auto cut = [&](const std::string& id, const std::string& leaf) {
                        auto& s = lp.at(id);
                        if (s.front() == leaf) s.erase(s.begin());
                        else s.pop_back();
                    };
                    std::string la = t.label(lv[a]), lb = t.label(lv[b]);
                    cut(pa, la);
                    cut(pb, lb);
                    std::vector<std::string> vs;
                    for (const auto& l : t.labels())
                        if (l != la && l != lb) vs.push_back(l);
                    std::vector<LabelEdge> es;
                    for (const auto& e : t.label_edges())
                        if (e.first != la && e.second != la && e.first != lb && e.second != lb) es.push_back(e);
                    cur = rebuild(vs, es, lp);
                    ++count;
                    done = false;
                }
        }
        if (done) break;
    }
    if (removed) *removed = count;
    return cur;
}

namespace {

struct CherryCandidate {
    std::string a, b;   // leaf labels
    std::string pa, pb; // owning path ids
};

std::vector<CherryCandidate> cherry_candidates(const Representation& rep)
{
    const auto& t = rep.tree;
    std::vector<int> ends(t.size(), 0);
    std::vector<std::string> owner(t.size());
    for (const auto& [id, p] : rep.paths)
        for (int w : {p.front(), p.back()}) {
            ++ends[w];
            owner[w] = id;
        }
    std::vector<CherryCandidate> out;
    for (int c = 0; c < t.size(); ++c) {
        std::vector<int> lv;
        for (int x : t.neighbors(c))
            if (t.degree(x) == 1 && ends[x] == 1) lv.push_back(x);
        for (size_t i = 0; i < lv.size(); ++i)
            for (size_t j = i + 1; j < lv.size(); ++j) {
                const auto& pa = owner[lv[i]];
                const auto& pb = owner[lv[j]];
                if (pa == pb || rep.paths.at(pa).length() < 2 || rep.paths.at(pb).length() < 2) continue;
                out.push_back({t.label(lv[i]), t.label(lv[j]), pa, pb});
            }
    }
    return out;
}

Representation drop_leaves(const Representation& rep, const std::set<std::string>& gone)
{
    auto lp = label_paths(rep);
    for (auto& [id, seq] : lp) {
        if (gone.count(seq.front())) seq.erase(seq.begin());
        if (gone.count(seq.back())) seq.pop_back();
    }
    std::vector<std::string> vs;
    for (const auto& l : rep.tree.labels())
        if (!gone.count(l)) vs.push_back(l);
    std::vector<LabelEdge> es;
    for (const auto& e : rep.tree.label_edges())
        if (!gone.count(e.first) && !gone.count(e.second)) es.push_back(e);
    return rebuild(vs, es, lp);
}

bool tour_order_ok(const Representation& r, const GraphPair& pair, const std::vector<int>& cyc)
{
    const auto& t = r.tree;
    auto leaves = t.leaves();
    if (leaves.size() < 3) return false;
    std::vector<int> seq;
    for (int idx : cyc) {
        const auto& p = r.paths.at(pair.id(idx));
        std::vector<int> at;
        for (int w : {p.front(), p.back()})
            if (t.degree(w) == 1) at.push_back(w);
        if (at.size() == 2 && !seq.empty() && at[1] == seq.back()) std::swap(at[0], at[1]);
        // a second piece of the long path just walked
        if (at.size() == 2 && seq.size() >= 2 && seq.back() == at[0] && seq[seq.size() - 2] == at[1]) continue;
        for (int w : at)
            if (seq.empty() || seq.back() != w) seq.push_back(w);
    }
    while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != leaves) return false;
    return is_dfs_leaf_order(t, seq);
}

} // namespace

bool is_broken_planar_tour_with_cherries(const Representation& rep)
{
    GraphPair pair = derived_pair(rep);
    if (!is_hamiltonian_pair(pair)) return false;
    auto cyc = blue_cycle(pair);
    auto cands = cherry_candidates(rep);
    if (cands.size() > 12) cands.resize(12);
    // a leaf pair shaped like a cherry may also belong to the tour itself, so try every disjoint subset
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << cands.size()); ++mask) {
        std::set<std::string> gone;
        bool disjoint = true;
        for (size_t k = 0; k < cands.size() && disjoint; ++k)
            if (mask >> k & 1) {
                disjoint = gone.insert(cands[k].a).second && gone.insert(cands[k].b).second;
            }
        if (!disjoint) continue;
        Representation r = gone.empty() ? rep : drop_leaves(rep, gone);
        if (tour_order_ok(r, pair, cyc)) return true;
    }
    return false;
}

} // namespace enptkit
