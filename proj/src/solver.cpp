#include "enptkit/solver.hpp"
#include "enptkit/dual_tour.hpp"
#include "enptkit/minify.hpp"

#include <algorithm>

namespace enptkit {

namespace {

int pick(const SolverOptions& opts, int count)
{
    if (count <= 1 || !opts.choose) return 0;
    int k = opts.choose(count);
    return std::clamp(k, 0, count - 1);
}

SolveOutcome solve_rec(const GraphPair& pair, const SolverOptions& opts);

// rename template positions onto the pair's cycle under one of the 2n dihedral maps
std::optional<Representation> match_template(const GraphPair& pair, const CycleTemplate& t)
{
    int n = pair.size();
    if (n != t.n) return std::nullopt;
    auto cyc = blue_cycle(pair);
    GraphPair tp = cycle_plus_chords(t.n, t.chords);
    for (int dir : {1, -1})
        for (int r = 0; r < n; ++r) {
            auto map = [&](int k) { return cyc[((r + dir * k) % n + n) % n]; };
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b) {
                    int ta = tp.index(std::to_string(a)), tb = tp.index(std::to_string(b));
                    ok = tp.has_edge(ta, tb) == pair.has_edge(map(a), map(b)) && tp.is_blue(ta, tb) == pair.is_blue(map(a), map(b));
                }
            if (!ok) continue;
            LabelPathMap paths;
            for (const auto& [id, seq] : t.paths) paths[pair.id(map(std::stoi(id)))] = seq;
            return rebuild(t.tree_vertices, t.tree_edges, paths);
        }
    return std::nullopt;
}

std::pair<int, int> endpoints(const TreePath& p) { return {p.front(), p.back()}; }

Representation replace_with_copies(const Representation& rep, const std::string& merged, const std::string& a, const std::string& b)
{
    Representation out = rep;
    TreePath p = out.paths.at(merged);
    out.paths.erase(merged);
    out.paths.emplace(a, p);
    out.paths.emplace(b, p);
    return out;
}

Representation subdivide(const Representation& rep, int u, int v, std::string& mid)
{
    const auto& t = rep.tree;
    mid = t.fresh_label("s");
    std::vector<std::string> vs = t.labels();
    vs.push_back(mid);
    std::vector<LabelEdge> es;
    for (auto [x, y] : t.edges()) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        es.emplace_back(t.label(x), t.label(y));
    }
    es.emplace_back(t.label(u), mid);
    es.emplace_back(mid, t.label(v));
    LabelPathMap paths;
    for (const auto& [id, p] : rep.paths) {
        std::vector<std::string> seq;
        const auto& pv = p.vertices();
        for (size_t k = 0; k < pv.size(); ++k) {
            seq.push_back(t.label(pv[k]));
            if (k + 1 < pv.size() && ((pv[k] == u && pv[k + 1] == v) || (pv[k] == v && pv[k + 1] == u))) seq.push_back(mid);
        }
        paths.emplace(id, std::move(seq));
    }
    return rebuild(vs, es, paths);
}

Representation trim(const Representation& rep, const std::string& id, int x, int y)
{
    return apply_minify(rep, MinifyOp::trim(id, {rep.tree.label(x), rep.tree.label(y)}));
}

SolveOutcome checked(Representation rep, const GraphPair& pair)
{
    if (!validate(rep, pair)) return SolveOutcome::no("validation", "derived graphs or (P3) disagree with the pair");
    return SolveOutcome::yes(std::move(rep));
}

Representation split_shared_ends_impl(const Representation& rep, const GraphPair& g, const std::string& p);
Representation adjust_impl(const Representation& rep, const GraphPair& g, const std::string& p, const std::string& w_label, bool deep);

} // namespace

Representation instantiate(const CycleTemplate& t)
{
    return rebuild(t.tree_vertices, t.tree_edges, t.paths);
}

bool represents(const Representation& rep, const GraphPair& pair)
{
    if (rep.ids() != pair.ids()) throw Error(ErrorKind::IdMismatch, "path ids differ from pair vertices");
    auto g = derive_graphs(rep);
    return g.ept == pair.edges() && g.enpt == pair.blue_edges();
}

bool validate(const Representation& rep, const GraphPair& pair)
{
    return represents(rep, pair) && satisfies_p3(rep).ok;
}

SolveChecks run_checks(const Representation& rep, const GraphPair& pair)
{
    SolveChecks c;
    c.minimal = is_minimal(rep);
    c.p3 = satisfies_p3(rep).ok;
    c.structure = pair.size() < 6 || is_broken_planar_tour_with_cherries(rep);
    return c;
}

Representation make_cherry(const Representation& rep, const std::string& p, const std::string& q)
{
    const auto& t = rep.tree;
    const auto& pp = rep.path(p);
    const auto& pq = rep.path(q);
    int v = -1;
    for (int x : {pp.front(), pp.back()})
        if (v < 0 && pq.is_endpoint(x)) v = x;
    if (v < 0) throw Error(ErrorKind::NoCommonEndpoint, "P_" + p + " and P_" + q);
    std::string vl = t.label(v);
    std::string v1 = t.fresh_label("c");
    std::vector<std::string> vs = t.labels();
    vs.push_back(v1);
    std::string v2;
    for (int k = 0;; ++k) {
        v2 = "c" + std::to_string(k);
        if (!t.contains(v2) && v2 != v1) break;
    }
    vs.push_back(v2);
    auto es = t.label_edges();
    es.emplace_back(vl, v1);
    es.emplace_back(vl, v2);
    auto lp = label_paths(rep);
    auto extend = [&](const std::string& id, const std::string& leaf) {
        auto& s = lp.at(id);
        if (s.back() == vl) s.push_back(leaf);
        else s.insert(s.begin(), leaf);
    };
    extend(p, v1);
    extend(q, v2);
    return rebuild(vs, es, lp);
}

Representation adjust_endpoint(const Representation& rep, const GraphPair& g, const std::string& p, const std::string& w_label)
{
    return adjust_impl(rep, g, p, w_label, false);
}

namespace {

// deep: keep trimming at w while any non-neighbour still shares an edge with P_p, not only the tail
Representation adjust_impl(const Representation& rep, const GraphPair& g, const std::string& p, const std::string& w_label, bool deep)
{
    Representation cur = rep;
    std::string wl = w_label;
    int gp = g.index(p);
    std::vector<std::string> xs;
    for (;;) {
        const auto& t = cur.tree;
        const auto& pp = cur.path(p);
        int w = t.index(wl);
        int ew = pp.tail_at(t, w);
        xs.clear();
        bool has_y = false;
        for (const auto& [id, q] : cur.paths) {
            if (id == p) continue;
            bool adj = g.has_edge(gp, g.index(id));
            if (q.has_edge(ew) && !adj) xs.push_back(id);
            if (adj && q.has_edge(ew)) {
                std::vector<int> common;
                std::set_intersection(pp.edges().begin(), pp.edges().end(), q.edges().begin(), q.edges().end(),
                                      std::back_inserter(common));
                if (common.size() == 1) has_y = true;
            }
        }
        if (xs.empty()) {
            if (!deep) return cur;
            bool offended = std::any_of(cur.paths.begin(), cur.paths.end(), [&](const auto& kv) {
                if (kv.first == p || g.has_edge(gp, g.index(kv.first))) return false;
                return relation(t, pp, kv.second) != PathRelation::Parallel;
            });
            if (!offended || has_y || pp.length() == 1) return cur;
            auto [x, y] = t.edge(ew);
            int next = x == w ? y : x;
            cur = trim(cur, p, x, y);
            wl = t.label(next);
            continue;
        }
        if (has_y || pp.length() == 1) break;
        auto [x, y] = t.edge(ew);
        int next = x == w ? y : x;
        cur = trim(cur, p, x, y);
        wl = t.label(next);
    }
    // subdivide e_w = {w,a} into {w,s},{s,a}; X paths lose {s,a}, P_p loses {w,s}
    const auto& t = cur.tree;
    const auto& pp = cur.path(p);
    int w = t.index(wl);
    auto [x, y] = t.edge(pp.tail_at(t, w));
    int a = x == w ? y : x;
    std::string al = t.label(a), mid;
    cur = subdivide(cur, w, a, mid);
    for (const auto& id : xs) cur = trim(cur, id, cur.tree.index(mid), cur.tree.index(al));
    cur = trim(cur, p, cur.tree.index(wl), cur.tree.index(mid));
    return cur;
}

} // namespace

Representation split_shared_ends(const Representation& rep, const GraphPair& g, const std::string& p)
{
    return split_shared_ends_impl(rep, g, p);
}

namespace {

Representation split_shared_ends_impl(const Representation& rep, const GraphPair& g, const std::string& p)
{
    Representation cur = rep;
    for (const auto& x : rep.ids()) {
        if (x == p || !g.is_red(p, x)) continue;
        const auto& pp = cur.path(p);
        const auto& px = cur.path(x);
        if (relation(cur.tree, pp, px) != PathRelation::NonSplitting) continue;
        if (!px.is_endpoint(pp.front()) && !px.is_endpoint(pp.back())) continue;
        cur = make_cherry(cur, p, x);
    }
    return cur;
}

} // namespace

SolveOutcome solve_small(const GraphPair& pair)
{
    if (pair.size() != 5) throw Error(ErrorKind::WrongSize, "solve_small handles n = 5");
    for (const auto& t : cycle_templates())
        if (auto r = match_template(pair, t)) return checked(std::move(*r), pair);
    return SolveOutcome::no("structure", "not one of the two representable shapes on five vertices");
}

SolveOutcome find_min_rep_p2_p3(const GraphPair& pair, const SolverOptions& opts)
{
    int n = pair.size();
    if (n <= 5) return SolveOutcome::no("precondition", "needs n > 5");
    if (!satisfies_p2(pair)) return SolveOutcome::no("precondition", "pair contains a K4P4");
    auto cyc = blue_cycle(pair);

    std::vector<int> starts; // cycle positions k with {c[k], c[k+1]} contractible
    for (int k = 0; k < n; ++k)
        if (is_contractible(pair, pair.id(cyc[k]), pair.id(cyc[(k + 1) % n]))) starts.push_back(k);
    if (starts.empty()) {
        if (!is_outerplanar(pair)) return SolveOutcome::no("structure", "contraction-minimal pair is not outerplanar");
        try {
            return checked(build_planar_tour(pair), pair);
        } catch (const Error& e) {
            return SolveOutcome::no("structure", e.what());
        }
    }
    int k = starts[pick(opts, static_cast<int>(starts.size()))];
    const std::string& a = pair.id(cyc[k]);
    const std::string& b = pair.id(cyc[(k + 1) % n]);
    const std::string& before = pair.id(cyc[(k + n - 1) % n]);
    const std::string& after = pair.id(cyc[(k + 2) % n]);
    std::string j = merged_name(a, b);

    auto sub = solve_rec(contract_pair(pair, a, b), opts);
    if (sub.kind == SolveOutcome::No) return sub;
    const Representation& small = *sub.rep;

    try {
        const auto& pj = small.path(j);
        const auto& t = small.tree;
        auto tail_in = [&](int x, const std::string& id) {
            auto it = small.paths.find(id);
            return it != small.paths.end() && it->second.has_edge(pj.tail_at(t, x));
        };
        // P_a keeps the end on P_before's side and is adjusted at the other end
        auto [f, l] = endpoints(pj);
        int u = f, v = l;
        if (tail_in(l, before) && !tail_in(f, before)) std::swap(u, v);
        else if (!(tail_in(f, before) && !tail_in(l, before)) && tail_in(f, after) && !tail_in(l, after)) std::swap(u, v);
        std::string ul = t.label(u), vl = t.label(v);

        Representation rep = replace_with_copies(small, j, a, b);
        rep = adjust_endpoint(rep, pair, a, vl);
        rep = adjust_endpoint(rep, pair, b, ul);
        if (!opts.literal) {
            rep = split_shared_ends(rep, pair, a);
            rep = split_shared_ends(rep, pair, b);
        }
        auto out = checked(std::move(rep), pair);
        if (out.rep || opts.literal) return out;
        // the tails alone did not separate the copies from every non-neighbour
        for (bool swap : {false, true}) {
            Representation alt = replace_with_copies(small, j, a, b);
            alt = adjust_impl(alt, pair, a, swap ? ul : vl, true);
            alt = adjust_impl(alt, pair, b, swap ? vl : ul, true);
            alt = split_shared_ends(alt, pair, a);
            alt = split_shared_ends(alt, pair, b);
            if (!validate(alt, pair)) continue;
            alt = minimize(alt);
            if (validate(alt, pair)) return SolveOutcome::yes(std::move(alt));
        }
        return out;
    } catch (const Error& e) {
        return SolveOutcome::no("validation", e.what());
    }
}

SolveOutcome find_min_rep_p3(const GraphPair& pair, const SolverOptions& opts)
{
    int n = pair.size();
    if (n < 6) return SolveOutcome::no("precondition", "needs n >= 6");
    auto ks = find_k4p4(pair);
    if (ks.empty()) return find_min_rep_p2_p3(pair, opts);
    if (n < 7) return SolveOutcome::no("structure", "a K4P4 on six vertices has no (P3) representation");
    for (const auto& k : ks)
        if (!k.bracket) return SolveOutcome::no("structure", "K4P4 without a unique isolated vertex");

    const auto& K = ks[pick(opts, static_cast<int>(ks.size()))];
    const auto& br = *K.bracket;
    std::string b4 = cycle_step(pair, br[3], br[2]);
    std::string m = merged_name(br[2], br[3]);

    auto sub = solve_rec(aggressive_contract(pair, K), opts);
    if (sub.kind == SolveOutcome::No) return sub;
    const Representation& small = *sub.rep;

    try {
        Representation rep = replace_with_copies(small, m, br[2], br[3]);
        bool twin = pair.has_edge(br[2], b4);
        std::string wl;
        if (twin) {
            rep = make_cherry(rep, b4, br[2]);
        } else {
            const auto& p2 = rep.path(br[2]);
            const auto& p1 = rep.path(br[1]);
            int w = p2.back();
            bool front_core = p1.is_endpoint(p2.front());
            bool back_core = p1.is_endpoint(p2.back());
            if (back_core && !front_core) w = p2.front();
            else if (!front_core && !back_core && p1.has_vertex(p2.back()) && !p1.has_vertex(p2.front())) w = p2.front();
            wl = rep.tree.label(w);
            rep = adjust_endpoint(rep, pair, br[2], wl);
        }
        rep = make_cherry(rep, br[1], br[3]);
        auto out = checked(std::move(rep), pair);
        if (out.rep || opts.literal || twin) return out;
        // as in the contractible case, the tail alone may not separate P_{i+2} from its non-neighbours
        Representation alt = replace_with_copies(small, m, br[2], br[3]);
        alt = adjust_impl(alt, pair, br[2], wl, true);
        alt = make_cherry(alt, br[1], br[3]);
        if (!validate(alt, pair)) return out;
        alt = minimize(alt);
        if (validate(alt, pair)) return SolveOutcome::yes(std::move(alt));
        return out;
    } catch (const Error& e) {
        return SolveOutcome::no("validation", e.what());
    }
}

namespace {

SolveOutcome solve_rec(const GraphPair& pair, const SolverOptions& opts)
{
    int n = pair.size();
    if (n <= 4) {
        for (const auto& t : cycle_templates())
            if (auto r = match_template(pair, t)) return checked(std::move(*r), pair);
        return SolveOutcome::no("structure", "no representation on " + std::to_string(n) + " vertices");
    }
    if (n == 5) return solve_small(pair);
    return find_min_rep_p3(pair, opts);
}

} // namespace

SolveOutcome solve(const GraphPair& pair, const SolverOptions& opts)
{
    blue_cycle(pair);
    return solve_rec(pair, opts);
}

} // namespace enptkit
