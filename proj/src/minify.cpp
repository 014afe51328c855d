#include "enptkit/minify.hpp"

#include <algorithm>

namespace enptkit {

std::string describe(const MinifyOp& op)
{
    std::string e = "{" + op.edge.first + "," + op.edge.second + "}";
    if (op.kind == MinifyOp::Contract) return "contract" + e;
    return "tr(" + op.path_id + "," + e + ")";
}

namespace {

Representation contract_edge(const Representation& rep, int u, int v)
{
    const auto& t = rep.tree;
    // keep the naturally smaller label
    if (natural_less(t.label(v), t.label(u))) std::swap(u, v);
    const std::string& keep = t.label(u);
    const std::string& gone = t.label(v);
    std::vector<std::string> vs;
    for (const auto& l : t.labels())
        if (l != gone) vs.push_back(l);
    std::vector<LabelEdge> es;
    for (auto [a, b] : t.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        es.emplace_back(a == v ? keep : t.label(a), b == v ? keep : t.label(b));
    }
    LabelPathMap paths;
    for (const auto& [id, p] : rep.paths) {
        std::vector<std::string> seq;
        for (int x : p.vertices()) {
            const std::string& l = x == v ? keep : t.label(x);
            if (seq.empty() || seq.back() != l) seq.push_back(l);
        }
        if (seq.size() < 2) throw Error(ErrorKind::WouldEmptyPath, "contracting the only edge of path '" + id + "'");
        paths.emplace(id, std::move(seq));
    }
    return rebuild(vs, es, paths);
}

} // namespace

Representation apply_minify(const Representation& rep, const MinifyOp& op)
{
    const auto& t = rep.tree;
    if (!t.contains(op.edge.first) || !t.contains(op.edge.second))
        throw Error(ErrorKind::Inapplicable, describe(op) + ": unknown vertex");
    int u = t.index(op.edge.first), v = t.index(op.edge.second);
    int e = t.edge_id(u, v);
    if (e < 0) throw Error(ErrorKind::Inapplicable, describe(op) + ": not a tree edge");
    if (op.kind == MinifyOp::Contract) return contract_edge(rep, u, v);

    auto it = rep.paths.find(op.path_id);
    if (it == rep.paths.end()) throw Error(ErrorKind::Inapplicable, describe(op) + ": unknown path");
    const auto& vs = it->second.vertices();
    std::vector<int> seq;
    if (t.edge_id(vs[0], vs[1]) == e) seq.assign(vs.begin() + 1, vs.end());
    else if (t.edge_id(vs[vs.size() - 2], vs.back()) == e) seq.assign(vs.begin(), vs.end() - 1);
    else throw Error(ErrorKind::Inapplicable, describe(op) + ": not a tail");
    if (seq.size() < 2) throw Error(ErrorKind::WouldEmptyPath, describe(op));
    Representation out = rep;
    out.paths.at(op.path_id) = TreePath(t, std::move(seq));
    return out;
}

GraphPair derived_pair(const Representation& rep)
{
    auto g = derive_graphs(rep);
    return GraphPair(g.ids, g.ept, g.enpt);
}

Representation union_in_rep(const Representation& rep, const std::string& p, const std::string& q)
{
    const auto& pp = rep.path(p);
    const auto& pq = rep.path(q);
    if (relation(rep.tree, pp, pq) != PathRelation::NonSplitting)
        throw Error(ErrorKind::NotUnionable, "P_" + p + " and P_" + q + " are not non-splitting");
    auto pair = derived_pair(rep);
    if (!is_contractible(pair, p, q))
        throw Error(ErrorKind::PairContractionUndefined, "{" + p + "," + q + "} lies in a BBR triangle");
    Representation out = rep;
    auto u = union_path(rep.tree, pp, pq);
    out.paths.erase(p);
    out.paths.erase(q);
    out.paths.emplace(merged_name(p, q), std::move(u));
    return out;
}

bool equivalent(const Representation& a, const Representation& b)
{
    if (a.ids() != b.ids()) throw Error(ErrorKind::IdMismatch, "representations index different path sets");
    auto ga = derive_graphs(a), gb = derive_graphs(b);
    return ga.ept == gb.ept && ga.enpt == gb.enpt;
}

std::vector<MinifyOp> candidate_ops(const Representation& rep)
{
    const auto& t = rep.tree;
    std::vector<MinifyOp> ops;
    std::vector<LabelEdge> es;
    for (auto [u, v] : t.edges()) {
        std::string a = t.label(u), b = t.label(v);
        if (natural_less(b, a)) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end(), [](const LabelEdge& x, const LabelEdge& y) {
        if (x.first != y.first) return natural_less(x.first, y.first);
        return natural_less(x.second, y.second);
    });
    for (const auto& e : es) {
        int id = t.edge_id(t.index(e.first), t.index(e.second));
        bool sole = std::any_of(rep.paths.begin(), rep.paths.end(),
                                [&](const auto& kv) { return kv.second.length() == 1 && kv.second.has_edge(id); });
        if (!sole) ops.push_back(MinifyOp::contract(e));
    }
    for (const auto& [id, p] : rep.paths) {
        if (p.length() < 2) continue;
        std::vector<LabelEdge> tails;
        for (int w : {p.front(), p.back()}) {
            auto [x, y] = t.edge(p.tail_at(t, w));
            std::string a = t.label(x), b = t.label(y);
            if (natural_less(b, a)) std::swap(a, b);
            tails.emplace_back(a, b);
        }
        std::sort(tails.begin(), tails.end(), [](const LabelEdge& x, const LabelEdge& y) {
            if (x.first != y.first) return natural_less(x.first, y.first);
            return natural_less(x.second, y.second);
        });
        for (const auto& e : tails) ops.push_back(MinifyOp::trim(id, e));
    }
    return ops;
}

bool is_minimal(const Representation& rep)
{
    auto base = derive_graphs(rep);
    for (const auto& op : candidate_ops(rep)) {
        auto next = derive_graphs(apply_minify(rep, op));
        if (next.ept == base.ept && next.enpt == base.enpt) return false;
    }
    return true;
}

MinimizeResult minimize_traced(const Representation& rep)
{
    MinimizeResult out{rep, {}};
    auto base = derive_graphs(rep);
    for (;;) {
        bool moved = false;
        for (const auto& op : candidate_ops(out.rep)) {
            auto next = apply_minify(out.rep, op);
            auto g = derive_graphs(next);
            if (g.ept == base.ept && g.enpt == base.enpt) {
                out.rep = std::move(next);
                out.trace.push_back(op);
                moved = true;
                break;
            }
        }
        if (!moved) return out;
    }
}

Representation minimize(const Representation& rep) { return minimize_traced(rep).rep; }

} // namespace enptkit
