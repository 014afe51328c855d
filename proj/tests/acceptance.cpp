// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "support.hpp"

#include "enptkit/dual_tour.hpp"
#include "enptkit/error.hpp"
#include "enptkit/hardness.hpp"
#include "enptkit/oracle.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>

using namespace enptkit;
using namespace fixtures;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

std::set<IdEdge> edge_names(std::initializer_list<std::pair<int, int>> es)
{
    std::set<IdEdge> out;
    for (auto [a, b] : es) out.insert({std::to_string(a), std::to_string(b)});
    return out;
}

std::set<std::string> forms_of(const std::vector<Representation>& reps)
{
    std::set<std::string> out;
    for (const auto& r : reps) out.insert(canonical_form(r));
    return out;
}

Result five_path_reproduction()
{
    auto g = derive_graphs(five_paths());
    auto ept = edge_names({{1, 2}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    auto vpt = ept;
    vpt.insert({"1", "3"});
    vpt.insert({"2", "4"});
    Result r;
    r.pass = as_set(g.ept) == ept && as_set(g.vpt) == vpt && as_set(g.enpt) == edge_names({{3, 5}});
    r.detail = "EPT " + std::to_string(g.ept.size()) + " edges, VPT " + std::to_string(g.vpt.size()) + ", ENPT " +
               std::to_string(g.enpt.size());
    return r;
}

Result unique_c5(const GraphPair& pair, const Representation& fixture)
{
    Result r;
    auto out = solve(pair);
    std::string want = canonical_form(fixture);
    bool solver_ok = out.rep && canonical_form(*out.rep) == want && validate(*out.rep, pair);
    auto forms = forms_of(brute_min_rep(pair, SearchBounds{}));
    r.pass = solver_ok && forms.size() == 1 && *forms.begin() == want;
    r.detail = std::string("solver ") + (solver_ok ? "matches fixture" : "differs") + ", oracle forms " + std::to_string(forms.size());
    return r;
}

Result small_constants()
{
    Result r;
    int entries = 0;
    for (const auto& s : stored_small_forms()) {
        auto got = forms_of(brute_min_rep(cycle_plus_chords(s.n, s.chords), SearchBounds{}));
        std::vector<std::string> regenerated(got.begin(), got.end());
        std::vector<std::string> stored = s.forms;
        std::sort(stored.begin(), stored.end());
        if (regenerated != stored) r.pass = false;
        ++entries;
    }
    r.detail = std::to_string(entries) + " stored pairs regenerated";
    return r;
}

Result order_irrelevance()
{
    std::mt19937 rng(20240607);
    int sets = 0, perms = 0, failures = 0;
    while (sets < 500) {
        int n = std::uniform_int_distribution<int>(5, 12)(rng);
        double density = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
        std::vector<std::pair<int, int>> chords;
        for (int a = 0; a < n; ++a)
            for (int b = a + 2; b < n; ++b)
                if (!(a == 0 && b == n - 1) && std::bernoulli_distribution(density)(rng)) chords.emplace_back(a, b);
        auto p = cycle_plus_chords(n, chords);
        auto ce = contractible_edges(p);
        if (ce.size() < 2) continue;
        std::shuffle(ce.begin(), ce.end(), rng);
        ce.resize(std::uniform_int_distribution<size_t>(2, std::min<size_t>(ce.size(), 5))(rng));
        std::sort(ce.begin(), ce.end());
        std::optional<GraphPair> first;
        do {
            GraphPair cur = p;
            bool defined = true;
            for (const auto& [a, b] : ce) {
                auto x = resolve_vertex(cur, a), y = resolve_vertex(cur, b);
                if (x == y || !is_contractible(cur, x, y)) {
                    defined = false;
                    break;
                }
                cur = contract_pair(cur, x, y);
            }
            if (!defined) continue;
            ++perms;
            if (!first) first = cur;
            else if (!(cur == *first)) ++failures;
        } while (std::next_permutation(ce.begin(), ce.end()));
        ++sets;
    }
    return {failures == 0, std::to_string(sets) + " sets, " + std::to_string(perms) + " defined permutations, " +
                               std::to_string(failures) + " failures"};
}

// independent check of a maximal clique: edge clique iff one tree edge is on every member,
// otherwise each member uses exactly two of three edges at one vertex
bool clique_ok(const Representation& rep, const std::set<std::string, NaturalLess>& names)
{
    auto cls = classify_max_clique(rep, names);
    bool common = false;
    for (int e = 0; e < rep.tree.num_edges() && !common; ++e)
        common = std::all_of(names.begin(), names.end(), [&](const std::string& id) { return rep.path(id).has_edge(e); });
    if (common) return cls.kind == CliqueClass::EdgeClique;
    if (cls.kind != CliqueClass::ClawClique) return false;
    std::vector<int> arms;
    for (int a : cls.arms) {
        int e = rep.tree.edge_id(cls.center, a);
        if (e < 0) return false;
        arms.push_back(e);
    }
    return std::all_of(names.begin(), names.end(), [&](const std::string& id) {
        int used = 0;
        for (int e : arms) used += rep.path(id).has_edge(e) ? 1 : 0;
        return used == 2;
    });
}

Result pie_law()
{
    Result r;
    for (int k = 3; k <= 8; ++k) {
        auto g = derive_graphs(pie(k));
        std::set<IdEdge> cycle;
        for (int m = 0; m < k; ++m) {
            std::string a = std::to_string(m), b = std::to_string((m + 1) % k);
            cycle.insert(NaturalLess{}(a, b) ? IdEdge{a, b} : IdEdge{b, a});
        }
        if (as_set(g.ept) != cycle || !g.enpt.empty()) r.pass = false;
    }
    std::mt19937 rng(777);
    int cliques = 0, failures = 0;
    for (int fuzz = 0; fuzz < 1000; ++fuzz) {
        auto rep = random_rep(rng, std::uniform_int_distribution<int>(3, 14)(rng), std::uniform_int_distribution<int>(2, 9)(rng));
        auto ids = rep.ids();
        std::map<std::string, int> at;
        for (size_t k = 0; k < ids.size(); ++k) at[ids[k]] = static_cast<int>(k);
        std::vector<std::set<int>> adj(ids.size());
        for (const auto& [a, b] : derive_graphs(rep).ept) {
            adj[at[a]].insert(at[b]);
            adj[at[b]].insert(at[a]);
        }
        std::set<int> all;
        for (size_t k = 0; k < ids.size(); ++k) all.insert(static_cast<int>(k));
        std::vector<std::set<int>> found;
        bron_kerbosch(adj, {}, all, {}, found);
        for (const auto& c : found) {
            if (c.size() < 2) continue;
            std::set<std::string, NaturalLess> names;
            for (int v : c) names.insert(ids[v]);
            ++cliques;
            if (!clique_ok(rep, names)) ++failures;
        }
    }
    if (failures) r.pass = false;
    r.detail = "pies k=3..8, 1000 fuzz cases, " + std::to_string(cliques) + " maximal cliques, " + std::to_string(failures) +
               " failures";
    return r;
}

Result c6_rigidity()
{
    auto pairs = cycle_pairs_up_to_symmetry(6);
    std::vector<int> status(pairs.size(), 0); // 1 rep found and fine, 2 violation
    SearchBounds b;
    b.max_tree_edges = 10;
    parallel_for(pairs.size(), [&](size_t i) {
        bool found = false;
        // a minimal (P3) rep exists whenever any (P3) rep does: minifying never creates a common edge
        search_representations(pairs[i], b, true, [&](const Representation& r) {
            found = satisfies_p3(r).ok;
            return !found;
        });
        if (!found) return;
        status[i] = (satisfies_p1(pairs[i]) && satisfies_p2(pairs[i])) ? 1 : 2;
    });
    int yes = static_cast<int>(std::count(status.begin(), status.end(), 1));
    int bad = static_cast<int>(std::count(status.begin(), status.end(), 2));
    return {bad == 0, std::to_string(pairs.size()) + " pairs, " + std::to_string(yes + bad) + " with a (P3) rep, " +
                          std::to_string(bad) + " contractible or with a K4P4"};
}

Result solver_oracle_agreement()
{
    Result r;
    std::ostringstream os;
    for (int n = 5; n <= 7; ++n) {
        auto pairs = cycle_pairs_up_to_symmetry(n);
        std::atomic<int> yes{0}, disagree{0};
        std::mutex mu;
        std::vector<std::string> notes;
        parallel_for(pairs.size(), [&](size_t i) {
            const auto& p = pairs[i];
            std::set<std::string> forms;
            search_representations(p, SearchBounds{}, true, [&](const Representation& rep) {
                if (satisfies_p3(rep).ok) forms.insert(canonical_form(rep));
                return true;
            });
            auto out = solve(p);
            bool ok = out.rep.has_value() == !forms.empty();
            if (out.rep) {
                ok = ok && forms.count(canonical_form(*out.rep)) && is_minimal(*out.rep) && validate(*out.rep, p);
                if (n >= 6) ok = ok && is_broken_planar_tour_with_cherries(*out.rep);
                ++yes;
            }
            if (!ok) {
                ++disagree;
                std::lock_guard<std::mutex> lock(mu);
                std::string red;
                for (const auto& [a, c] : p.red_edges()) red += " " + a + c;
                notes.push_back("n=" + std::to_string(n) + " red" + red);
            }
        });
        if (disagree) r.pass = false;
        if (n > 5) os << "; ";
        os << "n=" << n << ": " << pairs.size() << " pairs, " << yes << " yes, " << disagree << " disagreements";
        for (const auto& s : notes) os << ", " << s;
    }
    r.detail = os.str();
    return r;
}

Result determinism()
{
    auto pool = yes_instances(2024, 400, 10);
    std::vector<GraphPair> twins, singles, rest;
    for (const auto& p : pool) {
        bool single = false, twin = false;
        for (const auto& k : find_k4p4(p)) {
            if (!k.bracket) continue;
            single = true;
            if (p.size() < 7) continue;
            auto t = twin_of(p, k);
            if (!t) continue;
            for (const auto& w : find_k4p4(p))
                if (w.bracket && *w.bracket == *t->bracket) twin = true;
        }
        (twin ? twins : single ? singles : rest).push_back(p);
    }
    std::vector<GraphPair> chosen;
    for (auto* bucket : {&twins, &singles, &rest})
        for (size_t k = 0; k < bucket->size() && k < 17 && chosen.size() < 50; ++k) chosen.push_back((*bucket)[k]);
    for (auto* bucket : {&rest, &singles, &twins})
        for (size_t k = 17; k < bucket->size() && chosen.size() < 50; ++k) chosen.push_back((*bucket)[k]);
    int orders = 0, mismatches = 0, capped = 0;
    const int cap = 20000;
    for (const auto& p : chosen) {
        std::optional<std::string> first;
        int runs = for_each_pick_order([&](const SolverOptions& o) { return solve(p, o); },
                                       [&](const SolveOutcome& out) {
                                           if (!out.rep) {
                                               ++mismatches;
                                               return;
                                           }
                                           auto f = canonical_form(*out.rep);
                                           if (!first) first = f;
                                           else if (f != *first) ++mismatches;
                                       },
                                       cap);
        orders += runs;
        if (runs >= cap) ++capped;
    }
    size_t nt = std::min<size_t>(twins.size(), 17), ns = std::min<size_t>(singles.size(), 17);
    Result r;
    r.pass = chosen.size() == 50 && mismatches == 0 && capped == 0 && nt > 0 && ns > 0;
    r.detail = std::to_string(chosen.size()) + " instances (" + std::to_string(nt) + " with twin K4P4s, " + std::to_string(ns) +
               " with a single K4P4), " + std::to_string(orders) + " pick orders, " + std::to_string(mismatches) + " mismatches";
    return r;
}

SimpleGraph random_graph(std::mt19937& rng)
{
    int n = std::uniform_int_distribution<int>(2, 7)(rng);
    std::vector<std::string> ids;
    for (int k = 0; k < n; ++k) ids.push_back("h" + std::to_string(k));
    SimpleGraph g(ids);
    double density = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::bernoulli_distribution(density)(rng)) g.add_edge(a, b);
    if (g.num_edges() == 0) g.add_edge(0, 1);
    return g;
}

bool size_formulas(const SimpleGraph& h)
{
    auto inst = build_reduction_pair(h);
    int m = h.num_edges();
    if (inst.pair.size() != 6 * m || static_cast<int>(inst.K.size()) != 3 * m) return false;
    if (static_cast<int>(inst.segments.size()) != m || static_cast<int>(inst.pair.blue_edges().size()) != 6 * m) return false;
    std::set<std::string> seen;
    for (const auto& s : inst.segments)
        for (const auto& v : s) seen.insert(v);
    if (static_cast<int>(seen.size()) != 6 * m) return false;
    size_t q = 0;
    for (size_t i = 0; i < inst.Q.size(); ++i) {
        if (inst.Q[i].size() != h.adj[i].size()) return false;
        q += inst.Q[i].size();
    }
    if (static_cast<int>(q) != 2 * m) return false;
    std::set<std::string> k(inst.K.begin(), inst.K.end());
    auto cyc = blue_cycle(inst.pair);
    int parity = k.count(inst.pair.id(cyc[0])) ? 0 : 1;
    for (size_t i = 0; i < cyc.size(); ++i)
        if ((k.count(inst.pair.id(cyc[i])) == 1) != ((static_cast<int>(i) + parity) % 2 == 0)) return false;
    for (const auto& a : inst.K)
        for (const auto& b : inst.K)
            if (a != b && !inst.pair.is_red(a, b)) return false;
    return true;
}

Result reduction_sanity()
{
    Result r;
    std::ostringstream os;
    SimpleGraph k3({"a", "b", "c"});
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    auto inst3 = build_reduction_pair(k3);
    auto rep = build_rep_from_coloring(inst3, lift_coloring(inst3, *three_colorable(k3)));
    bool rep_ok = represents(rep, inst3.pair) && rep.tree.max_degree() <= 3;
    os << "K3: rep " << (rep_ok ? "represents the pair" : "FAILS") << " with max degree " << rep.tree.max_degree() << " on "
       << rep.tree.num_edges() << " tree edges; ";

    SimpleGraph k4({"a", "b", "c", "d"});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
    auto inst4 = build_reduction_pair(k4);
    bool colorable = three_colorable(component_graph(inst4.pair, inst4.K)).has_value();
    SearchBounds b;
    b.max_tree_edges = 14;
    b.max_degree = 3;
    bool found = false;
    search_representations(inst4.pair, b, false, [&](const Representation&) {
        found = true;
        return false;
    });
    os << "K4: component graph " << (colorable ? "3-colorable" : "not 3-colorable") << ", search with max degree 3 and <= "
       << b.max_tree_edges << " tree edges " << (found ? "found a rep" : "found none") << " (bounded evidence only); ";

    std::mt19937 rng(99);
    int formula_ok = 0;
    for (int k = 0; k < 20; ++k) formula_ok += size_formulas(random_graph(rng)) ? 1 : 0;
    os << "size formulas " << formula_ok << "/20";
    r.pass = rep_ok && !colorable && !found && formula_ok == 20;
    r.detail = os.str();
    return r;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Result()> run;
    };
    std::vector<Criterion> all = {
        {1, "five-path example", five_path_reproduction},
        {2, "C5 uniqueness", [] { return unique_c5(cycle_plus_chords(5, {{1, 3}, {1, 4}}), eptn_c5()); }},
        {3, "C5 with K4P4", [] { return unique_c5(cycle_plus_chords(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}}), c5_with_k4p4()); }},
        {4, "n = 4 constants", small_constants},
        {5, "order irrelevance", order_irrelevance},
        {6, "pie/hole law", pie_law},
        {7, "C6 rigidity", c6_rigidity},
        {8, "solver/oracle agreement", solver_oracle_agreement},
        {9, "determinism under choice", determinism},
        {10, "reduction sanity", reduction_sanity},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("threw ") + e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d %s: %s (%s; %.1fs)\n", c.id, c.name, r.pass ? "PASS" : "FAIL", r.detail.c_str(), s);
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    return failed ? 1 : 0;
}
