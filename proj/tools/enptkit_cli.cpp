#include "enptkit/dual_tour.hpp"
#include "enptkit/hardness.hpp"
#include "enptkit/io.hpp"
#include "enptkit/minify.hpp"
#include "enptkit/oracle.hpp"
#include "enptkit/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace enptkit;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kMalformed = 2;

struct Common {
    std::string input;
    std::string out;
    std::string dot;
};

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
    f << text;
}

void emit(const Common& c, const Json& j) { write_text(c.out, j.dump(2) + "\n"); }

Json load_raw(const std::string& path)
{
    if (path.empty()) throw Error(ErrorKind::ParseError, "--input is required");
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return parse_json(ss.str());
    }
    return read_json_file(path);
}

// solve output is accepted wherever a representation is
Json load(const std::string& path)
{
    Json j = load_raw(path);
    if (j.is_object() && j.contains("outcome") && j.contains("representation")) return Json(j["representation"]);
    return j;
}

Json no(const std::string& reason, const std::string& detail = {})
{
    Json j{{"outcome", "no"}, {"reason", reason}};
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

std::vector<std::pair<int, int>> red_chords(const GraphPair& p)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v] : p.red_edges()) out.emplace_back(p.index(u), p.index(v));
    return out;
}

int cmd_derive(const Common& c)
{
    Representation rep = rep_from_json(load(c.input));
    auto g = derive_graphs(rep);
    if (!c.dot.empty()) write_text(c.dot, to_dot(derived_pair(rep)));
    emit(c, to_json(g));
    return kOk;
}

int cmd_solve(const Common& c)
{
    GraphPair pair = pair_from_json(load(c.input));
    auto out = solve(pair);
    if (out.kind == SolveOutcome::No) {
        emit(c, to_json(out, pair));
        return kNo;
    }
    if (!c.dot.empty()) write_text(c.dot, to_dot(*out.rep));
    emit(c, to_json(out, pair));
    return kOk;
}

int cmd_check(const Common& c, std::vector<std::string> what)
{
    Json in = load(c.input);
    Json res = Json::object();
    bool all_ok = true;
    auto want = [&](const std::string& k) { return what.empty() || std::find(what.begin(), what.end(), k) != what.end(); };
    auto record = [&](const std::string& k, bool v) {
        res[k] = v;
        all_ok = all_ok && v;
    };
    std::optional<Representation> rep;
    GraphPair pair({}, {}, {});
    if (in.contains("tree")) {
        rep = rep_from_json(in);
        pair = derived_pair(*rep);
    } else {
        pair = pair_from_json(in);
    }
    for (const auto& k : what)
        if (k != "p1" && k != "p2" && k != "p3" && k != "minimal" && k != "structure")
            throw Error(ErrorKind::SchemaError, "unknown check " + k);
    bool ham = is_hamiltonian_pair(pair);
    res["hamiltonian"] = ham;
    if (ham && want("p1")) record("p1", satisfies_p1(pair));
    if (ham && want("p2")) record("p2", satisfies_p2(pair));
    if (rep) {
        if (want("p3")) {
            auto w = satisfies_p3(*rep);
            record("p3", w.ok);
            if (!w.ok && w.witness) res["p3_witness"] = std::vector<std::string>(w.witness->begin(), w.witness->end());
        }
        if (want("minimal")) record("minimal", is_minimal(*rep));
        if (want("structure")) record("structure", ham && is_broken_planar_tour_with_cherries(*rep));
    } else if (want("p3") || want("minimal") || want("structure")) {
        if (!what.empty()) throw Error(ErrorKind::SchemaError, "p3, minimal and structure need a representation");
    }
    if (!c.dot.empty()) write_text(c.dot, rep ? to_dot(*rep) : to_dot(pair));
    if (!all_ok) {
        Json j = no("check");
        j["checks"] = res;
        emit(c, j);
        return kNo;
    }
    emit(c, Json{{"outcome", "ok"}, {"checks", res}});
    return kOk;
}

int cmd_oracle(const Common& c, int max_edges, int max_degree, bool emit_all)
{
    GraphPair pair = pair_from_json(load(c.input));
    SearchBounds b;
    b.max_tree_edges = max_edges;
    if (max_degree > 0) b.max_degree = max_degree;
    auto reps = emit_all ? enumerate_representations(pair, b) : brute_min_rep(pair, b);
    Json list = Json::array();
    for (const auto& r : reps) {
        Json e{{"canonical", canonical_form(r)}, {"p3", satisfies_p3(r).ok}, {"representation", to_json(r)}};
        list.push_back(e);
    }
    Json j{{"bound", {{"max_tree_edges", max_edges}}}, {"count", reps.size()}, {"representations", list}};
    if (max_degree > 0) j["bound"]["max_degree"] = max_degree;
    if (reps.empty()) {
        Json n = no("no representation within bound");
        n["bound"] = j["bound"];
        emit(c, n);
        return kNo;
    }
    if (!c.dot.empty()) write_text(c.dot, to_dot(reps.front()));
    emit(c, j);
    return kOk;
}

int cmd_gen_reduction(const Common& c)
{
    SimpleGraph H = graph_from_json(load(c.input));
    auto inst = build_reduction_pair(H);
    if (!c.dot.empty()) write_text(c.dot, to_dot(inst.pair));
    emit(c, to_json(inst));
    return kOk;
}

int cmd_verify_reduction(const Common& c, const std::string& coloring_path)
{
    Json in = load(c.input);
    SimpleGraph H = graph_from_json(in.contains("H") ? in.at("H") : in);
    auto inst = build_reduction_pair(H);
    if (in.contains("pair") && !(pair_from_json(in.at("pair")) == inst.pair))
        throw Error(ErrorKind::SchemaError, "pair does not match the construction for H");
    SimpleGraph comp = component_graph(inst.pair, inst.K);
    Coloring col;
    if (!coloring_path.empty()) {
        col = coloring_from_json(read_json_file(coloring_path));
    } else {
        auto hc = three_colorable(H);
        if (!hc) {
            emit(c, no("structure", "H is not 3-colorable, so no representation with maximum degree 3 exists"));
            return kNo;
        }
        col = lift_coloring(inst, *hc);
    }
    Representation rep = build_rep_from_coloring(inst, col);
    bool ok = represents(rep, inst.pair);
    Json j{{"outcome", ok ? "rep" : "no"},
           {"represents", ok},
           {"max_degree", rep.tree.max_degree()},
           {"vertices", inst.pair.size()},
           {"clique", inst.K.size()},
           {"components", comp.size()},
           {"representation", to_json(rep)}};
    if (!c.dot.empty()) write_text(c.dot, to_dot(rep));
    emit(c, j);
    return ok ? kOk : kNo;
}

int cmd_census(const Common& c, int n, int max_edges, bool with_oracle, int sample, unsigned seed)
{
    std::vector<GraphPair> pairs;
    if (sample > 0) {
        if (n < 4) throw Error(ErrorKind::WrongSize, "census needs n >= 4");
        std::mt19937 rng(seed);
        std::vector<std::pair<int, int>> chords;
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
        std::bernoulli_distribution coin(0.3);
        for (int s = 0; s < sample; ++s) {
            std::vector<std::pair<int, int>> pick;
            for (const auto& ch : chords)
                if (coin(rng)) pick.push_back(ch);
            pairs.push_back(cycle_plus_chords(n, pick));
        }
    } else {
        pairs = cycle_pairs_up_to_symmetry(n);
    }
    std::vector<Json> rows(pairs.size());
    std::vector<char> yes(pairs.size(), 0), agree(pairs.size(), 1);
    parallel_for(pairs.size(), [&](size_t k) {
        const auto& p = pairs[k];
        auto out = solve(p);
        Json row{{"red", red_chords(p)}};
        std::string form;
        if (out.rep) {
            yes[k] = 1;
            form = canonical_form(*out.rep);
            row["canonical"] = form;
            row["representation"] = to_json(*out.rep);
        }
        if (with_oracle) {
            SearchBounds b;
            b.max_tree_edges = max_edges;
            bool found = false, match = false;
            search_representations(p, b, true, [&](const Representation& r) {
                if (!satisfies_p3(r).ok) return true;
                found = true;
                match = match || canonical_form(r) == form;
                return true;
            });
            agree[k] = out.rep ? match : !found;
            row["oracle_agrees"] = static_cast<bool>(agree[k]);
        }
        rows[k] = std::move(row);
    });
    Json table = Json::array();
    size_t n_yes = 0, n_dis = 0;
    for (size_t k = 0; k < pairs.size(); ++k) {
        n_yes += yes[k];
        n_dis += !agree[k];
        if (yes[k] || !agree[k]) table.push_back(rows[k]);
    }
    Json j{{"n", n}, {"pairs", pairs.size()}, {"yes", n_yes}, {"rows", table}};
    if (with_oracle) j["disagreements"] = n_dis;
    if (sample > 0) j["seed"] = seed;
    emit(c, j);
    return n_dis == 0 ? kOk : kNo;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal edge-intersecting path representations of ENPT holes"};
    app.require_subcommand(1);
    Common c;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,--pair", c.input, "input JSON file, - for stdin");
        sub->add_option("--out", c.out, "output JSON file (default stdout)");
        sub->add_option("--dot", c.dot, "also write a DOT rendering here");
    };

    auto* derive = app.add_subcommand("derive", "VPT, EPT and ENPT of a representation");
    add_common(derive);

    auto* solve_cmd = app.add_subcommand("solve", "minimal (P3) representation of a pair, or NO");
    add_common(solve_cmd);

    std::vector<std::string> what;
    auto* check = app.add_subcommand("check", "p1/p2 on a pair; p3/minimal/structure on a representation");
    add_common(check);
    check->add_option("--what", what, "checks to run (default: all that apply)");

    int max_edges = 10, max_degree = 0;
    bool emit_all = false;
    auto* oracle = app.add_subcommand("oracle", "exhaustive search on small host trees");
    add_common(oracle);
    oracle->add_option("--max-edges", max_edges, "largest host tree, in edges")->check(CLI::Range(1, 12));
    oracle->add_option("--max-degree", max_degree, "cap on host tree degree");
    oracle->add_flag("--emit-all", emit_all, "every representation, not only minimal ones");

    auto* gen = app.add_subcommand("gen-reduction", "pair built from a graph H for the 3-coloring reduction");
    add_common(gen);

    std::string coloring;
    auto* verify = app.add_subcommand("verify-reduction", "build and check the degree-3 representation from a coloring");
    add_common(verify);
    verify->add_option("--coloring", coloring, "component coloring JSON {component: 1..3}");

    int census_n = 6, sample = 0;
    unsigned seed = 1;
    bool census_oracle = false;
    auto* census = app.add_subcommand("census", "solve every pair (G, C_n) up to symmetry");
    census->add_option("--n", census_n, "cycle length")->check(CLI::Range(3, 40));
    census->add_option("--out", c.out, "output JSON file (default stdout)");
    census->add_option("--max-edges", max_edges, "oracle host tree bound")->check(CLI::Range(1, 12));
    census->add_flag("--oracle", census_oracle, "cross-check every pair against the oracle");
    census->add_option("--sample", sample, "random pairs instead of full enumeration");
    census->add_option("--seed", seed, "seed for --sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*derive) return cmd_derive(c);
        if (*solve_cmd) return cmd_solve(c);
        if (*check) return cmd_check(c, what);
        if (*oracle) return cmd_oracle(c, max_edges, max_degree, emit_all);
        if (*gen) return cmd_gen_reduction(c);
        if (*verify) return cmd_verify_reduction(c, coloring);
        if (*census) return cmd_census(c, census_n, max_edges, census_oracle, sample, seed);
    } catch (const Error& e) {
        std::cerr << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
