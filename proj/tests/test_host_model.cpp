#include "doctest.h"
#include "support.hpp"

#include "enptkit/error.hpp"
#include "enptkit/minify.hpp"

using namespace enptkit;
using namespace fixtures;

namespace {

std::set<IdEdge> ids(std::initializer_list<const char*> pairs)
{
    std::set<IdEdge> out;
    for (const char* p : pairs) out.insert({std::string(1, p[0]), std::string(1, p[1])});
    return out;
}

} // namespace

TEST_CASE("five-path example derived graphs")
{
    auto rep = five_paths();
    auto g = derive_graphs(rep);
    CHECK(as_set(g.ept) == ids({"12", "14", "23", "34", "35", "45"}));
    auto vpt = ids({"12", "14", "23", "34", "35", "45", "13", "24"});
    CHECK(as_set(g.vpt) == vpt);
    CHECK(as_set(g.enpt) == ids({"35"}));
}

TEST_CASE("tree construction rejects non-trees")
{
    CHECK_THROWS_AS(HostTree({"a", "b", "c"}, {{"a", "b"}}), Error);
    CHECK_THROWS_AS(HostTree({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}), Error);
    HostTree t({"a", "b"}, {{"a", "b"}});
    CHECK_THROWS_AS(tree_path(t, "a", "a"), Error);
    CHECK_THROWS_AS(tree_path(t, "a", "z"), Error);
}

TEST_CASE("relation agrees with the naive oracle on random reps")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 300; ++round) {
        auto rep = random_rep(rng, 4 + round % 9, 2 + round % 6);
        auto naive = naive_derive(as_sequences(rep));
        auto g = derive_graphs(rep);
        REQUIRE(as_set(g.vpt) == naive.vpt);
        REQUIRE(as_set(g.ept) == naive.ept);
        REQUIRE(as_set(g.enpt) == naive.enpt);
    }
}

TEST_CASE("pies: every EPT max clique of size 3 is a claw clique at the center")
{
    for (int k = 3; k <= 8; ++k) {
        auto rep = pie(k);
        auto g = derive_graphs(rep);
        CHECK(g.ept.size() == static_cast<size_t>(k));
        CHECK(g.enpt.empty());
        if (k == 3) {
            auto c = classify_max_clique(rep, {"0", "1", "2"});
            CHECK(c.kind == CliqueClass::ClawClique);
            CHECK(rep.tree.label(c.center) == "c");
        } else {
            auto c = classify_max_clique(rep, {"0", "1"});
            CHECK(c.kind == CliqueClass::EdgeClique);
        }
    }
}

TEST_CASE("clique classification matches a brute-force check")
{
    std::mt19937 rng(11);
    int classified = 0;
    for (int round = 0; round < 600; ++round) {
        auto rep = random_rep(rng, 5 + round % 8, 3 + round % 6);
        auto ids = rep.ids();
        auto g = derive_graphs(rep);
        std::vector<std::set<int>> adj(ids.size());
        std::map<std::string, int> at;
        for (size_t k = 0; k < ids.size(); ++k) at[ids[k]] = static_cast<int>(k);
        for (const auto& [a, b] : g.ept) {
            adj[at[a]].insert(at[b]);
            adj[at[b]].insert(at[a]);
        }
        std::set<int> all;
        for (size_t k = 0; k < ids.size(); ++k) all.insert(static_cast<int>(k));
        std::vector<std::set<int>> cliques;
        bron_kerbosch(adj, {}, all, {}, cliques);
        for (const auto& c : cliques) {
            if (c.size() < 2) continue;
            std::set<std::string, NaturalLess> names;
            for (int v : c) names.insert(ids[v]);
            auto cls = classify_max_clique(rep, names);
            // edge clique iff some tree edge lies on every member
            bool common = false;
            for (int e = 0; e < rep.tree.num_edges() && !common; ++e)
                common = std::all_of(names.begin(), names.end(), [&](const std::string& id) { return rep.path(id).has_edge(e); });
            REQUIRE(common == (cls.kind == CliqueClass::EdgeClique));
            if (!common) {
                REQUIRE(cls.kind == CliqueClass::ClawClique);
                std::vector<int> arms;
                for (int arm : cls.arms) arms.push_back(rep.tree.edge_id(cls.center, arm));
                for (int a : arms) REQUIRE(a >= 0);
                for (const auto& id : names) {
                    int used = 0;
                    for (int a : arms) used += rep.path(id).has_edge(a) ? 1 : 0;
                    REQUIRE(used == 2);
                }
            }
            ++classified;
        }
    }
    CHECK(classified > 1000);
}

TEST_CASE("P3 detects a red pie")
{
    CHECK(satisfies_p3(pie(3)).ok);
    CHECK(satisfies_p3(five_paths()).ok);
    auto g = derived_pair(pie(3));
    CHECK(g.red_edges().size() == 3);
}

TEST_CASE("union of non-splitting paths")
{
    auto rep = five_paths();
    auto u = union_path(rep.tree, rep.path("3"), rep.path("5"));
    CHECK(u.labels(rep.tree).size() == 6);
    CHECK_THROWS_AS(union_path(rep.tree, rep.path("1"), rep.path("2")), Error);
}
