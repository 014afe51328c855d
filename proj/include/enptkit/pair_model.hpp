#pragma once

#include "enptkit/error.hpp"
#include "enptkit/ids.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace enptkit {

using IdEdge = std::pair<std::string, std::string>;

// (G, G') on one vertex set; blue = E(G'), red = E(G) \ E(G')
class GraphPair {
public:
    GraphPair() = default;
    GraphPair(std::vector<std::string> vertices, const std::vector<IdEdge>& edges, const std::vector<IdEdge>& blue);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(int v) const { return ids_[v]; }
    int index(std::string_view id) const;
    bool contains(std::string_view id) const { return index_.find(id) != index_.end(); }

    bool has_edge(int a, int b) const { return color_[a][b] != 0; }
    bool is_blue(int a, int b) const { return color_[a][b] == 2; }
    bool is_red(int a, int b) const { return color_[a][b] == 1; }
    bool has_edge(std::string_view a, std::string_view b) const { return has_edge(index(a), index(b)); }
    bool is_blue(std::string_view a, std::string_view b) const { return is_blue(index(a), index(b)); }
    bool is_red(std::string_view a, std::string_view b) const { return is_red(index(a), index(b)); }

    std::vector<int> neighbors(int v) const;
    std::vector<int> blue_neighbors(int v) const;
    std::vector<IdEdge> edges() const;
    std::vector<IdEdge> blue_edges() const;
    std::vector<IdEdge> red_edges() const;

    bool operator==(const GraphPair& o) const { return ids_ == o.ids_ && color_ == o.color_; }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int, std::less<>> index_;
    std::vector<std::vector<std::uint8_t>> color_; // 0 none, 1 red, 2 blue
};

// vertices "0".."n-1", blue cycle 0-1-...-(n-1)-0, plus red chords
GraphPair cycle_plus_chords(int n, const std::vector<std::pair<int, int>>& red_chords);

// vertex order along the blue Hamiltonian cycle, starting at the first id and
// stepping to its naturally smaller blue neighbour; throws NotHamiltonianPair
std::vector<int> blue_cycle(const GraphPair& pair);
bool is_hamiltonian_pair(const GraphPair& pair);

enum class TriangleClass { RedTriangle, BRR, BBR, BlueTriangle };
const char* to_string(TriangleClass c);

GraphPair induced_subpair(const GraphPair& pair, const std::vector<std::string>& subset);
TriangleClass classify_triangle(const GraphPair& pair, const std::array<std::string, 3>& tri);
bool is_contractible(const GraphPair& pair, std::string_view a, std::string_view b);
std::vector<IdEdge> contractible_edges(const GraphPair& pair);
GraphPair contract_pair(const GraphPair& pair, std::string_view a, std::string_view b);
GraphPair contract_set(const GraphPair& pair, const std::vector<IdEdge>& edges);
// (G/e, G'/e) without the contractibility guard
GraphPair merge_vertices(const GraphPair& pair, std::string_view a, std::string_view b);
// current vertex whose merged name contains the original label
std::string resolve_vertex(const GraphPair& pair, const std::string& original);

struct K4P4Witness {
    std::array<std::string, 4> quad;                   // cycle order
    std::optional<std::string> isolated;               // j with N_G(j) = K, n >= 6
    std::optional<std::array<std::string, 4>> bracket; // [i, i+1, i+2, i+3], i+1 isolated
};

std::vector<K4P4Witness> find_k4p4(const GraphPair& pair);
std::optional<K4P4Witness> twin_of(const GraphPair& pair, const K4P4Witness& k);
GraphPair aggressive_contract(const GraphPair& pair, const K4P4Witness& k);

bool satisfies_p1(const GraphPair& pair);
bool satisfies_p2(const GraphPair& pair);

// vertex one step from `from` along the cycle, away from `away`
std::string cycle_step(const GraphPair& pair, const std::string& from, const std::string& away);

struct SimpleGraph {
    std::vector<std::string> ids;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> edges; // insertion order

    SimpleGraph() = default;
    explicit SimpleGraph(std::vector<std::string> vertex_ids);

    int size() const { return static_cast<int>(ids.size()); }
    bool adjacent(int a, int b) const;
    int num_edges() const;
    void add_edge(int a, int b);
};

} // namespace enptkit
