#pragma once

#include "enptkit/host_model.hpp"
#include "enptkit/pair_model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace enptkit {

// chords of a Hamiltonian pair pairwise non-crossing along the blue cycle
bool is_outerplanar(const GraphPair& pair);

// C plus chords added shortest-first, then lexicographically, while no two cross
GraphPair maximal_outerplanar_subgraph(const GraphPair& pair);

struct Face {
    std::vector<std::string> boundary; // cycle order
    int red_edges = 0;
};

struct WeakDualTree {
    std::vector<Face> faces;
    std::vector<std::pair<int, int>> adjacency; // faces sharing a chord
    std::vector<IdEdge> shared_chord;           // parallel to adjacency

    int degree(int f) const;
};

WeakDualTree weak_dual_tree(const GraphPair& opg);

Representation build_planar_tour(const GraphPair& pair);

// every tree edge cuts the cyclic leaf order into two intervals
bool is_dfs_leaf_order(const HostTree& tree, const std::vector<int>& cyclic_leaves);

// removes cherries whose leaves each end exactly one path; returns the stripped rep
Representation strip_cherries(const Representation& rep, int* removed = nullptr);

bool is_broken_planar_tour_with_cherries(const Representation& rep);

} // namespace enptkit
