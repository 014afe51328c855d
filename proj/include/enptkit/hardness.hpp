#pragma once

#include "enptkit/host_model.hpp"
#include "enptkit/pair_model.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace enptkit {

struct ReductionInstance {
    SimpleGraph H;
    GraphPair pair;
    std::vector<std::string> K;                        // primed vertices, cycle order
    std::vector<std::array<std::string, 6>> segments;  // S_k
    std::vector<std::vector<std::string>> Q;           // Q_i, increasing k
};

// one vertex per component of G - S, named by its naturally smallest member
SimpleGraph component_graph(const GraphPair& pair, const std::vector<std::string>& S);

ReductionInstance build_reduction_pair(const SimpleGraph& H);

using Coloring = std::map<std::string, int, NaturalLess>;

// coloring keys are component_graph(inst.pair, inst.K) ids, values 1..3
Representation build_rep_from_coloring(const ReductionInstance& inst, const Coloring& coloring);

// lifts a 3-coloring of H (indexed like H.ids) to the component graph
Coloring lift_coloring(const ReductionInstance& inst, const std::vector<int>& h_colors);

// colors 1..3 indexed like g.ids
std::optional<std::vector<int>> three_colorable(const SimpleGraph& g);

} // namespace enptkit
