#pragma once

#include "enptkit/host_model.hpp"
#include "enptkit/pair_model.hpp"

#include <string>
#include <vector>

namespace enptkit {

struct MinifyOp {
    enum Kind { Contract, TrimTail } kind = Contract;
    LabelEdge edge;      // tree edge by vertex labels
    std::string path_id; // TrimTail only

    static MinifyOp contract(LabelEdge e) { return {Contract, std::move(e), {}}; }
    static MinifyOp trim(std::string id, LabelEdge e) { return {TrimTail, std::move(e), std::move(id)}; }
};

std::string describe(const MinifyOp& op);

Representation apply_minify(const Representation& rep, const MinifyOp& op);
Representation union_in_rep(const Representation& rep, const std::string& p, const std::string& q);
bool equivalent(const Representation& a, const Representation& b);
// every applicable single op, in the fixed order used by minimize
std::vector<MinifyOp> candidate_ops(const Representation& rep);
bool is_minimal(const Representation& rep);

struct MinimizeResult {
    Representation rep;
    std::vector<MinifyOp> trace;
};

MinimizeResult minimize_traced(const Representation& rep);
Representation minimize(const Representation& rep);

// derived pair: E(G) = EPT, blue = ENPT
GraphPair derived_pair(const Representation& rep);

} // namespace enptkit
