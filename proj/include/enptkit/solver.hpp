#pragma once

#include "enptkit/host_model.hpp"
#include "enptkit/pair_model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace enptkit {

struct SolveOutcome {
    enum Kind { Rep, No } kind = No;
    std::string reason; // precondition | validation | structure
    std::string detail;
    std::optional<Representation> rep;

    static SolveOutcome yes(Representation r) { return {Rep, {}, {}, std::move(r)}; }
    static SolveOutcome no(std::string reason, std::string detail) { return {No, std::move(reason), std::move(detail), std::nullopt}; }
};

// picks one of `count` admissible options (contractible edge or K4P4); default picks 0
using Chooser = std::function<int(int count)>;

struct SolverOptions {
    Chooser choose;
    // true: uncontract exactly as listed, without split_shared_ends
    bool literal = false;
};

SolveOutcome solve(const GraphPair& pair, const SolverOptions& opts = {});
SolveOutcome solve_small(const GraphPair& pair);
SolveOutcome find_min_rep_p2_p3(const GraphPair& pair, const SolverOptions& opts = {});
SolveOutcome find_min_rep_p3(const GraphPair& pair, const SolverOptions& opts = {});

Representation adjust_endpoint(const Representation& rep, const GraphPair& g, const std::string& p, const std::string& w);
Representation make_cherry(const Representation& rep, const std::string& p, const std::string& q);
// derived EPT and ENPT equal the pair
bool represents(const Representation& rep, const GraphPair& pair);
bool validate(const Representation& rep, const GraphPair& pair);

// cherries for red pairs {p,x} whose paths end at a common vertex without splitting
Representation split_shared_ends(const Representation& rep, const GraphPair& g, const std::string& p);

struct SolveChecks {
    bool minimal = false;
    bool p3 = false;
    bool structure = false;
};

SolveChecks run_checks(const Representation& rep, const GraphPair& pair);

// canonical small-cycle representations, keyed by position 0..n-1 on the cycle
struct CycleTemplate {
    int n;
    std::vector<std::pair<int, int>> chords;
    std::vector<std::string> tree_vertices;
    std::vector<LabelEdge> tree_edges;
    LabelPathMap paths;
};

const std::vector<CycleTemplate>& cycle_templates();
Representation instantiate(const CycleTemplate& t);

// every minimal representation of the n = 4 pairs, as canonical_form strings
struct StoredForms {
    int n;
    std::vector<std::pair<int, int>> chords;
    std::vector<std::string> forms;
};

const std::vector<StoredForms>& stored_small_forms();

} // namespace enptkit
