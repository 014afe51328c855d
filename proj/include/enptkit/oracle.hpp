#pragma once

#include "enptkit/host_model.hpp"
#include "enptkit/pair_model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace enptkit {

struct SearchBounds {
    int max_tree_edges = 10;
    std::optional<int> max_degree;
    std::optional<int> max_paths_len;
};

// unlabeled trees on `vertices` vertices, labelled t0..t{n-1}, one per isomorphism class
const std::vector<HostTree>& free_trees(int vertices);

// invariant under tree isomorphisms that fix path ids
std::string canonical_form(const Representation& rep);
std::string canonical_tree_form(const HostTree& tree);

std::vector<Representation> enumerate_representations(const GraphPair& pair, const SearchBounds& b);
std::vector<Representation> brute_min_rep(const GraphPair& pair, const SearchBounds& b);

// no size guard; stops early when `visit` returns false. minimal_only prunes
// to reps whose leaves and degree-2 vertices are all path endpoints, then checks is_minimal
void search_representations(const GraphPair& pair, const SearchBounds& b, bool minimal_only,
                            const std::function<bool(const Representation&)>& visit);

// C_n plus every chord subset, one per orbit of the dihedral group
std::vector<GraphPair> cycle_pairs_up_to_symmetry(int n);

// min(hardware threads, ENPTKIT_THREADS, innermost ThreadCap)
int thread_budget();

// caps thread_budget() on the current thread while alive
class ThreadCap {
public:
    explicit ThreadCap(int cap);
    ~ThreadCap();
    ThreadCap(const ThreadCap&) = delete;
    ThreadCap& operator=(const ThreadCap&) = delete;

private:
    int saved_;
};

// body(k) for k in [0, n); workers run with ThreadCap(1)
void parallel_for(size_t n, const std::function<void(size_t)>& body);

} // namespace enptkit
