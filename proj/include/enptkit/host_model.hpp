#pragma once

#include "enptkit/error.hpp"
#include "enptkit/ids.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace enptkit {

using LabelEdge = std::pair<std::string, std::string>;

class HostTree {
public:
    HostTree() = default;
    // throws InvalidTree unless the edges form a spanning tree on the vertices
    HostTree(std::vector<std::string> vertices, const std::vector<LabelEdge>& edges);

    int size() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int index(std::string_view label) const;
    bool contains(std::string_view label) const { return index_.find(label) != index_.end(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int edge_id(int u, int v) const;
    const std::pair<int, int>& edge(int id) const { return edges_[id]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<LabelEdge> label_edges() const;
    std::vector<int> leaves() const;
    std::vector<int> vertex_path(int u, int v) const;
    std::string fresh_label(std::string_view prefix) const;
    std::uint64_t fingerprint() const { return fingerprint_; }

    bool operator==(const HostTree& o) const { return fingerprint_ == o.fingerprint_ && labels_ == o.labels_ && edges_ == o.edges_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_edge_;
    std::vector<std::pair<int, int>> edges_;
    std::uint64_t fingerprint_ = 0;
};

// a non-trivial simple path; equality ignores orientation
class TreePath {
public:
    TreePath() = default;
    TreePath(const HostTree& tree, std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<int>& edges() const { return edges_; }
    int front() const { return vertices_.front(); }
    int back() const { return vertices_.back(); }
    int length() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int eid) const;
    bool has_vertex(int v) const;
    bool is_endpoint(int v) const { return v == front() || v == back(); }
    // first edge walked from endpoint w
    int tail_at(const HostTree& tree, int w) const;
    std::uint64_t tree_fingerprint() const { return tree_fp_; }
    std::vector<std::string> labels(const HostTree& tree) const;

    bool operator==(const TreePath& o) const { return edges_ == o.edges_ && tree_fp_ == o.tree_fp_; }

private:
    std::vector<int> vertices_;
    std::vector<int> edges_; // sorted edge ids
    std::uint64_t tree_fp_ = 0;
};

using PathMap = std::map<std::string, TreePath, NaturalLess>;
using LabelPathMap = std::map<std::string, std::vector<std::string>, NaturalLess>;

struct Representation {
    HostTree tree;
    PathMap paths;

    std::vector<std::string> ids() const;
    const TreePath& path(const std::string& id) const;
};

Representation make_representation(HostTree tree, const LabelPathMap& paths);
LabelPathMap label_paths(const Representation& rep);
Representation rebuild(const std::vector<std::string>& vertices, const std::vector<LabelEdge>& edges, const LabelPathMap& paths);

enum class PathRelation { Parallel, NonSplitting, Splitting };
const char* to_string(PathRelation r);

TreePath tree_path(const HostTree& tree, std::string_view u, std::string_view v);
TreePath tree_path(const HostTree& tree, int u, int v);
std::vector<int> split_vertices(const HostTree& tree, const TreePath& p, const TreePath& q);
PathRelation relation(const HostTree& tree, const TreePath& p, const TreePath& q);
TreePath union_path(const HostTree& tree, const TreePath& p, const TreePath& q);

using IdEdge = std::pair<std::string, std::string>;

struct DerivedGraphs {
    std::vector<std::string> ids;
    std::vector<IdEdge> vpt;
    std::vector<IdEdge> ept;
    std::vector<IdEdge> enpt;
};

DerivedGraphs derive_graphs(const Representation& rep);

struct CliqueClass {
    enum Kind { EdgeClique, ClawClique, NotAClique } kind = NotAClique;
    std::pair<int, int> edge{-1, -1};
    int center = -1;
    std::array<int, 3> arms{-1, -1, -1};
};

CliqueClass classify_max_clique(const Representation& rep, const std::set<std::string, NaturalLess>& clique);

struct P3Check {
    bool ok = true;
    std::optional<std::array<std::string, 3>> witness;
};

P3Check satisfies_p3(const Representation& rep);

// ids of paths containing tree edge e
std::vector<std::string> paths_through(const Representation& rep, int eid);

} // namespace enptkit
