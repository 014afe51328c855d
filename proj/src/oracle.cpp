#include "enptkit/oracle.hpp"
#include "enptkit/minify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace enptkit {

namespace {
thread_local int local_cap = 0;
}

int thread_budget()
{
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("ENPTKIT_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) hw = std::min(hw, cap);
    }
    if (local_cap > 0) hw = std::min(hw, local_cap);
    return hw;
}

ThreadCap::ThreadCap(int cap) : saved_(local_cap) { local_cap = cap; }
ThreadCap::~ThreadCap() { local_cap = saved_; }

void parallel_for(size_t n, const std::function<void(size_t)>& body)
{
    int threads = std::min<int>(thread_budget(), static_cast<int>(n));
    if (threads <= 1) {
        for (size_t k = 0; k < n; ++k) body(k);
        return;
    }
    std::mutex mu;
    size_t next = 0;
    std::exception_ptr failure;
    auto worker = [&]() {
        ThreadCap cap(1);
        for (;;) {
            size_t k;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= n || failure) return;
                k = next++;
            }
            try {
                body(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

// AHU encoding rooted at v; edge labels are prefixed to the child's code
std::string encode(const HostTree& t, int v, int parent, const std::vector<std::string>& edge_label)
{
    std::vector<std::string> kids;
    for (int w : t.neighbors(v)) {
        if (w == parent) continue;
        kids.push_back("[" + edge_label[t.edge_id(v, w)] + "]" + encode(t, w, v, edge_label));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::vector<int> centers(const HostTree& t)
{
    int n = t.size();
    if (n <= 2) {
        std::vector<int> all;
        for (int v = 0; v < n; ++v) all.push_back(v);
        return all;
    }
    std::vector<int> deg(n), layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            deg[v] = 0;
            for (int w : t.neighbors(v))
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string canonical_with_labels(const HostTree& t, const std::vector<std::string>& edge_label)
{
    std::string best;
    bool first = true;
    for (int c : centers(t)) {
        auto s = encode(t, c, -1, edge_label);
        if (first || s < best) best = s;
        first = false;
    }
    return best;
}

// rooted level sequences, successor rule of Beyer and Hedetniemi
std::vector<std::vector<int>> rooted_level_sequences(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> L(n);
    for (int i = 0; i < n; ++i) L[i] = i + 1;
    for (;;) {
        out.push_back(L);
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (L[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int j = p - 1; j >= 0; --j)
            if (L[j] == L[p] - 1) {
                q = j;
                break;
            }
        for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    }
    return out;
}

HostTree tree_from_levels(const std::vector<int>& L)
{
    int n = static_cast<int>(L.size());
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("t" + std::to_string(i));
    std::vector<LabelEdge> es;
    std::vector<int> last_at(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        if (i > 0) es.emplace_back(vs[last_at[L[i] - 1]], vs[i]);
        last_at[L[i]] = i;
    }
    return HostTree(vs, es);
}

struct Bits {
    std::uint64_t w[2] = {0, 0};
    void set(int k) { w[k >> 6] |= std::uint64_t(1) << (k & 63); }
    bool any() const { return w[0] | w[1]; }
    Bits operator&(const Bits& o) const
    {
        Bits r;
        r.w[0] = w[0] & o.w[0];
        r.w[1] = w[1] & o.w[1];
        return r;
    }
};

struct TreeTable {
    const HostTree* tree = nullptr;
    std::vector<std::pair<int, int>> ends;
    std::vector<std::vector<int>> verts;
    std::vector<int> len;
    std::vector<std::array<Bits, 3>> compat; // by relation 0 parallel, 1 blue, 2 red
    std::vector<int> orbit_reps;
    std::vector<int> must_cover; // vertices of degree <= 2
};

TreeTable make_table(const HostTree& t)
{
    TreeTable tab;
    tab.tree = &t;
    int n = t.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            tab.ends.emplace_back(u, v);
            tab.verts.push_back(t.vertex_path(u, v));
        }
    int P = static_cast<int>(tab.ends.size());
    std::vector<TreePath> paths;
    for (int k = 0; k < P; ++k) {
        paths.emplace_back(t, tab.verts[k]);
        tab.len.push_back(paths.back().length());
    }
    tab.compat.assign(P, {});
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b) {
            auto r = relation(t, paths[a], paths[b]);
            int idx = r == PathRelation::Parallel ? 0 : r == PathRelation::NonSplitting ? 1 : 2;
            tab.compat[a][idx].set(b);
        }
    std::set<std::string> seen;
    for (int k = 0; k < P; ++k) {
        std::vector<std::string> lab(t.num_edges(), "");
        for (int e : paths[k].edges()) lab[e] = "x";
        if (seen.insert(canonical_with_labels(t, lab)).second) tab.orbit_reps.push_back(k);
    }
    for (int v = 0; v < n; ++v)
        if (t.degree(v) <= 2) tab.must_cover.push_back(v);
    return tab;
}

const TreeTable& table_for(const HostTree& t)
{
    static std::mutex mu;
    static std::map<const HostTree*, TreeTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&t);
    if (it == cache.end()) it = cache.emplace(&t, make_table(t)).first;
    return it->second;
}

struct Search {
    const TreeTable& tab;
    const GraphPair& pair;
    const std::vector<int>& order; // pair vertex per depth
    std::vector<std::vector<int>> req;
    bool minimal_only;
    std::optional<int> max_len;
    std::vector<int> choice;
    std::vector<int> cover;
    int uncovered = 0;
    const std::function<bool(const Representation&)>& visit;
    bool stop = false;

    void touch(int v, int d)
    {
        if (tab.tree->degree(v) > 2) return;
        if (cover[v] == 0 && d > 0) --uncovered;
        cover[v] += d;
        if (cover[v] == 0 && d < 0) ++uncovered;
    }

    void run(int depth, std::vector<Bits>& dom)
    {
        int n = static_cast<int>(order.size());
        if (stop) return;
        if (depth == n) {
            emit();
            return;
        }
        if (minimal_only && uncovered > 2 * (n - depth)) return;
        auto try_path = [&](int k) {
            if (max_len && tab.len[k] > *max_len) return;
            std::vector<Bits> next(dom.begin(), dom.end());
            for (int j = depth + 1; j < n; ++j) {
                next[j] = next[j] & tab.compat[k][req[depth][j]];
                if (!next[j].any()) return;
            }
            choice[depth] = k;
            auto [u, v] = tab.ends[k];
            if (minimal_only) {
                touch(u, 1);
                touch(v, 1);
            }
            run(depth + 1, next);
            if (minimal_only) {
                touch(u, -1);
                touch(v, -1);
            }
        };
        if (depth == 0) {
            for (int k : tab.orbit_reps) {
                if (stop) return;
                try_path(k);
            }
            return;
        }
        for (int word = 0; word < 2; ++word) {
            std::uint64_t bits = dom[depth].w[word];
            while (bits && !stop) {
                int k = word * 64 + __builtin_ctzll(bits);
                bits &= bits - 1;
                try_path(k);
            }
        }
    }

    void emit()
    {
        const HostTree& t = *tab.tree;
        if (minimal_only) {
            if (uncovered > 0) return;
            std::vector<char> used(t.num_edges(), 0);
            for (int k : choice) {
                const auto& vs = tab.verts[k];
                for (size_t i = 0; i + 1 < vs.size(); ++i) used[t.edge_id(vs[i], vs[i + 1])] = 1;
            }
            if (std::find(used.begin(), used.end(), 0) != used.end()) return;
        }
        Representation rep;
        rep.tree = t;
        for (size_t d = 0; d < order.size(); ++d) rep.paths.emplace(pair.id(order[d]), TreePath(rep.tree, tab.verts[choice[d]]));
        if (minimal_only && !is_minimal(rep)) return;
        if (!visit(rep)) stop = true;
    }
};

void search_tree(const GraphPair& pair, const HostTree& t, const std::vector<int>& order, bool minimal_only,
                 const SearchBounds& b, const std::function<bool(const Representation&)>& visit)
{
    const TreeTable& tab = table_for(t);
    int n = static_cast<int>(order.size());
    if (minimal_only && static_cast<int>(tab.must_cover.size()) > 2 * n) return;
    Search s{tab, pair, order, {}, minimal_only, b.max_paths_len, std::vector<int>(n, -1), std::vector<int>(t.size(), 0),
             static_cast<int>(tab.must_cover.size()), visit};
    s.req.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            if (a != c) s.req[a][c] = pair.is_blue(order[a], order[c]) ? 1 : pair.has_edge(order[a], order[c]) ? 2 : 0;
    Bits full;
    for (size_t k = 0; k < tab.ends.size(); ++k) full.set(static_cast<int>(k));
    std::vector<Bits> dom(n, full);
    s.run(0, dom);
}

std::vector<int> search_order(const GraphPair& pair)
{
    if (is_hamiltonian_pair(pair)) return blue_cycle(pair);
    // otherwise BFS over G so each new vertex has an earlier neighbour when possible
    std::vector<int> order;
    std::vector<char> seen(pair.size(), 0);
    for (int s = 0; s < pair.size(); ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (size_t h = order.size() - 1; h < order.size(); ++h)
            for (int w : pair.neighbors(order[h]))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    return order;
}

void guard(const GraphPair& pair, const SearchBounds& b)
{
    if (pair.size() > 8) throw Error(ErrorKind::TooLarge, "oracle handles at most 8 vertices");
    if (b.max_tree_edges > 12) throw Error(ErrorKind::TooLarge, "max_tree_edges above 12");
}

std::vector<Representation> collect(const GraphPair& pair, const SearchBounds& b, bool minimal_only)
{
    std::map<std::string, Representation> found;
    search_representations(pair, b, minimal_only, [&](const Representation& r) {
        found.emplace(canonical_form(r), r);
        return true;
    });
    std::vector<Representation> out;
    for (auto& [k, r] : found) out.push_back(std::move(r));
    return out;
}

} // namespace

const std::vector<HostTree>& free_trees(int vertices)
{
    static std::mutex mu;
    static std::map<int, std::vector<HostTree>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(vertices);
    if (it != cache.end()) return it->second;
    std::map<std::string, HostTree> uniq;
    if (vertices >= 1)
        for (const auto& L : rooted_level_sequences(vertices)) {
            HostTree t = tree_from_levels(L);
            uniq.emplace(canonical_tree_form(t), std::move(t));
        }
    std::vector<HostTree> out;
    for (auto& [k, t] : uniq) out.push_back(std::move(t));
    return cache.emplace(vertices, std::move(out)).first->second;
}

std::string canonical_tree_form(const HostTree& tree)
{
    return canonical_with_labels(tree, std::vector<std::string>(tree.num_edges()));
}

std::string canonical_form(const Representation& rep)
{
    const auto& t = rep.tree;
    std::vector<std::string> lab(t.num_edges());
    for (const auto& [id, p] : rep.paths)
        for (int e : p.edges()) lab[e] += std::to_string(id.size()) + ":" + id;
    return canonical_with_labels(t, lab);
}

void search_representations(const GraphPair& pair, const SearchBounds& b, bool minimal_only,
                            const std::function<bool(const Representation&)>& visit)
{
    auto order = search_order(pair);
    std::vector<const HostTree*> trees;
    for (int m = 1; m <= b.max_tree_edges; ++m)
        for (const auto& t : free_trees(m + 1))
            if (!b.max_degree || t.max_degree() <= *b.max_degree) trees.push_back(&t);

    int threads = std::min<int>(thread_budget(), static_cast<int>(trees.size()));
    if (threads <= 1) {
        bool go = true;
        auto wrapped = [&](const Representation& r) { return go = visit(r); };
        for (const HostTree* t : trees) {
            if (!go) break;
            search_tree(pair, *t, order, minimal_only, b, wrapped);
        }
        return;
    }
    // per-tree buffers keep the visit order identical to the sequential run
    std::vector<std::vector<Representation>> buf(trees.size());
    std::mutex mu;
    size_t next = 0;
    auto worker = [&]() {
        for (;;) {
            size_t k;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= trees.size()) return;
                k = next++;
            }
            search_tree(pair, *trees[k], order, minimal_only, b, [&](const Representation& r) {
                buf[k].push_back(r);
                return true;
            });
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& v : buf)
        for (auto& r : v)
            if (!visit(r)) return;
}

std::vector<GraphPair> cycle_pairs_up_to_symmetry(int n)
{
    if (n < 3) throw Error(ErrorKind::WrongSize, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
    int m = static_cast<int>(chords.size());
    if (m > 24) throw Error(ErrorKind::TooLarge, "too many chord subsets");
    std::map<std::pair<int, int>, int> index;
    for (int k = 0; k < m; ++k) index[chords[k]] = k;
    // each symmetry as a permutation of chord indices
    std::vector<std::vector<int>> perms;
    for (int r = 0; r < n; ++r)
        for (int flip = 0; flip < 2; ++flip) {
            std::vector<int> perm(m);
            for (int k = 0; k < m; ++k) {
                auto img = [&](int x) { return flip ? ((r - x) % n + n) % n : (x + r) % n; };
                int a = img(chords[k].first), b = img(chords[k].second);
                perm[k] = index.at({std::min(a, b), std::max(a, b)});
            }
            perms.push_back(std::move(perm));
        }
    std::vector<GraphPair> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
        bool least = true;
        for (const auto& perm : perms) {
            std::uint32_t im = 0;
            for (int k = 0; k < m; ++k)
                if (mask >> k & 1) im |= std::uint32_t(1) << perm[k];
            if (im < mask) {
                least = false;
                break;
            }
        }
        if (!least) continue;
        std::vector<std::pair<int, int>> pick;
        for (int k = 0; k < m; ++k)
            if (mask >> k & 1) pick.push_back(chords[k]);
        out.push_back(cycle_plus_chords(n, pick));
    }
    return out;
}

std::vector<Representation> enumerate_representations(const GraphPair& pair, const SearchBounds& b)
{
    guard(pair, b);
    return collect(pair, b, false);
}

std::vector<Representation> brute_min_rep(const GraphPair& pair, const SearchBounds& b)
{
    guard(pair, b);
    return collect(pair, b, true);
}

} // namespace enptkit
