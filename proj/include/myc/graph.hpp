#ifndef MYC_GRAPH_HPP
#define MYC_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace myc {

using VertexId = int;

// Sorted, duplicate-free set of vertex ids.
using VertexSet = std::vector<VertexId>;

inline VertexSet make_set(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// Finite simple undirected graph over ids 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<VertexId, VertexId>> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative order");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: edge endpoint out of range");
            if (u == v) throw std::invalid_argument("graph: self-loop");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        mat_.assign(static_cast<size_t>(n_) * n_, 0);
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            mat_[static_cast<size_t>(u) * n_ + v] = 1;
            mat_[static_cast<size_t>(v) * n_ + u] = 1;
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(VertexId u, VertexId v) const {
        return mat_[static_cast<size_t>(u) * n_ + v] != 0;
    }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<char> mat_;
};

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph complement(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

inline void check_members(const Graph& g, const VertexSet& s, const char* who) {
    for (VertexId v : s)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument(std::string(who) + ": vertex outside V(G)");
}

// N(S): union of neighborhoods of members of S. May intersect S.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    check_members(g, s, "neighborhood");
    std::vector<char> hit(g.order(), 0);
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v)) hit[w] = 1;
    VertexSet r;
    for (int v = 0; v < g.order(); ++v)
        if (hit[v]) r.push_back(v);
    return r;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    check_members(g, s, "is_independent");
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

namespace detail {

// Max independent set branch and bound: branch on a max-degree candidate,
// prune when current + remaining candidates cannot beat the incumbent.
inline void mis_rec(const Graph& g, std::vector<VertexId>& cand, VertexSet& cur,
                    VertexSet& best) {
    if (cur.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
        best = cur;
        return;
    }
    VertexId pick = cand[0];
    int best_deg = -1;
    for (VertexId v : cand) {
        int deg = 0;
        for (VertexId w : cand)
            if (w != v && g.adjacent(v, w)) ++deg;
        if (deg > best_deg) {
            best_deg = deg;
            pick = v;
        }
    }
    // include pick
    std::vector<VertexId> rest;
    for (VertexId v : cand)
        if (v != pick && !g.adjacent(v, pick)) rest.push_back(v);
    cur.push_back(pick);
    mis_rec(g, rest, cur, best);
    cur.pop_back();
    // exclude pick
    std::vector<VertexId> without;
    for (VertexId v : cand)
        if (v != pick) without.push_back(v);
    mis_rec(g, without, cur, best);
}

}  // namespace detail

inline VertexSet maximum_independent_set(const Graph& g) {
    if (g.order() < 1)
        throw std::invalid_argument("independence_number: empty graph");
    std::vector<VertexId> cand(g.order());
    for (int v = 0; v < g.order(); ++v) cand[v] = v;
    VertexSet cur, best;
    detail::mis_rec(g, cand, cur, best);
    return make_set(best);
}

inline int independence_number(const Graph& g) {
    return static_cast<int>(maximum_independent_set(g).size());
}

inline VertexSet maximum_clique(const Graph& g) {
    return maximum_independent_set(complement(g));
}

inline int clique_number(const Graph& g) {
    return static_cast<int>(maximum_clique(g).size());
}

}  // namespace myc

#endif
