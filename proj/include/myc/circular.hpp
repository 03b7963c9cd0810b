#ifndef MYC_CIRCULAR_HPP
#define MYC_CIRCULAR_HPP

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "myc/chromatic.hpp"
#include "myc/graph.hpp"
#include "myc/mycielski.hpp"

namespace myc {

// Total map V(G) -> Z_k under the circular constraint d <= |f(u)-f(v)| <= k-d.
struct KdColoring {
    int k = 0, d = 0;
    std::vector<int> assignment;  // by VertexId
};

// The equivalent class view: k classes, every d cyclically consecutive classes
// unioning to an independent set. Empty classes allowed.
struct KdPartition {
    int k = 0, d = 0;
    std::vector<VertexSet> classes;
};

inline Graph circulant_target(int k, int d) {
    if (d < 1 || k < 2 * d)
        throw std::invalid_argument("circulant_target: need k >= 2d >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (j - i >= d && j - i <= k - d) edges.emplace_back(i, j);
    return Graph(k, std::move(edges));
}

inline bool verify_coloring(const Graph& g, const KdColoring& c) {
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw std::invalid_argument("verify_coloring: assignment not total on V(G)");
    for (int f : c.assignment)
        if (f < 0 || f >= c.k)
            throw std::invalid_argument("verify_coloring: color out of Z_k");
    for (auto [u, v] : g.edges()) {
        int diff = std::abs(c.assignment[u] - c.assignment[v]);
        if (diff < c.d || diff > c.k - c.d) return false;
    }
    return true;
}

inline KdPartition coloring_to_partition(const KdColoring& c) {
    if (c.k < 1) throw std::invalid_argument("coloring_to_partition: invalid k");
    for (int f : c.assignment)
        if (f < 0 || f >= c.k)
            throw std::invalid_argument("coloring_to_partition: color out of Z_k");
    KdPartition p{c.k, c.d, std::vector<VertexSet>(c.k)};
    for (size_t v = 0; v < c.assignment.size(); ++v)
        p.classes[c.assignment[v]].push_back(static_cast<VertexId>(v));
    return p;
}

inline KdColoring partition_to_coloring(const KdPartition& p) {
    if (static_cast<int>(p.classes.size()) != p.k)
        throw std::invalid_argument("partition_to_coloring: class count != k");
    size_t n = 0;
    for (const auto& cls : p.classes) n += cls.size();
    KdColoring c{p.k, p.d, std::vector<int>(n, -1)};
    for (int i = 0; i < p.k; ++i)
        for (VertexId v : p.classes[i]) {
            if (v < 0 || static_cast<size_t>(v) >= n || c.assignment[v] != -1)
                throw std::invalid_argument(
                    "partition_to_coloring: classes do not partition V(G)");
            c.assignment[v] = i;
        }
    return c;
}

// Window-independence check of the partition definition.
inline bool valid_partition(const Graph& g, const KdPartition& p) {
    KdColoring c = partition_to_coloring(p);  // throws on structural defects
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw std::invalid_argument("valid_partition: partition does not cover V(G)");
    for (int j = 0; j < p.k; ++j) {
        VertexSet window;
        for (int o = 0; o < p.d; ++o)
            window = set_union(window, p.classes[(j + o) % p.k]);
        if (!is_independent(g, window)) return false;
    }
    return true;
}

namespace detail {

inline uint64_t full_mask(int k) {
    return k >= 64 ? ~0ull : (1ull << k) - 1;
}

// Backtracking homomorphism search into the circulant target with
// forward-checking domains and most-constrained-vertex ordering.
struct KdSearch {
    const Graph& g;
    int k, d;
    uint64_t conflict_of_color(int c) const {
        // colors at circular distance < d from c
        uint64_t m = 0;
        for (int c2 = 0; c2 < k; ++c2) {
            int diff = std::abs(c - c2);
            if (diff < d || diff > k - d) m |= 1ull << c2;
        }
        return m;
    }

    std::vector<uint64_t> conflict;
    std::vector<uint64_t> domain;
    std::vector<int> assign;
    // optional normal-form constraint: if pre-image v takes twin_class, its
    // twin must take it too
    std::vector<int> twin_of;   // v -> twin id, or -1
    std::vector<int> twin_src;  // twin id -> v, or -1
    int twin_class = -1;

    KdSearch(const Graph& g_, int k_, int d_) : g(g_), k(k_), d(d_) {
        if (k > 64)
            throw std::invalid_argument("kd search: k > 64 unsupported at desk scale");
        conflict.resize(k);
        for (int c = 0; c < k; ++c) conflict[c] = conflict_of_color(c);
        domain.assign(g.order(), full_mask(k));
        assign.assign(g.order(), -1);
        twin_of.assign(g.order(), -1);
        twin_src.assign(g.order(), -1);
    }

    std::vector<std::pair<int, uint64_t>> trail;

    bool narrow(int v, uint64_t mask) {
        uint64_t nd = domain[v] & mask;
        if (nd == domain[v]) return true;
        trail.emplace_back(v, domain[v]);
        domain[v] = nd;
        return nd != 0;
    }

    bool place(int v, int c) {
        assign[v] = c;
        trail.emplace_back(v, domain[v]);
        domain[v] = 1ull << c;
        for (int w : g.neighbors(v))
            if (assign[w] == -1 && !narrow(w, ~conflict[c])) return false;
        if (twin_class >= 0) {
            if (twin_of[v] != -1 && c == twin_class && assign[twin_of[v]] == -1 &&
                !narrow(twin_of[v], 1ull << twin_class))
                return false;
            if (twin_src[v] != -1 && c != twin_class && assign[twin_src[v]] == -1 &&
                !narrow(twin_src[v], ~(1ull << twin_class)))
                return false;
        }
        return true;
    }

    void undo(size_t mark, const std::vector<int>& placed) {
        while (trail.size() > mark) {
            auto [v, m] = trail.back();
            trail.pop_back();
            domain[v] = m;
        }
        for (int v : placed) assign[v] = -1;
    }

    int pick() const {
        int best = -1, best_pc = 65, best_deg = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (assign[v] != -1) continue;
            int pc = std::popcount(domain[v]);
            if (pc < best_pc || (pc == best_pc && g.degree(v) > best_deg)) {
                best = v;
                best_pc = pc;
                best_deg = g.degree(v);
            }
        }
        return best;
    }

    bool solve() {
        int v = pick();
        if (v == -1) return true;
        uint64_t dom = domain[v];
        while (dom) {
            int c = std::countr_zero(dom);
            dom &= dom - 1;
            size_t mark = trail.size();
            if (place(v, c) && solve()) return true;
            undo(mark, {v});
        }
        return false;
    }
};

}  // namespace detail

// Exact (k,d)-colorability with a witness. Symmetry is broken only by the
// rotation/reflection group of the circular constraint: one maximum-clique
// vertex is pinned to 0 and a second clique vertex is restricted to the lower
// half-circle. For d = 1 the constraint is plain properness, so the whole
// clique is pinned.
inline std::optional<KdColoring> is_kd_colorable(const Graph& g, int k, int d,
                                                 const VertexSet* clique = nullptr) {
    if (d < 1 || k < 2 * d)
        throw std::invalid_argument("is_kd_colorable: need k >= 2d >= 2");
    if (g.size() == 0)
        return KdColoring{k, d, std::vector<int>(g.order(), 0)};

    VertexSet q = clique ? *clique : maximum_clique(g);
    // a clique of size w needs w pairwise d-separated points on the k-cycle
    if (static_cast<long long>(q.size()) * d > k) return std::nullopt;

    detail::KdSearch s(g, k, d);
    if (d == 1) {
        for (size_t i = 0; i < q.size(); ++i)
            if (!s.place(q[i], static_cast<int>(i))) return std::nullopt;
    } else if (!q.empty()) {
        if (!s.place(q[0], 0)) return std::nullopt;
        if (q.size() >= 2) {
            uint64_t half = 0;
            for (int c = d; c <= k / 2; ++c) half |= 1ull << c;
            if (!s.narrow(q[1], half)) return std::nullopt;
        }
    }
    if (!s.solve()) return std::nullopt;
    return KdColoring{k, d, s.assign};
}

// Optimal (k,d), witness, and the complete list of rejected smaller reduced
// ratios within the k <= |V|, d <= alpha(G) candidate bounds.
struct ChiCCertificate {
    int optimal_k = 0, optimal_d = 0;
    KdColoring witness;
    std::vector<std::pair<int, int>> rejected;
    int alpha = 0;
    int chi = 0;
    bool edgeless = false;
};

inline std::vector<std::pair<int, int>> chi_c_candidates(int n, int alpha) {
    std::vector<std::pair<int, int>> cands;
    for (int d = 1; d <= alpha; ++d)
        for (int k = 2 * d; k <= n; ++k)
            if (std::gcd(k, d) == 1) cands.emplace_back(k, d);
    std::sort(cands.begin(), cands.end(), [](auto a, auto b) {
        long long lhs = static_cast<long long>(a.first) * b.second;
        long long rhs = static_cast<long long>(b.first) * a.second;
        if (lhs != rhs) return lhs < rhs;
        return a.first < b.first;
    });
    return cands;
}

inline ChiCCertificate circular_chromatic_number(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("circular_chromatic_number: empty graph");
    ChiCCertificate cert;
    if (g.size() == 0) {
        // outside the k >= 2d domain; reported by convention
        cert.edgeless = true;
        cert.optimal_k = cert.optimal_d = 1;
        cert.witness = KdColoring{1, 1, std::vector<int>(g.order(), 0)};
        cert.alpha = g.order();
        cert.chi = 1;
        return cert;
    }
    cert.alpha = independence_number(g);
    cert.chi = chromatic_number(g);
    VertexSet clique = maximum_clique(g);
    for (auto [k, d] : chi_c_candidates(g.order(), cert.alpha)) {
        if (auto w = is_kd_colorable(g, k, d, &clique)) {
            cert.optimal_k = k;
            cert.optimal_d = d;
            cert.witness = *w;
            return cert;
        }
        cert.rejected.emplace_back(k, d);
    }
    throw std::logic_error("circular_chromatic_number: no candidate feasible");
}

// delta(x): union of the 2d-1 classes centered on x's class.
inline VertexSet d_field(const KdPartition& p, VertexId x) {
    int j = -1;
    for (int i = 0; i < p.k; ++i)
        if (set_contains(p.classes[i], x)) {
            j = i;
            break;
        }
    if (j == -1) throw std::invalid_argument("d_field: vertex not covered");
    VertexSet r;
    for (int o = -(p.d - 1); o <= p.d - 1; ++o)
        r = set_union(r, p.classes[((j + o) % p.k + p.k) % p.k]);
    return r;
}

// Diagnostics for partitions claimed optimal: no empty class, and every class
// has a neighbor in the class d further along.
struct Lemma1Report {
    std::vector<int> empty_classes;
    std::vector<int> broken_links;  // i with N(X_i) disjoint from X_{i+d}
    bool clean() const { return empty_classes.empty() && broken_links.empty(); }
};

inline Lemma1Report check_lemma1(const KdPartition& p, const Graph& g) {
    Lemma1Report rep;
    for (int i = 0; i < p.k; ++i) {
        if (p.classes[i].empty()) {
            rep.empty_classes.push_back(i);
            continue;
        }
        VertexSet n = neighborhood(g, p.classes[i]);
        if (set_intersection(n, p.classes[(i + p.d) % p.k]).empty())
            rep.broken_links.push_back(i);
    }
    return rep;
}

// Normal-form diagnostics: class 0 holds the last root (alone, in the strong
// form), and some middle class keeps every pre-image vertex with its twin.
struct NormalFormReport {
    bool root_in_class0 = false;  // u_t in X_0
    bool root_alone = false;      // X_0 = {u_t}
    std::vector<int> twin_indices;  // i in [d, k-d] satisfying condition 2
    bool condition2() const { return !twin_indices.empty(); }
    bool strong() const { return root_alone && condition2(); }
    bool weak() const { return root_in_class0 && condition2(); }
};

inline NormalFormReport check_normal_form(const KdPartition& p, const NamedGraph& gt) {
    if (gt.t < 1)
        throw std::invalid_argument("check_normal_form: needs t >= 1");
    NormalFormReport rep;
    VertexId ut = gt.id_of(VertexName{NameKind::Root, gt.t, {}});
    rep.root_in_class0 = set_contains(p.classes.at(0), ut);
    rep.root_alone = rep.root_in_class0 && p.classes[0].size() == 1;
    for (int i = p.d; i <= p.k - p.d; ++i) {
        bool ok = true;
        for (const auto& x : gt.names) {
            if (x.total() > gt.t - 1) continue;  // not a vertex of M^{t-1}
            VertexId v = gt.id_of(x);
            if (!set_contains(p.classes[i], v)) continue;
            if (!set_contains(p.classes[i], gt.id_of(twin_name(x, gt.t)))) {
                ok = false;
                break;
            }
        }
        if (ok) rep.twin_indices.push_back(i);
    }
    return rep;
}

// Searches directly for a (k,d)-partition in the strong normal form:
// X_0 = {u_t}, and one chosen middle class i keeps twins together.
inline std::optional<KdPartition> find_normal_form(const NamedGraph& gt, int k, int d) {
    if (gt.t < 1)
        throw std::invalid_argument("find_normal_form: needs t >= 1");
    VertexId ut = gt.id_of(VertexName{NameKind::Root, gt.t, {}});
    for (int i = d; i <= k - d; ++i) {
        detail::KdSearch s(gt.graph, k, d);
        s.twin_class = i;
        for (const auto& x : gt.names) {
            if (x.total() > gt.t - 1) continue;
            s.twin_of[gt.id_of(x)] = gt.id_of(twin_name(x, gt.t));
            s.twin_src[gt.id_of(twin_name(x, gt.t))] = gt.id_of(x);
        }
        bool ok = s.place(ut, 0);
        for (int v = 0; ok && v < gt.graph.order(); ++v)
            if (v != ut) ok = s.narrow(v, ~1ull);  // color 0 reserved for u_t
        if (ok && s.solve()) {
            KdColoring c{k, d, s.assign};
            return coloring_to_partition(c);
        }
    }
    return std::nullopt;
}

}  // namespace myc

#endif
