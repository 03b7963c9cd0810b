#ifndef MYC_ROOT_FOREST_HPP
#define MYC_ROOT_FOREST_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "myc/graph.hpp"
#include "myc/vertex_name.hpp"

namespace myc {

// Digraph vertex: a root name, optionally in the primed clone namespace
// (printed v... instead of u...).
struct DVertex {
    VertexName name;
    bool primed = false;

    std::string str() const {
        std::string s = name.str();
        if (primed) s[0] = 'v';
        return s;
    }

    friend auto operator<=>(const DVertex&, const DVertex&) = default;
};

enum class ForestFlavor { FCircle, F, Derived };

struct RootDigraph {
    std::vector<DVertex> verts;  // canonical order
    std::map<DVertex, int> index;
    std::vector<std::pair<int, int>> arcs;  // sorted
    std::vector<std::vector<int>> out, in;
    int t = 0;
    ForestFlavor flavor = ForestFlavor::Derived;

    int order() const { return static_cast<int>(verts.size()); }

    int id_of(const DVertex& v) const {
        auto it = index.find(v);
        if (it == index.end())
            throw std::invalid_argument("root digraph: unknown vertex " + v.str());
        return it->second;
    }
};

using CutSet = std::vector<DVertex>;

namespace detail {

inline RootDigraph make_digraph(std::vector<DVertex> verts,
                                const std::vector<std::pair<DVertex, DVertex>>& arcs,
                                int t, ForestFlavor flavor) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    RootDigraph d;
    d.t = t;
    d.flavor = flavor;
    d.verts = std::move(verts);
    for (size_t i = 0; i < d.verts.size(); ++i)
        d.index[d.verts[i]] = static_cast<int>(i);
    for (const auto& [a, b] : arcs)
        d.arcs.emplace_back(d.index.at(a), d.index.at(b));
    std::sort(d.arcs.begin(), d.arcs.end());
    d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
    d.out.assign(d.verts.size(), {});
    d.in.assign(d.verts.size(), {});
    for (auto [a, b] : d.arcs) {
        d.out[a].push_back(b);
        d.in[b].push_back(a);
    }
    return d;
}

// All root names u_i^{i_1...i_n} with given exact total, level >= 1, suffix
// length >= min_suffix.
inline std::vector<VertexName> root_names_with_total(int total, int min_suffix) {
    std::vector<VertexName> out;
    std::vector<int> suffix;
    auto rec = [&](auto&& self, int level, int remaining) -> void {
        if (remaining == 0) {
            if (static_cast<int>(suffix.size()) >= min_suffix)
                out.push_back(VertexName{NameKind::Root, level, suffix});
            return;
        }
        for (int j = 1; j <= remaining; ++j) {
            suffix.push_back(j);
            self(self, level, remaining - j);
            suffix.pop_back();
        }
    };
    for (int level = 1; level <= total; ++level)
        rec(rec, level, total - level);
    return out;
}

}  // namespace detail

// F°_t: level-t roots minus u_t, with arcs splitting the last suffix index.
inline RootDigraph build_F_circle(int t) {
    if (t < 1) throw std::invalid_argument("build_F_circle: t must be at least 1");
    std::vector<DVertex> verts;
    for (auto& n : detail::root_names_with_total(t, 1)) verts.push_back({n, false});
    std::vector<std::pair<DVertex, DVertex>> arcs;
    for (const auto& v : verts) {
        int last = v.name.suffix.back();
        if (last < 2) continue;
        for (int j = 1; j <= last - 1; ++j) {
            VertexName tgt = v.name.with_last_dropped().with_appended(j).with_appended(last - j);
            arcs.push_back({v, {tgt, false}});
        }
    }
    return detail::make_digraph(std::move(verts), arcs, t, ForestFlavor::FCircle);
}

// F_t: the drop-last-suffix-index relabeling of F°_t.
inline RootDigraph relabel_to_F(const RootDigraph& fc) {
    if (fc.flavor != ForestFlavor::FCircle)
        throw std::invalid_argument("relabel_to_F: input must be F_circle");
    auto drop = [](const DVertex& v) {
        return DVertex{v.name.with_last_dropped(), v.primed};
    };
    std::vector<DVertex> verts;
    for (const auto& v : fc.verts) verts.push_back(drop(v));
    std::vector<std::pair<DVertex, DVertex>> arcs;
    for (auto [a, b] : fc.arcs) arcs.push_back({drop(fc.verts[a]), drop(fc.verts[b])});
    return detail::make_digraph(std::move(verts), arcs, fc.t, ForestFlavor::F);
}

inline RootDigraph build_F(int t) { return relabel_to_F(build_F_circle(t)); }

// Weak component of F_t containing u_i, which is exactly the level-i part.
inline RootDigraph component(const RootDigraph& f, int i) {
    if (f.flavor != ForestFlavor::F)
        throw std::invalid_argument("component: input must be F_t");
    if (i < 1 || i > f.t - 1)
        throw std::invalid_argument("component: i out of range");
    std::vector<DVertex> verts;
    for (const auto& v : f.verts)
        if (v.name.index == i) verts.push_back(v);
    std::vector<std::pair<DVertex, DVertex>> arcs;
    for (auto [a, b] : f.arcs)
        if (f.verts[a].name.index == i) arcs.push_back({f.verts[a], f.verts[b]});
    RootDigraph d = detail::make_digraph(std::move(verts), arcs, f.t, ForestFlavor::Derived);
    return d;
}

inline bool is_weakly_connected(const RootDigraph& d) {
    if (d.order() == 0) return true;
    std::vector<char> seen(d.order(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : d.out[v])
            if (!seen[w]) seen[w] = 1, stack.push_back(w);
        for (int w : d.in[v])
            if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

// Indegree profile of an outtree: one source, all others indegree 1.
inline bool is_outtree(const RootDigraph& d) {
    if (!is_weakly_connected(d)) return false;
    int sources = 0;
    for (int v = 0; v < d.order(); ++v) {
        if (d.in[v].empty())
            ++sources;
        else if (d.in[v].size() != 1)
            return false;
    }
    return sources == 1;
}

// Strict reachability matrix (paths of length >= 1).
inline std::vector<std::vector<char>> reachability(const RootDigraph& d) {
    int n = d.order();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack = d.out[s];
        for (int w : d.out[s]) r[s][w] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : d.out[v])
                if (!r[s][w]) r[s][w] = 1, stack.push_back(w);
        }
    }
    return r;
}

// A directed triple (u,v,w) inside U: a directed path from u to w through v.
// In these forests every component is an outtree, so chained strict
// reachability is equivalent to the inner-vertex condition.
inline std::optional<std::tuple<DVertex, DVertex, DVertex>> find_directed_triple(
    const RootDigraph& d, const VertexSet& u_set) {
    auto reach = reachability(d);
    std::vector<char> in_u(d.order(), 0);
    for (int v : u_set) {
        if (v < 0 || v >= d.order())
            throw std::invalid_argument("find_directed_triple: U outside V(D)");
        in_u[v] = 1;
    }
    for (int a : u_set)
        for (int b : u_set)
            if (a != b && reach[a][b])
                for (int c : u_set)
                    if (c != b && reach[b][c])
                        return std::make_tuple(d.verts[a], d.verts[b], d.verts[c]);
    return std::nullopt;
}

inline VertexSet all_vertex_ids(const RootDigraph& d) {
    VertexSet r(d.order());
    for (int v = 0; v < d.order(); ++v) r[v] = v;
    return r;
}

inline bool is_3cut(const RootDigraph& d, const CutSet& s) {
    std::vector<char> cut(d.order(), 0);
    for (const auto& v : s) cut[d.id_of(v)] = 1;
    VertexSet rest;
    for (int v = 0; v < d.order(); ++v)
        if (!cut[v]) rest.push_back(v);
    return !find_directed_triple(d, rest).has_value();
}

namespace detail {

// Per-vertex ancestor/descendant bitmasks; requires |V| <= 31.
struct ReachMasks {
    std::vector<uint32_t> anc, desc;
    uint32_t full;

    explicit ReachMasks(const RootDigraph& d) {
        int n = d.order();
        if (n > 31)
            throw std::invalid_argument("3-cut brute force: more than 31 vertices");
        auto r = reachability(d);
        anc.assign(n, 0);
        desc.assign(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r[a][b]) {
                    desc[a] |= 1u << b;
                    anc[b] |= 1u << a;
                }
        full = n == 31 ? 0x7fffffffu : (1u << n) - 1;
    }

    bool triple_free(uint32_t u) const {
        for (uint32_t rest = u; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((anc[v] & u) && (desc[v] & u)) return false;
        }
        return true;
    }
};

// Lexicographically ordered size-m subsets of {0..n-1}.
template <class Fn>
inline bool for_each_combination(int n, int m, Fn&& fn) {
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Minimum 3-cut by exhaustive enumeration in increasing cardinality,
// lexicographically least in canonical vertex order among minima. With
// max_size >= 0 the search is truncated and may report absence.
inline std::optional<CutSet> min_3cut_bruteforce(const RootDigraph& d,
                                                 int max_size = -1) {
    detail::ReachMasks rm(d);
    int n = d.order();
    int limit = max_size < 0 ? n : std::min(max_size, n);
    for (int m = 0; m <= limit; ++m) {
        CutSet found;
        bool hit = detail::for_each_combination(n, m, [&](const std::vector<int>& idx) {
            uint32_t s = 0;
            for (int i : idx) s |= 1u << i;
            if (!rm.triple_free(rm.full & ~s)) return false;
            for (int i : idx) found.push_back(d.verts[i]);
            return true;
        });
        if (hit) return found;
    }
    return std::nullopt;
}

// The explicit cut: all F_t vertices with total index at most t-3.
inline CutSet canonical_3cut(int t) {
    if (t < 3) throw std::invalid_argument("canonical_3cut: t must be at least 3");
    CutSet s;
    for (int total = 1; total <= t - 3; ++total)
        for (auto& n : detail::root_names_with_total(total, 0)) s.push_back({n, false});
    std::sort(s.begin(), s.end());
    return s;
}

// F(i+1) together with a primed disjoint copy and the arc (u_{i+1}, v_{i+1}).
inline RootDigraph disjoint_union_with_clone(const RootDigraph& fi) {
    std::vector<DVertex> verts;
    std::vector<std::pair<DVertex, DVertex>> arcs;
    for (const auto& v : fi.verts) {
        verts.push_back(v);
        verts.push_back({v.name, true});
    }
    for (auto [a, b] : fi.arcs) {
        arcs.push_back({fi.verts[a], fi.verts[b]});
        arcs.push_back({{fi.verts[a].name, true}, {fi.verts[b].name, true}});
    }
    for (const auto& v : fi.verts)
        if (v.name.suffix.empty())
            arcs.push_back({v, {v.name, true}});  // (u_level, v_level)
    return detail::make_digraph(std::move(verts), arcs, fi.t, ForestFlavor::Derived);
}

// The recursive isomorphism g : F(i) -> F(i+1) disjoint-union F'(i+1).
inline std::map<DVertex, DVertex> iso_g(int i, int t) {
    if (i < 1 || i > t - 2) throw std::invalid_argument("iso_g: need 1 <= i <= t-2");
    RootDigraph fi = component(build_F(t), i);
    std::map<DVertex, DVertex> g;
    for (const auto& v : fi.verts) {
        const auto& suf = v.name.suffix;
        if (suf.empty()) {
            g[v] = DVertex{VertexName{NameKind::Root, i + 1, {}}, false};
        } else if (suf[0] >= 2) {
            VertexName n{NameKind::Root, i + 1, suf};
            n.suffix[0] -= 1;
            g[v] = DVertex{n, false};
        } else {  // leading 1 goes to the primed copy
            VertexName n{NameKind::Root, i + 1,
                         std::vector<int>(suf.begin() + 1, suf.end())};
            g[v] = DVertex{n, true};
        }
    }
    return g;
}

// Arc-preservation both ways under a claimed bijection.
inline bool verify_iso(const RootDigraph& a, const RootDigraph& b,
                       const std::map<DVertex, DVertex>& map) {
    if (a.order() != b.order() || map.size() != a.verts.size()) return false;
    std::map<DVertex, DVertex> inv;
    for (const auto& [x, y] : map) {
        if (!b.index.count(y)) return false;
        if (!inv.emplace(y, x).second) return false;  // not injective
    }
    if (a.arcs.size() != b.arcs.size()) return false;
    for (auto [x, y] : a.arcs) {
        auto [mx, my] = std::pair{map.at(a.verts[x]), map.at(a.verts[y])};
        if (!std::binary_search(b.arcs.begin(), b.arcs.end(),
                                std::pair{b.id_of(mx), b.id_of(my)}))
            return false;
    }
    return true;
}

// Corollary-scale scan: every U larger than 3*2^{t-3} contains a triple.
struct Corollary1Report {
    int t = 0;
    int threshold = 0;  // 3 * 2^{t-3}
    long long checked = 0;
    bool exhaustive = true;
    std::vector<CutSet> counterexamples;
    bool clean() const { return counterexamples.empty(); }
};

inline Corollary1Report corollary1_scan(int t, int samples = 20000) {
    if (t < 4) throw std::invalid_argument("corollary1_scan: t must be at least 4");
    if (t > 6)
        throw std::invalid_argument("corollary1_scan: t > 6 not enumerable at desk scale");
    RootDigraph fc = build_F_circle(t);
    detail::ReachMasks rm(fc);
    Corollary1Report rep;
    rep.t = t;
    rep.threshold = 3 * (1 << (t - 3));
    int n = fc.order();
    auto record = [&](uint32_t u) {
        ++rep.checked;
        if (rm.triple_free(u)) {
            CutSet cs;
            for (int v = 0; v < n; ++v)
                if (u & (1u << v)) cs.push_back(fc.verts[v]);
            rep.counterexamples.push_back(cs);
        }
    };
    if (t <= 5) {
        for (int m = rep.threshold + 1; m <= n; ++m)
            detail::for_each_combination(n, m, [&](const std::vector<int>& idx) {
                uint32_t u = 0;
                for (int i : idx) u |= 1u << i;
                record(u);
                return false;
            });
    } else {
        rep.exhaustive = false;
        std::mt19937 rng(20240824);
        std::vector<int> ids(n);
        for (int v = 0; v < n; ++v) ids[v] = v;
        std::uniform_int_distribution<int> size_dist(rep.threshold + 1, n);
        for (int s = 0; s < samples; ++s) {
            std::shuffle(ids.begin(), ids.end(), rng);
            int m = size_dist(rng);
            uint32_t u = 0;
            for (int i = 0; i < m; ++i) u |= 1u << ids[i];
            record(u);
        }
    }
    return rep;
}

}  // namespace myc

#endif
