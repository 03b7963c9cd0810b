#ifndef MYC_CHROMATIC_HPP
#define MYC_CHROMATIC_HPP

#include <vector>

#include "myc/graph.hpp"

namespace myc {

namespace detail {

inline int dsatur_pick(const Graph& g, const std::vector<int>& color) {
    int best = -1, best_sat = -1, best_deg = -1;
    std::vector<int> seen;
    for (int u = 0; u < g.order(); ++u) {
        if (color[u] != -1) continue;
        seen.clear();
        for (int v : g.neighbors(u))
            if (color[v] != -1) seen.push_back(color[v]);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        int sat = static_cast<int>(seen.size());
        if (sat > best_sat || (sat == best_sat && g.degree(u) > best_deg)) {
            best = u;
            best_sat = sat;
            best_deg = g.degree(u);
        }
    }
    return best;
}

inline bool k_colorable_rec(const Graph& g, int k, std::vector<int>& color,
                            int& used) {
    int u = dsatur_pick(g, color);
    if (u == -1) return true;
    // colors 0..used are the only nonequivalent choices
    int limit = std::min(k - 1, used + 1);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int v : g.neighbors(u))
            if (color[v] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[u] = c;
        int prev = used;
        if (c > used) used = c;
        if (k_colorable_rec(g, k, color, used)) return true;
        used = prev;
        color[u] = -1;
    }
    return false;
}

}  // namespace detail

// Exact k-colorability by DSATUR-ordered backtracking with used-color symmetry
// breaking. Independent of the circular homomorphism engine.
inline bool is_k_colorable(const Graph& g, int k) {
    if (g.order() == 0) return true;
    if (k < 1) return false;
    std::vector<int> color(g.order(), -1);
    int used = -1;
    return detail::k_colorable_rec(g, k, color, used);
}

inline int chromatic_number(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = clique_number(g);; ++k)
        if (is_k_colorable(g, k)) return k;
}

}  // namespace myc

#endif
