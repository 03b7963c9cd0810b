#ifndef MYC_MYCIELSKI_HPP
#define MYC_MYCIELSKI_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "myc/graph.hpp"
#include "myc/vertex_name.hpp"

namespace myc {

// A graph together with the naming of its vertices as an iterated Mycielskian.
// Ids are assigned in canonical name order, so equal constructions produce
// byte-identical output.
struct NamedGraph {
    Graph graph;
    std::vector<VertexName> names;  // id -> name
    std::map<VertexName, VertexId> ids;
    int t = 0;
    int base_n = 0;

    bool has(const VertexName& x) const { return ids.count(x) != 0; }

    VertexId id_of(const VertexName& x) const {
        auto it = ids.find(x);
        if (it == ids.end())
            throw std::invalid_argument("named graph: unknown vertex " + x.str());
        return it->second;
    }

    const VertexName& name_of(VertexId v) const { return names.at(v); }
};

namespace detail {

inline NamedGraph assemble(std::vector<VertexName> names,
                           const std::vector<std::pair<VertexName, VertexName>>& edges,
                           int t, int base_n) {
    std::sort(names.begin(), names.end());
    NamedGraph g;
    g.t = t;
    g.base_n = base_n;
    g.names = std::move(names);
    for (size_t i = 0; i < g.names.size(); ++i)
        g.ids[g.names[i]] = static_cast<VertexId>(i);
    std::vector<std::pair<VertexId, VertexId>> idedges;
    idedges.reserve(edges.size());
    for (const auto& [a, b] : edges)
        idedges.emplace_back(g.ids.at(a), g.ids.at(b));
    g.graph = Graph(static_cast<int>(g.names.size()), std::move(idedges));
    return g;
}

}  // namespace detail

// Wraps a plain graph as iteration 0, vertices named x1..xn.
inline NamedGraph as_initial(const Graph& g) {
    std::vector<VertexName> names;
    for (int v = 0; v < g.order(); ++v)
        names.push_back(VertexName{NameKind::Initial, v + 1, {}});
    std::vector<std::pair<VertexName, VertexName>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(names[u], names[v]);
    return detail::assemble(std::move(names), edges, 0, g.order());
}

// Name of the twin a vertex gains when stepping from iteration new_t-1 to
// new_t: append new_t minus the vertex's total index.
inline VertexName twin_name(const VertexName& x, int new_t) {
    return x.with_appended(new_t - x.total());
}

// One Mycielski step with full naming: every vertex gains a twin, a new root
// u_{t+1} joins exactly the twins, and twins copy their original's adjacency.
inline NamedGraph mycielskian(const NamedGraph& h) {
    int nt = h.t + 1;
    VertexName root{NameKind::Root, nt, {}};
    std::vector<VertexName> names = h.names;
    for (const auto& x : h.names) names.push_back(twin_name(x, nt));
    names.push_back(root);

    std::vector<std::pair<VertexName, VertexName>> edges;
    for (auto [u, v] : h.graph.edges()) {
        const VertexName& a = h.names[u];
        const VertexName& b = h.names[v];
        edges.emplace_back(a, b);
        edges.emplace_back(twin_name(a, nt), b);
        edges.emplace_back(twin_name(b, nt), a);
    }
    for (const auto& x : h.names) edges.emplace_back(root, twin_name(x, nt));
    return detail::assemble(std::move(names), edges, nt, h.base_n);
}

inline NamedGraph iterated_mycielskian(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("iterated_mycielskian: t must be nonnegative");
    NamedGraph cur = as_initial(g);
    for (int s = 0; s < t; ++s) cur = mycielskian(cur);
    return cur;
}

// T(x): all vertices whose name extends x's by a nonempty suffix.
inline VertexSet derived_set(const NamedGraph& gt, const VertexName& x) {
    if (!gt.has(x))
        throw std::invalid_argument("derived_set: vertex " + x.str() + " not present");
    VertexSet r;
    for (size_t v = 0; v < gt.names.size(); ++v)
        if (x.is_proper_prefix_of(gt.names[v])) r.push_back(static_cast<VertexId>(v));
    return r;
}

// T(V(G)): derived vertices of all initial vertices of the base graph.
inline VertexSet derived_of_initials(const NamedGraph& gt) {
    VertexSet r;
    for (size_t v = 0; v < gt.names.size(); ++v) {
        const VertexName& x = gt.names[v];
        if (x.kind == NameKind::Initial && !x.suffix.empty())
            r.push_back(static_cast<VertexId>(v));
    }
    return r;
}

// R_s: root-kind vertices with level + suffix sum = s.
inline VertexSet roots_at_level(const NamedGraph& gt, int s) {
    if (s < 1 || s > gt.t)
        throw std::invalid_argument("roots_at_level: s out of range");
    VertexSet r;
    for (size_t v = 0; v < gt.names.size(); ++v) {
        const VertexName& x = gt.names[v];
        if (x.kind == NameKind::Root && x.total() == s)
            r.push_back(static_cast<VertexId>(v));
    }
    return r;
}

// All of R(M^t(G)): roots and their derived vertices.
inline VertexSet all_roots(const NamedGraph& gt) {
    VertexSet r;
    for (size_t v = 0; v < gt.names.size(); ++v)
        if (gt.names[v].kind == NameKind::Root) r.push_back(static_cast<VertexId>(v));
    return r;
}

// The bijection h from the roots of M^{t-1}(G) onto R_t - {u_t}: h appends the
// suffix entry completing the total to t; its inverse drops the last entry.
inline std::map<VertexName, VertexName> twin_bijection_h(const NamedGraph& gt) {
    if (gt.t < 1) throw std::invalid_argument("twin_bijection_h: t must be at least 1");
    std::map<VertexName, VertexName> h;
    for (const auto& x : gt.names)
        if (x.kind == NameKind::Root && x.total() <= gt.t - 1)
            h[x] = twin_name(x, gt.t);
    return h;
}

}  // namespace myc

#endif
