#ifndef MYC_IO_HPP
#define MYC_IO_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "myc/circular.hpp"
#include "myc/graph.hpp"
#include "myc/mycielski.hpp"
#include "myc/root_forest.hpp"

namespace myc {

using json = nlohmann::ordered_json;

// DIMACS-style edge list: `p <nv> <ne>` then `e <u> <v>`, 1-based ids.
// Writer emits edges lexicographically.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << "p " << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (std::getline(is, line)) {
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (!(ss >> n >> m) || n < 0)
                throw std::runtime_error("edge list: malformed p line");
        } else if (tag == "e") {
            int u, v;
            if (!(ss >> u >> v))
                throw std::runtime_error("edge list: malformed e line");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw std::runtime_error("edge list: unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw std::runtime_error("edge list: missing p line");
    if (m >= 0 && m != static_cast<int>(edges.size()))
        throw std::runtime_error("edge list: edge count mismatch");
    return Graph(n, std::move(edges));
}

// Name-table sidecar: header `t <t> <base_n>`, then `<id> <name>` per vertex.
inline void write_name_table(std::ostream& os, const NamedGraph& g) {
    os << "t " << g.t << " " << g.base_n << "\n";
    for (size_t i = 0; i < g.names.size(); ++i)
        os << i + 1 << " " << g.names[i].str() << "\n";
}

inline NamedGraph read_name_table(std::istream& is, Graph graph) {
    std::string line;
    NamedGraph g;
    g.graph = std::move(graph);
    g.names.assign(g.graph.order(), {});
    std::vector<char> seen(g.graph.order(), 0);
    bool header = false;
    while (std::getline(is, line)) {
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first == "c") continue;
        if (first == "t") {
            if (!(ss >> g.t >> g.base_n))
                throw std::runtime_error("name table: malformed header");
            header = true;
            continue;
        }
        int id = std::stoi(first);
        std::string name;
        if (!(ss >> name) || id < 1 || id > g.graph.order())
            throw std::runtime_error("name table: malformed entry");
        g.names[id - 1] = VertexName::parse(name);
        seen[id - 1] = 1;
    }
    if (!header) throw std::runtime_error("name table: missing t header");
    for (char s : seen)
        if (!s) throw std::runtime_error("name table: incomplete");
    for (size_t i = 0; i < g.names.size(); ++i)
        if (!g.ids.emplace(g.names[i], static_cast<VertexId>(i)).second)
            throw std::runtime_error("name table: duplicate name");
    return g;
}

inline void save_named_graph(const std::string& path, const NamedGraph& g) {
    std::ofstream gf(path);
    if (!gf) throw std::runtime_error("cannot write " + path);
    write_edge_list(gf, g.graph);
    std::ofstream nf(path + ".names");
    if (!nf) throw std::runtime_error("cannot write " + path + ".names");
    write_name_table(nf, g);
}

// Loads the graph; when the .names sidecar is absent the graph is treated as
// iteration 0 with default initial names.
inline NamedGraph load_named_graph(const std::string& path) {
    std::ifstream gf(path);
    if (!gf) throw std::runtime_error("cannot read " + path);
    Graph g = read_edge_list(gf);
    std::ifstream nf(path + ".names");
    if (!nf) return as_initial(g);
    return read_name_table(nf, std::move(g));
}

// Stable content hash of the edge list, for certificate identification.
inline std::string graph_hash(const Graph& g) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<uint64_t>(u));
        mix(static_cast<uint64_t>(v));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json certificate_to_json(const ChiCCertificate& cert, const NamedGraph& g,
                                const std::string& graph_name = "") {
    json j;
    j["graph"] = graph_name.empty() ? graph_hash(g.graph) : graph_name;
    j["order"] = g.graph.order();
    j["alpha"] = cert.alpha;
    j["chi"] = cert.chi;
    j["optimal"] = {{"k", cert.optimal_k}, {"d", cert.optimal_d}};
    json witness = json::object();
    for (int v = 0; v < g.graph.order(); ++v)
        witness[g.name_of(v).str()] = cert.witness.assignment[v];
    j["witness"] = witness;
    json rejected = json::array();
    for (auto [k, d] : cert.rejected) rejected.push_back({{"k", k}, {"d", d}});
    j["rejected"] = rejected;
    if (cert.edgeless) j["edgeless"] = true;
    return j;
}

// Reads {"k":..,"d":..,"witness":{name:color}} (a full certificate works too:
// the optimal block supplies k and d).
inline KdColoring coloring_from_json(const json& j, const NamedGraph& g) {
    int k, d;
    if (j.contains("optimal")) {
        k = j["optimal"]["k"].get<int>();
        d = j["optimal"]["d"].get<int>();
    } else {
        k = j.at("k").get<int>();
        d = j.at("d").get<int>();
    }
    KdColoring c{k, d, std::vector<int>(g.graph.order(), -1)};
    for (auto& [name, color] : j.at("witness").items())
        c.assignment[g.id_of(VertexName::parse(name))] = color.get<int>();
    for (int f : c.assignment)
        if (f < 0) throw std::runtime_error("coloring: not total on V(G)");
    return c;
}

inline void write_dot(std::ostream& os, const NamedGraph& g) {
    os << "graph {\n";
    for (int v = 0; v < g.graph.order(); ++v)
        os << "  n" << v << " [label=\"" << g.name_of(v).str() << "\"];\n";
    for (auto [u, v] : g.graph.edges()) os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
}

inline void write_dot(std::ostream& os, const RootDigraph& d) {
    os << "digraph {\n";
    for (int v = 0; v < d.order(); ++v)
        os << "  n" << v << " [label=\"" << d.verts[v].str() << "\"];\n";
    for (auto [a, b] : d.arcs) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
}

inline json cutset_to_json(const CutSet& s) {
    json arr = json::array();
    for (const auto& v : s) arr.push_back(v.str());
    return arr;
}

}  // namespace myc

#endif
