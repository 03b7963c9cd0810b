#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "myc/io.hpp"
#include "oracles.hpp"

using namespace myc;

TEST_CASE("edge list round trip") {
    std::mt19937 rng(23);
    for (int it = 0; it < 50; ++it) {
        Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.4);
        std::stringstream ss;
        write_edge_list(ss, g);
        Graph back = read_edge_list(ss);
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("edge list writer output is canonical") {
    Graph g(3, {{2, 1}, {0, 2}});
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(ss.str() == "p 3 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("edge list error paths") {
    std::stringstream no_p("e 1 2\n");
    CHECK_THROWS_AS(read_edge_list(no_p), std::runtime_error);
    std::stringstream bad_count("p 3 5\ne 1 2\n");
    CHECK_THROWS_AS(read_edge_list(bad_count), std::runtime_error);
    std::stringstream junk("p 2 0\nq 1\n");
    CHECK_THROWS_AS(read_edge_list(junk), std::runtime_error);
}

TEST_CASE("name serialization grammar") {
    VertexName a{NameKind::Initial, 3, {1, 1}};
    CHECK(a.str() == "x3^1.1");
    VertexName b{NameKind::Root, 1, {2, 1}};
    CHECK(b.str() == "u1^2.1");
    CHECK(VertexName::parse("x3^1.1") == a);
    CHECK(VertexName::parse("u1^2.1") == b);
    CHECK(VertexName::parse("u2") == VertexName{NameKind::Root, 2, {}});
    CHECK_THROWS_AS(VertexName::parse("w1"), std::invalid_argument);
    CHECK_THROWS_AS(VertexName::parse("x0"), std::invalid_argument);
    CHECK_THROWS_AS(VertexName::parse("x1^"), std::invalid_argument);
    CHECK_THROWS_AS(VertexName::parse("x1^1."), std::invalid_argument);
}

TEST_CASE("name parse/str round trip on random names") {
    std::mt19937 rng(29);
    for (int it = 0; it < 200; ++it) {
        VertexName n;
        n.kind = rng() % 2 ? NameKind::Initial : NameKind::Root;
        n.index = 1 + static_cast<int>(rng() % 9);
        int len = static_cast<int>(rng() % 4);
        for (int i = 0; i < len; ++i)
            n.suffix.push_back(1 + static_cast<int>(rng() % 5));
        CHECK(VertexName::parse(n.str()) == n);
    }
}

TEST_CASE("named graph save/load round trip") {
    NamedGraph g = iterated_mycielskian(complete_graph(3), 2);
    std::stringstream gs, ns;
    write_edge_list(gs, g.graph);
    write_name_table(ns, g);
    NamedGraph back = read_name_table(ns, read_edge_list(gs));
    CHECK(back.t == 2);
    CHECK(back.base_n == 3);
    CHECK(back.names == g.names);
    CHECK(back.graph.edges() == g.graph.edges());
}

TEST_CASE("certificate JSON round trip and determinism") {
    NamedGraph g = iterated_mycielskian(complete_graph(3), 1);
    ChiCCertificate cert = circular_chromatic_number(g.graph);
    json j1 = certificate_to_json(cert, g);
    json j2 = certificate_to_json(cert, g);
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["optimal"]["k"] == 4);
    CHECK(j1["optimal"]["d"] == 1);
    CHECK(j1["order"] == 7);

    KdColoring back = coloring_from_json(j1, g);
    CHECK(back.k == cert.witness.k);
    CHECK(back.d == cert.witness.d);
    CHECK(back.assignment == cert.witness.assignment);
}

TEST_CASE("coloring JSON rejects partial assignments") {
    NamedGraph g = iterated_mycielskian(complete_graph(2), 1);
    json j{{"k", 5}, {"d", 2}, {"witness", {{"x1", 0}}}};
    CHECK_THROWS(coloring_from_json(j, g));
}

TEST_CASE("dot output shape") {
    NamedGraph g = iterated_mycielskian(complete_graph(2), 1);
    std::stringstream ss;
    write_dot(ss, g);
    CHECK(ss.str().find("graph {") == 0);
    CHECK(ss.str().find("u1") != std::string::npos);

    std::stringstream ds;
    write_dot(ds, build_F_circle(4));
    CHECK(ds.str().find("digraph {") == 0);
    CHECK(ds.str().find("->") != std::string::npos);
}
