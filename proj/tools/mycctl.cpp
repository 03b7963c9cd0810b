// Command-line frontend: construction, exact solving, verification, root
// forest analysis, and the bound/threshold harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "myc/circular.hpp"
#include "myc/io.hpp"
#include "myc/mycielski.hpp"
#include "myc/root_forest.hpp"
#include "myc/theorem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

myc::NamedGraph resolve_base(const std::string& spec, int t) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--base expects complete:<n> or edgelist:<path>");
    std::string kind = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (kind == "complete")
        return myc::iterated_mycielskian(myc::complete_graph(std::stoi(arg)), t);
    if (kind == "edgelist") {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot read " + arg);
        myc::Graph g = myc::read_edge_list(in);
        return myc::iterated_mycielskian(g, t);
    }
    throw std::invalid_argument("--base expects complete:<n> or edgelist:<path>");
}

int run_build(const std::string& base, int t, const std::string& out,
              const std::string& dot, bool as_json) {
    myc::NamedGraph g = resolve_base(base, t);
    myc::save_named_graph(out, g);
    if (!dot.empty()) {
        std::ofstream df(dot);
        if (!df) throw std::runtime_error("cannot write " + dot);
        myc::write_dot(df, g);
    }
    if (as_json) {
        myc::json j{{"order", g.graph.order()},
                    {"edges", g.graph.size()},
                    {"t", g.t},
                    {"base_n", g.base_n},
                    {"out", out}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "built t=" << g.t << " order=" << g.graph.order()
                  << " edges=" << g.graph.size() << " -> " << out << "\n";
    }
    return kExitOk;
}

int run_solve(const std::string& graph_path, const std::string& out, int guard,
              bool as_json) {
    myc::NamedGraph g = myc::load_named_graph(graph_path);
    if (g.graph.order() > guard)
        throw GuardExceeded("graph order " + std::to_string(g.graph.order()) +
                            " exceeds guard " + std::to_string(guard));
    myc::ChiCCertificate cert = myc::circular_chromatic_number(g.graph);
    myc::json j = myc::certificate_to_json(cert, g);
    if (!out.empty()) {
        std::ofstream of(out);
        if (!of) throw std::runtime_error("cannot write " + out);
        of << j.dump(2) << "\n";
    }
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << "chi_c = " << cert.optimal_k << "/" << cert.optimal_d << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               bool normal_form, bool lemma1, bool as_json) {
    myc::NamedGraph g = myc::load_named_graph(graph_path);
    myc::json cj;
    myc::KdColoring c;
    try {
        std::ifstream cf(coloring_path);
        if (!cf) throw std::runtime_error("cannot read " + coloring_path);
        cj = myc::json::parse(cf);
        c = myc::coloring_from_json(cj, g);
    } catch (const std::exception& e) {
        std::cerr << "malformed coloring: " << e.what() << "\n";
        return kExitUsage;
    }

    myc::json report;
    bool ok = myc::verify_coloring(g.graph, c);
    report["coloring_valid"] = ok;
    if (!ok) {
        myc::json viol = myc::json::array();
        for (auto [u, v] : g.graph.edges()) {
            int diff = std::abs(c.assignment[u] - c.assignment[v]);
            if (diff < c.d || diff > c.k - c.d)
                viol.push_back({{"u", g.name_of(u).str()},
                                {"v", g.name_of(v).str()},
                                {"diff", diff}});
        }
        report["violations"] = viol;
    }
    myc::KdPartition p = myc::coloring_to_partition(c);
    if (normal_form) {
        myc::NormalFormReport nf = myc::check_normal_form(p, g);
        report["normal_form"] = {{"root_in_class0", nf.root_in_class0},
                                 {"root_alone", nf.root_alone},
                                 {"twin_indices", nf.twin_indices}};
        ok = ok && nf.strong();
    }
    if (lemma1) {
        myc::Lemma1Report l1 = myc::check_lemma1(p, g.graph);
        report["lemma1"] = {{"empty_classes", l1.empty_classes},
                            {"broken_links", l1.broken_links}};
        ok = ok && l1.clean();
    }
    report["ok"] = ok;
    if (as_json)
        std::cout << report.dump() << "\n";
    else if (ok)
        std::cout << "verify: OK\n";
    else
        std::cout << "verify: FAILED\n" << report.dump(2) << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int run_forest(int t, bool sizes, const std::string& mincut, bool corollary1,
               int iso_i, const std::string& dot, bool as_json) {
    myc::json j;
    bool ok = true;
    if (!dot.empty()) {
        std::ofstream df(dot);
        if (!df) throw std::runtime_error("cannot write " + dot);
        myc::write_dot(df, myc::build_F_circle(t));
    }
    if (sizes) {
        myc::RootDigraph f = myc::build_F(t);
        j["order"] = f.order();
        myc::json comp = myc::json::object();
        std::string line;
        for (int i = 1; i <= t - 1; ++i) {
            int sz = myc::component(f, i).order();
            comp["F(" + std::to_string(i) + ")"] = sz;
            line += (line.empty() ? "" : " ") + std::string("|F(") +
                    std::to_string(i) + ")|=" + std::to_string(sz);
        }
        j["components"] = comp;
        if (!as_json) std::cout << line << "\n";
    } else if (!mincut.empty()) {
        if (mincut != "canonical" && t > 6)
            throw GuardExceeded("brute mincut limited to t <= 6");
        if (t < 3) throw std::invalid_argument("--mincut needs t >= 3");
        std::optional<size_t> brute_size;
        if (mincut == "brute" || mincut == "both") {
            auto cut = myc::min_3cut_bruteforce(myc::build_F(t));
            brute_size = cut->size();
            j["brute"] = myc::cutset_to_json(*cut);
        }
        if (mincut == "canonical" || mincut == "both") {
            myc::CutSet cut = myc::canonical_3cut(t);
            if (!myc::is_3cut(myc::build_F(t), cut))
                throw std::logic_error("canonical cut is not a 3-cut");
            j["canonical"] = myc::cutset_to_json(cut);
            if (brute_size) {
                ok = *brute_size == cut.size();
                if (!as_json)
                    std::cout << "brute=" << *brute_size << " canonical=" << cut.size()
                              << (ok ? " OK" : " MISMATCH") << "\n";
            } else if (!as_json) {
                std::cout << "canonical=" << cut.size() << "\n";
            }
        } else if (!as_json) {
            std::cout << "brute=" << *brute_size << "\n";
        }
    } else if (corollary1) {
        if (t < 4 || t > 6)
            throw GuardExceeded("--corollary1 supported for 4 <= t <= 6");
        myc::Corollary1Report rep = myc::corollary1_scan(t);
        ok = rep.clean();
        j["threshold"] = rep.threshold;
        j["checked"] = rep.checked;
        j["exhaustive"] = rep.exhaustive;
        j["counterexamples"] = rep.counterexamples.size();
        if (!as_json)
            std::cout << "corollary1 t=" << t << " checked=" << rep.checked
                      << (ok ? " OK" : " COUNTEREXAMPLE FOUND") << "\n";
    } else if (iso_i > 0) {
        auto g = myc::iso_g(iso_i, t);
        myc::RootDigraph fi = myc::component(myc::build_F(t), iso_i);
        myc::RootDigraph target = myc::disjoint_union_with_clone(
            myc::component(myc::build_F(t), iso_i + 1));
        ok = myc::verify_iso(fi, target, g);
        j["iso"] = ok;
        if (!as_json)
            std::cout << "F(" << iso_i << ") ~ F(" << iso_i + 1 << ") u F'("
                      << iso_i + 1 << "): " << (ok ? "verified" : "FAILED") << "\n";
    } else if (dot.empty()) {
        throw std::invalid_argument(
            "forest: pick one of --sizes, --mincut, --corollary1, --iso");
    }
    if (as_json) {
        j["ok"] = ok;
        std::cout << j.dump() << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int run_harness(const std::string& suite, int max_t, int max_n, int guard,
                bool as_json) {
    bool all_ok = true;
    auto emit = [&](const myc::json& j) { std::cout << j.dump() << "\n"; };

    auto solver_grid = [&](auto&& fn) {
        for (int t = 1; t <= max_t; ++t)
            for (int n = 2; n <= max_n; ++n) {
                long long order = ((1ll << t) * (n + 1)) - 1;
                if (order > guard) continue;
                fn(t, n);
            }
    };

    if (suite == "thresholds") {
        for (const auto& row : myc::threshold_table(max_t)) {
            myc::json j{{"t", row.t},
                        {"paper", row.paper.str()},
                        {"paper_min_n", row.paper_min_n},
                        {"liu", row.liu}};
            if (as_json)
                emit(j);
            else
                std::cout << "t=" << row.t << " paper=" << row.paper.str()
                          << " (min n " << row.paper_min_n << ") liu=" << row.liu
                          << "\n";
        }
        if (!as_json)
            std::cout << "threshold crossover t=" << myc::threshold_crossover()
                      << ", minimal-n crossover t=" << myc::minimal_n_crossover()
                      << "\n";
    } else if (suite == "lemma2" || suite == "conjecture") {
        solver_grid([&](int t, int n) {
            myc::BoundReport rep;
            if (suite == "conjecture") {
                rep = myc::conjecture_check(t, n, guard);
            } else {
                myc::NamedGraph gt =
                    myc::iterated_mycielskian(myc::complete_graph(n), t);
                auto cert = myc::circular_chromatic_number(gt.graph);
                rep = myc::lemma2_check(t, n, cert.optimal_k, cert.optimal_d);
            }
            if (rep.verdict == myc::Verdict::Fails) all_ok = false;
            myc::json j{{"lemma", rep.lemma},
                        {"instance", {{"t", rep.t}, {"n", rep.n}}},
                        {"values",
                         {{"k", rep.k}, {"d", rep.d}, {"lhs", rep.lhs}, {"rhs", rep.rhs}}},
                        {"verdict", myc::verdict_str(rep.verdict)}};
            if (!rep.note.empty()) j["note"] = rep.note;
            emit(j);
        });
    } else if (suite == "lemma9") {
        solver_grid([&](int t, int n) {
            if (t < 3) return;
            myc::NamedGraph gt = myc::iterated_mycielskian(myc::complete_graph(n), t);
            auto cert = myc::circular_chromatic_number(gt.graph);
            myc::Lemma9Report rep = myc::lemma9_hypothesis_scan(gt, cert);
            if (rep.verdict == myc::Verdict::Fails) all_ok = false;
            myc::json j{{"lemma", "lemma9"},
                        {"instance", {{"t", t}, {"n", n}}},
                        {"values",
                         {{"k", cert.optimal_k},
                          {"d", cert.optimal_d},
                          {"qualifying", rep.qualifying.size()},
                          {"normal_form", rep.normal_form}}},
                        {"verdict", myc::verdict_str(rep.verdict)}};
            if (!rep.note.empty()) j["note"] = rep.note;
            emit(j);
        });
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular colorings of iterated Mycielski graphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* build = app.add_subcommand("build", "construct M^t of a base graph");
    std::string base, out, dot;
    int t = 0;
    build->add_option("--base", base, "complete:<n> or edgelist:<path>")->required();
    build->add_option("--t", t, "iteration count")->required();
    build->add_option("--out", out, "output edge-list path")->required();
    build->add_option("--dot", dot, "optional DOT output path");

    auto* solve = app.add_subcommand("solve", "exact circular chromatic number");
    std::string graph_path, cert_out;
    int guard = 25;
    solve->add_option("--graph", graph_path, "edge-list input")->required();
    solve->add_option("--out", cert_out, "certificate JSON output");
    solve->add_option("--guard", guard, "max graph order")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check a coloring / normal form");
    std::string vgraph, coloring;
    bool nf = false, l1 = false;
    verify->add_option("--graph", vgraph, "edge-list input")->required();
    verify->add_option("--coloring", coloring, "coloring JSON")->required();
    verify->add_flag("--normal-form", nf, "also check the normal form");
    verify->add_flag("--lemma1", l1, "also run the optimal-partition diagnostics");

    auto* forest = app.add_subcommand("forest", "root digraph analysis");
    int ft = 0, iso_i = 0;
    bool sizes = false, corollary1 = false;
    std::string mincut, fdot;
    forest->add_option("--t", ft, "iteration parameter")->required();
    forest->add_flag("--sizes", sizes, "component sizes of F_t");
    forest->add_option("--mincut", mincut, "brute | canonical | both")
        ->check(CLI::IsMember({"brute", "canonical", "both"}));
    forest->add_flag("--corollary1", corollary1, "scan large subsets for triples");
    forest->add_option("--iso", iso_i, "verify F(i) ~ F(i+1) u F'(i+1)");
    forest->add_option("--dot", fdot, "DOT output of F_circle");

    auto* harness = app.add_subcommand("harness", "bound and hypothesis suites");
    std::string suite;
    int max_t = 2, max_n = 4, hguard = 25;
    harness->add_option("--suite", suite, "lemma2 | conjecture | lemma9 | thresholds")
        ->required()
        ->check(CLI::IsMember({"lemma2", "conjecture", "lemma9", "thresholds"}));
    harness->add_option("--max-t", max_t, "largest t")->capture_default_str();
    harness->add_option("--max-n", max_n, "largest n")->capture_default_str();
    harness->add_option("--guard", hguard, "max graph order for solver runs")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) return run_build(base, t, out, dot, as_json);
        if (solve->parsed()) return run_solve(graph_path, cert_out, guard, as_json);
        if (verify->parsed()) return run_verify(vgraph, coloring, nf, l1, as_json);
        if (forest->parsed())
            return run_forest(ft, sizes, mincut, corollary1, iso_i, fdot, as_json);
        if (harness->parsed())
            return run_harness(suite, max_t, max_n, hguard, as_json);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
