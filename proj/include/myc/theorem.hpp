#ifndef MYC_THEOREM_HPP
#define MYC_THEOREM_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "myc/circular.hpp"
#include "myc/mycielski.hpp"
#include "myc/rational.hpp"
#include "myc/root_forest.hpp"

namespace myc {

enum class Verdict { Holds, Fails, Vacuous };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        default: return "vacuous";
    }
}

struct BoundReport {
    std::string lemma;
    int t = 0, n = 0;
    int k = 0, d = 0;
    long long lhs = 0, rhs = 0;
    Verdict verdict = Verdict::Vacuous;
    std::string note;
};

// (n-3)(d-1) <= 2^t - 2 for the reduced optimum of a graph with n universal
// vertices.
inline BoundReport lemma2_check(int t, int n, int k, int d) {
    if (n < 2) throw std::invalid_argument("lemma2_check: needs n >= 2");
    if (std::gcd(k, d) != 1)
        throw std::invalid_argument("lemma2_check: (k,d) must be reduced");
    BoundReport rep;
    rep.lemma = "lemma2";
    rep.t = t;
    rep.n = n;
    rep.k = k;
    rep.d = d;
    rep.lhs = static_cast<long long>(n - 3) * (d - 1);
    rep.rhs = (1ll << t) - 2;
    rep.verdict = rep.lhs <= rep.rhs ? Verdict::Holds : Verdict::Fails;
    return rep;
}

// (11/12) 2^{t-1} + 2t + 1/3, exactly.
inline Rational theorem1_threshold(int t) {
    return Rational(11, 12) * Rational(1ll << (t - 1)) + Rational(2 * t) +
           Rational(1, 3);
}

// 2^{t-1} + 2t - 2.
inline long long liu_threshold(int t) { return (1ll << (t - 1)) + 2 * t - 2; }

struct ThresholdRow {
    int t;
    Rational paper;
    long long paper_min_n;  // least integer n satisfying the bound
    long long liu;
};

inline std::vector<ThresholdRow> threshold_table(int max_t) {
    std::vector<ThresholdRow> rows;
    for (int t = 1; t <= max_t; ++t) {
        Rational p = theorem1_threshold(t);
        rows.push_back({t, p, p.ceil(), liu_threshold(t)});
    }
    return rows;
}

// Smallest t at which the rational bound drops strictly below Liu's.
inline int threshold_crossover(int max_t = 20) {
    for (int t = 1; t <= max_t; ++t)
        if (theorem1_threshold(t) < Rational(liu_threshold(t))) return t;
    return -1;
}

// Smallest t at which the minimal admissible integer n drops strictly below.
inline int minimal_n_crossover(int max_t = 20) {
    for (int t = 1; t <= max_t; ++t)
        if (theorem1_threshold(t).ceil() < liu_threshold(t)) return t;
    return -1;
}

// Runs the exact solver on M^t(K_n) and compares against (n+t)/1.
inline BoundReport conjecture_check(int t, int n, int guard = 25) {
    BoundReport rep;
    rep.lemma = "conjecture";
    rep.t = t;
    rep.n = n;
    long long order = ((1ll << t) * (n + 1)) - 1;
    if (order > guard)
        throw std::invalid_argument("conjecture_check: |V| = " + std::to_string(order) +
                                    " exceeds guard " + std::to_string(guard));
    NamedGraph gt = iterated_mycielskian(complete_graph(n), t);
    ChiCCertificate cert = circular_chromatic_number(gt.graph);
    rep.k = cert.optimal_k;
    rep.d = cert.optimal_d;
    rep.lhs = cert.optimal_k;
    rep.rhs = static_cast<long long>(n + t) * cert.optimal_d;
    bool equal = cert.optimal_d == 1 && cert.optimal_k == n + t;
    if (n >= t + 2) {
        rep.verdict = equal ? Verdict::Holds : Verdict::Fails;
    } else {
        rep.verdict = Verdict::Vacuous;
        rep.note = equal ? "n < t+2; equality holds anyway"
                         : "n < t+2; conjecture does not apply";
    }
    return rep;
}

// Scan of the Lemma 9 hypothesis over an optimal (k,2)-partition: collect the
// level-t roots v with C(v) included in delta(v) over the roots, itself
// included in {v, h^{-1}(v)}, and look for a directed triple among them.
struct Lemma9Report {
    Verdict verdict = Verdict::Vacuous;
    std::string normal_form;  // "lemma10", "lemma3", or "none"
    std::vector<VertexName> qualifying;
    std::optional<std::tuple<DVertex, DVertex, DVertex>> triple;
    std::string note;
};

inline Lemma9Report lemma9_hypothesis_scan(const NamedGraph& gt, const KdPartition& p) {
    if (gt.t < 3)
        throw std::invalid_argument("lemma9_hypothesis_scan: needs t >= 3");
    Lemma9Report rep;
    if (p.d != 2) {
        rep.verdict = Verdict::Vacuous;
        rep.note = "hypothesis requires a (k,2)-coloring";
        return rep;
    }
    NormalFormReport nf = check_normal_form(p, gt);
    rep.normal_form = nf.strong() ? "lemma10" : nf.weak() ? "lemma3" : "none";

    VertexSet roots = all_roots(gt);
    for (VertexId v : roots_at_level(gt, gt.t)) {
        const VertexName& name = gt.name_of(v);
        if (name.suffix.empty() && name.index == gt.t) continue;  // u_t
        VertexId hinv = gt.id_of(name.with_last_dropped());
        VertexSet allowed{v, hinv};
        std::sort(allowed.begin(), allowed.end());
        VertexSet field_roots = set_intersection(d_field(p, v), roots);
        if (!is_subset(field_roots, allowed)) continue;
        int cls = partition_to_coloring(p).assignment[v];
        if (!is_subset(p.classes[cls], field_roots)) continue;
        rep.qualifying.push_back(name);
    }

    if (rep.qualifying.size() < 3) {
        rep.verdict = Verdict::Vacuous;
        rep.note = "fewer than 3 qualifying roots";
        return rep;
    }
    RootDigraph fc = build_F_circle(gt.t);
    VertexSet q;
    for (const auto& n : rep.qualifying) q.push_back(fc.id_of({n, false}));
    std::sort(q.begin(), q.end());
    rep.triple = find_directed_triple(fc, q);
    rep.verdict = rep.triple ? Verdict::Fails : Verdict::Holds;
    return rep;
}

inline Lemma9Report lemma9_hypothesis_scan(const NamedGraph& gt,
                                           const ChiCCertificate& cert) {
    return lemma9_hypothesis_scan(gt, coloring_to_partition(cert.witness));
}

}  // namespace myc

#endif
