#include "hololab/legendre.hpp"

#include <algorithm>

namespace hololab {

LegendreDatum make_datum(ParabolicMarking marking, Weight line_weight) {
    if (static_cast<int>(line_weight.coords.size()) != marking.system.rank)
        throw domain_error("line weight rank mismatch");
    for (int i = 0; i < marking.system.rank; ++i) {
        bool crossed = marking.is_crossed(i);
        long long c = line_weight.coords[i];
        if (crossed && c <= 0)
            throw domain_error("line weight must be strictly positive on crossed node " +
                               std::to_string(i + 1));
        if (!crossed && c != 0)
            throw domain_error("line weight must vanish on uncrossed node " + std::to_string(i + 1));
    }
    return {std::move(marking), std::move(line_weight)};
}

FilteredBundle jet_bundle(const LegendreDatum& d) {
    FilteredBundle jet = twist(cotangent_bundle(d.marking), d.line_weight);
    jet.pieces.emplace_back(d.line_weight, Int(1));
    jet.provenance = Provenance::jet;
    jet.pattern = JetPattern{d.line_weight, false, 1, std::nullopt};
    return jet;
}

LegendreAnalysis legendre_analyze(const LegendreDatum& d, int kmax, const Budget& budget) {
    if (kmax < 1) throw domain_error("kmax must be at least 1");
    LegendreAnalysis out;
    out.kmax_requested = kmax;
    out.dim_m = weyl_dim(d.marking.system, d.line_weight);

    // Borel-Weil self-check: sections of L must reproduce dim M
    auto sections = bbw_irreducible(d.marking, d.line_weight);
    if (!sections.at(0).exact() || sections.at(0).lower != out.dim_m)
        throw std::logic_error("Borel-Weil self-check failed for the line bundle");

    FilteredBundle dual_jet = dual_bundle(jet_bundle(d));
    for (int k = 1; k <= kmax; ++k) {
        try {
            FilteredBundle bundle = twist(sym_bundle(dual_jet, k, budget), d.line_weight);
            LevelReport lr{k, cohomology(bundle, budget)};
            if (k == 1) out.g_ind_dim = lr.report.at(0);
            if (k == 2) {
                out.conn_space_dim = lr.report.at(0);
                out.torsion_obstruction = lr.report.at(1);
            }
            if (k == 3) out.curvature_space = lr.report.at(1);
            out.levels.push_back(std::move(lr));
        } catch (const budget_error&) {
            out.complete = false;
            break;
        }
    }
    return out;
}

namespace {

CohomologyEntry entry_sum(const CohomologyEntry& a, const CohomologyEntry& b) {
    return {a.lower + b.lower, a.upper + b.upper};
}

}  // namespace

KodairaAnalysis kodaira_analyze(const FilteredBundle& n, const Budget& budget) {
    KodairaAnalysis out;
    FilteredBundle nd = dual_bundle(n);
    FilteredBundle tx = tangent_bundle(n.marking);

    out.h1_n = cohomology(n, budget).at(1);
    out.obstruction1 = cohomology(tensor_bundle(n, sym_bundle(nd, 2, budget), budget), budget).at(1);
    out.obstruction2 = cohomology(tensor_bundle(nd, tx, budget), budget).at(1);
    auto end_n = cohomology(tensor_bundle(n, nd, budget), budget).at(0);
    auto aut_x = cohomology(tx, budget).at(0);
    out.g_dim = entry_sum(end_n, aut_x);

    bool vanishing = out.h1_n.exact() && out.h1_n.lower == 0 && out.obstruction1.exact() &&
                     out.obstruction1.lower == 0 && out.obstruction2.exact() &&
                     out.obstruction2.lower == 0;
    out.verdict = vanishing ? KodairaVerdict::one_flat_structure : KodairaVerdict::inconclusive;
    return out;
}

Int torsion_number(const Int& dim_m, const Int& dim_x, const Int& rank_d) {
    if (dim_m < 0 || dim_x < 0 || rank_d < 0) throw domain_error("torsion number arguments must be non-negative");
    Int num = dim_m - dim_x - rank_d - 1;
    if (num < 0) throw domain_error("torsion number would be negative");
    if (num % 2 != 0) throw domain_error("torsion number would be half-integral");
    return num / 2;
}

Int flat_rank_d(const Int& dim_m, const Int& dim_x) {
    Int r = dim_m - dim_x - 1;
    if (r < 0) throw domain_error("flat distribution rank would be negative");
    return r;
}

}  // namespace hololab
