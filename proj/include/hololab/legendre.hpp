#pragma once

#include "hololab/homog.hpp"

namespace hololab {

/// Pair (X = G/P, L_X): the marking plus the weight of a very ample line
/// bundle supported on the crossed nodes.
struct LegendreDatum {
    ParabolicMarking marking;
    Weight line_weight;
};

/// Validates positivity on crossed nodes and vanishing on uncrossed ones.
LegendreDatum make_datum(ParabolicMarking marking, Weight line_weight);

/// First jet bundle of the line bundle: graded pieces are the twisted
/// cotangent pieces followed by the line piece; rank = dim X + 1.
FilteredBundle jet_bundle(const LegendreDatum& d);

struct LevelReport {
    int k = 0;
    CohomologyReport report;  // cohomology of L (x) S^k (J^1 L)^*
};

struct LegendreAnalysis {
    Int dim_m = 0;
    CohomologyEntry g_ind_dim;           // h^0 at k = 1
    CohomologyEntry conn_space_dim;      // h^0 at k = 2
    CohomologyEntry torsion_obstruction; // h^1 at k = 2
    CohomologyEntry curvature_space;     // h^1 at k = 3
    std::vector<LevelReport> levels;     // completed ks, ascending
    int kmax_requested = 0;
    bool complete = true;  // false when the budget stopped some level
};

LegendreAnalysis legendre_analyze(const LegendreDatum& d, int kmax = 3, const Budget& budget = {});

enum class KodairaVerdict { one_flat_structure, inconclusive };

struct KodairaAnalysis {
    CohomologyEntry h1_n;          // h^1(N)
    CohomologyEntry obstruction1;  // h^1(N (x) S^2 N^*)
    CohomologyEntry obstruction2;  // h^1(N^* (x) TX)
    CohomologyEntry g_dim;         // h^0(N (x) N^*) + h^0(TX)
    KodairaVerdict verdict = KodairaVerdict::inconclusive;
};

KodairaAnalysis kodaira_analyze(const FilteredBundle& n, const Budget& budget = {});

/// l = (dim_M - dim_X - rank_D - 1) / 2; rejects negative or half-integral
/// results.
Int torsion_number(const Int& dim_m, const Int& dim_x, const Int& rank_d);

/// Maximal distribution rank of the flat model.
Int flat_rank_d(const Int& dim_m, const Int& dim_x);

}  // namespace hololab
