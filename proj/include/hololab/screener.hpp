#pragma once

#include "hololab/legendre.hpp"

namespace hololab {

/// One irreducible representation to screen: the flag variety is the
/// projectivized highest weight orbit, the line bundle is the weight itself.
struct Candidate {
    RootSystem system;
    Weight highest_weight;
    ParabolicMarking marking;
    Int dim_rep;
};

/// Crossed set = support of the highest weight; rejects the zero weight.
ParabolicMarking stabilizer_marking(RootSystem rs, const Weight& highest_weight);

Candidate make_candidate(RootSystem rs, Weight highest_weight);

/// dim G = number of roots + rank.
Int dim_group(const RootSystem& rs);

enum class Classification {
    flat_only,
    torsion_free_rigid,
    torsion_free_with_curvature,
    very_little_torsion_candidate,
    enlargement,
    undecided,
};

std::string to_string(Classification c);

struct ScreenVerdict {
    Candidate candidate;
    LegendreAnalysis analysis;
    Classification classification = Classification::undecided;
    std::optional<Int> enlargement_target_dim;
    std::string diagnostic;  // reason when undecided by failure
};

ScreenVerdict screen(const Candidate& c, int kmax = 3, const Budget& budget = {});

/// One row of the holonomy table: printed data next to the recomputed
/// dimension, with an explicit mismatch flag where the two disagree.
struct TableRow {
    std::string group;
    std::string printed_label;   // representation label as printed
    std::string translated;      // system + weight under our numbering
    Int computed_dim = 0;
    Int printed_dim = 0;
    bool mismatch = false;
};

std::vector<TableRow> table_dims();

/// Deterministic batch screen over simple systems of rank <= max_rank and
/// dominant nonzero weights of coordinate sum <= max_level. Output sorted by
/// (system, weight); identical for any jobs count.
std::vector<ScreenVerdict> sweep(int max_rank, int max_level, int kmax, int jobs,
                                 const Budget& budget = {});

}  // namespace hololab
