#pragma once

#include <optional>

#include "hololab/repthy.hpp"

namespace hololab {

/// Crossed-node subset defining P in X = G/P.
struct ParabolicMarking {
    RootSystem system;
    std::vector<int> crossed;  // sorted, nonempty, 0-based

    LeviContext levi() const;
    bool is_crossed(int node) const;
};

ParabolicMarking make_marking(RootSystem rs, std::vector<int> crossed);

/// Parse "xo"/"{1}" marking text; printed form is the x/o string.
ParabolicMarking parse_marking(const std::string& text, RootSystem rs);
std::string marking_string(const ParabolicMarking& m);

enum class Provenance { irreducible, cotangent, jet, sym_of_jet, tensor, custom };

/// Shape witness for the bundles the Legendre calculus builds:
/// twist(line `twist`) applied to S^sym_power of (J^1 O(line))^{* if dualized}.
struct JetPattern {
    Weight line;
    bool dualized = false;
    int sym_power = 1;
    std::optional<Weight> twist;
};

/// Ordered multiset of Levi-irreducible weights: the graded pieces of a
/// homogeneous bundle's filtration.
struct FilteredBundle {
    ParabolicMarking marking;
    std::vector<std::pair<Weight, Int>> pieces;
    Provenance provenance = Provenance::custom;
    std::optional<JetPattern> pattern;

    Int rank() const;
    Character total_character() const;
};

struct CohomologyEntry {
    Int lower = 0, upper = 0;
    bool exact() const { return lower == upper; }
    static CohomologyEntry exactly(Int v) { return {v, v}; }
};

struct CohomologyReport {
    std::map<int, CohomologyEntry> h;  // degree -> entry, degrees 0..dim X
    Int euler = 0;                     // always exact
    std::string tier;

    CohomologyEntry at(int q) const;
    bool all_exact() const;
};

int dim_flag(const ParabolicMarking& m);
Weight canonical_weight(const ParabolicMarking& m);

/// Bott-Borel-Weil for a Levi-irreducible bundle: at most one nonzero degree.
CohomologyReport bbw_irreducible(const ParabolicMarking& m, const Weight& w);

FilteredBundle cotangent_bundle(const ParabolicMarking& m);
FilteredBundle tangent_bundle(const ParabolicMarking& m);

FilteredBundle make_irreducible_bundle(const ParabolicMarking& m, const Weight& w);
FilteredBundle tensor_bundle(const FilteredBundle& a, const FilteredBundle& b,
                             const Budget& budget = {});
FilteredBundle sym_bundle(const FilteredBundle& f, int k, const Budget& budget = {});
FilteredBundle dual_bundle(const FilteredBundle& f);
FilteredBundle twist(const FilteredBundle& f, const Weight& line_weight);

/// Tiered cohomology engine: exact dimensions where a recognized structure
/// certifies them, certified intervals otherwise, Euler characteristic always
/// exact.
CohomologyReport cohomology(const FilteredBundle& f, const Budget& budget = {});

/// Decompose an arbitrary Levi-invariant character on X into a filtered bundle.
FilteredBundle bundle_from_character(const ParabolicMarking& m, const Character& ch);

}  // namespace hololab
