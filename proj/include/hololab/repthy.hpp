#pragma once

#include <map>
#include <vector>

#include "hololab/rootsys.hpp"

namespace hololab {

/// Levi factor of a parabolic: uncrossed nodes carry the semisimple part,
/// crossed nodes act as central-torus directions and ride along additively.
struct LeviContext {
    RootSystem system;
    std::vector<int> uncrossed;  // sorted node indices, 0-based

    bool dominant_on_levi(const Weight& w) const;
    std::vector<int> crossed() const;
};

LeviContext full_context(RootSystem rs);
LeviContext make_levi(RootSystem rs, std::vector<int> uncrossed);

struct Budget {
    long long max_fiber_dim = 5000;
    int max_sym_power = 6;
};

/// Formal character: weight (fundamental coordinates) -> multiplicity.
using Character = std::map<std::vector<long long>, Int>;

struct ModuleDecomposition {
    std::vector<std::pair<Weight, Int>> terms;  // (levi highest weight, multiplicity), sorted

    Int total_dimension(const LeviContext& ctx) const;
};

/// Weyl dimension formula over the full system.
Int weyl_dim(const RootSystem& rs, const Weight& w);

/// Weyl dimension formula within the uncrossed sub-root-system.
Int levi_dim(const LeviContext& ctx, const Weight& w);

/// Full weight diagram with multiplicities (Freudenthal over the Levi).
Character weight_multiset(const LeviContext& ctx, const Weight& w);

ModuleDecomposition tensor_decompose(const LeviContext& ctx, const Weight& v, const Weight& w,
                                     const Budget& budget = {});
ModuleDecomposition sym_power(const LeviContext& ctx, const Weight& v, int k,
                              const Budget& budget = {});

/// -w0(w) over the full system.
Weight dual_weight(const RootSystem& rs, const Weight& w);
/// -w0(w) within the Levi; crossed coordinates negate and ride along.
Weight levi_dual_weight(const LeviContext& ctx, const Weight& w);

// --- character-level helpers shared with the bundle engine ---

Character char_multiply(const Character& a, const Character& b);
Character char_sym_power(const Character& a, int k);
Character char_alt_power(const Character& a, int k);
Character char_dual_levi(const LeviContext& ctx, const Character& a);

/// Decompose a Levi-Weyl-invariant character into irreducibles by repeated
/// highest-weight extraction (max height first, lexicographic tie-break).
ModuleDecomposition extract_decomposition(const LeviContext& ctx, Character ms);

/// Simple-root coordinates of a fundamental-coordinate vector, if it lies
/// in the root lattice (rational solve against the Cartan matrix).
std::optional<std::vector<Rat>> root_coordinates(const RootSystem& rs,
                                                 const std::vector<long long>& fund);

}  // namespace hololab
