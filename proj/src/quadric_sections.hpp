#pragma once

// Section-level Koszul differential on a smooth quadric Q_n in P^{n+1}:
// the map H0(O(1)) (x) S^k V* -> H0(O(2)) (x) S^{k-1} V* induced by the
// evaluation resolution of the jet bundle of O(1). Rank is certified from
// below by a modular computation; full rank pins the kernel and cokernel.

#include <cstdint>
#include <optional>

namespace hololab::quadric {

struct KoszulRanks {
    long long domain = 0;
    long long codomain = 0;
    long long rank = 0;  // certified exact rank (only reported when full)
};

/// dim_v = n + 2 homogeneous coordinates; k >= 1 the symmetric power.
/// Returns the ranks when the modular computation certifies full rank,
/// nullopt otherwise.
std::optional<KoszulRanks> certified_koszul_rank(int dim_v, int k);

}  // namespace hololab::quadric
