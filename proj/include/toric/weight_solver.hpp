#pragma once

#include <optional>
#include <vector>

#include "toric/toric_model.hpp"

namespace toric {

/// Solution set of one affine pattern: weights with m_t = -1 exactly on T and
/// m_j >= 0 elsewhere, subject to the cocycle condition. `finite` is decided
/// exactly: the family is infinite iff the rational kernel of the constraint
/// system meets the nonnegative orthant outside the origin (an inconsistent
/// system yields an empty, finite family). `free_directions` are the primitive
/// integer extreme rays of that recession cone, so finite <=> empty rays.
struct SolutionFamily {
    std::vector<int> pattern;  // T, sorted, indices in 1..n
    std::vector<Weight> particular;
    std::vector<std::vector<std::int64_t>> free_directions;  // length-n vectors, 0 on T
    bool finite = true;
    bool truncated = false;
};

/// All I with full profile entries >= -1, sum 0 and |I| <= k, by box search
/// over [-1, n]^n (sound: entries >= -1 with total 0 cap every entry at n).
/// Canonically sorted.
std::vector<Weight> enumerate_S(const Space& space, int k);

/// enumerate_S filtered by the cocycle condition.
std::vector<Weight> enumerate_S_pi(const Space& space, int k, const PoissonStructure& Pi);

/// Solves the pattern system over integer vectors. Finite families are listed
/// completely (the polyhedron is bounded; its vertices give the search bound).
/// Infinite families list solutions with sum_j max(m_j,0) <= degree_bound and
/// are marked truncated.
SolutionFamily affine_pattern_solve(int n, const std::vector<int>& T,
                                    const PoissonStructure& Pi,
                                    std::optional<std::int64_t> degree_bound = {});

struct AffineEnumeration {
    std::vector<SolutionFamily> families;  // one per pattern T with |T| <= k

    /// Contributing weights at degrees <= k (|T| <= k), canonically sorted.
    std::vector<Weight> weights_up_to(int k) const;
    bool any_infinite_up_to(int k) const;
    std::vector<std::vector<int>> infinite_patterns_up_to(int k) const;
};

/// Union over all patterns T with |T| <= k of affine_pattern_solve.
AffineEnumeration enumerate_affine(const Space& space, int k, const PoissonStructure& Pi,
                                   std::optional<std::int64_t> degree_bound);

}  // namespace toric
