#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "toric/report.hpp"
#include "toric/toric_model.hpp"
#include "toric/weight_solver.hpp"

namespace toric {

/// Poisson cohomology via the closed-form weight description: per degree
/// k <= k_max, the weights of S_k(pi) with multiplicities C(n-|I|, k-|I|).
/// Projective spaces ignore degree_bound; affine spaces require it as soon as
/// a contributing family is infinite. Entries for k > n are zero.
CohomologyReport cohomology(const Space& space, const PoissonStructure& Pi, int k_max,
                            std::optional<std::int64_t> degree_bound = {},
                            bool with_basis = false);

/// Degree-0 slice: dimension 1 on projective spaces; the T = {} family's
/// solution count (or infinite) on affine ones.
DegreeEntry h0(const Space& space, const PoissonStructure& Pi,
               std::optional<std::int64_t> degree_bound = {});

/// Arithmetic restatement of the recursion
/// dim H^k = sum_{I in S_{k-1}(pi)} C(n-|I|, k-|I|) + |S(k,pi)|, 1 <= k <= n.
bool recursion_check(const Space& space, const PoissonStructure& Pi, int k);

/// Partition of S_k(pi_st) into cyclic-shift orbits; requires Pi = Pi_st.
/// Orbits are sorted by their lexicographically minimal full profile.
std::vector<std::vector<Weight>> symmetry_orbits(const Space& space,
                                                 const PoissonStructure& Pi, int k);

/// Uniform antisymmetric structure with Gaussian-rational entries whose
/// numerators and denominators are bounded by 10; deterministic in the seed.
PoissonStructure random_structure(int n, unsigned long long seed);

}  // namespace toric
