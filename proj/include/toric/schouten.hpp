#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/report.hpp"
#include "toric/toric_model.hpp"

// Brute-force verification path. This module represents global multivector
// fields as explicit polynomial data, implements the Schouten-Nijenhuis
// bracket from its defining axioms and computes cohomology dimensions by
// exact rank. It never consults the weight solver or the closed-form engine.

namespace toric {

/// Polynomial multivector field sum c * z^alpha * d/dz_{K}. `ambient` counts
/// the z variables: n+1 for the homogeneous CP^n model on z_0..z_n, n for
/// C^n on z_1..z_n. Exponent tuples use 0-based slots; derivative tuples are
/// strictly increasing 0-based slots. Terms are canonical (no zeros stored).
/// In the homogeneous model every term of a degree-k field has polynomial
/// degree k.
class PolyMultivector {
public:
    // (exponents, derivative slots); lexicographic map order fixes every
    // pivoting and printing order downstream.
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    PolyMultivector(int ambient, int degree) : ambient_(ambient), degree_(degree) {}

    static PolyMultivector monomial(int ambient, std::vector<int> exponents,
                                    std::vector<int> derivs, const Scalar& c);

    int ambient() const { return ambient_; }
    int degree() const { return degree_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * z^exponents * d/dz_derivs; derivs may arrive unsorted.
    void add_term(const std::vector<int>& exponents, std::vector<int> derivs, const Scalar& c);

    PolyMultivector operator+(const PolyMultivector& o) const;
    PolyMultivector operator*(const Scalar& c) const;
    PolyMultivector operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const PolyMultivector& a, const PolyMultivector& b) {
        return a.terms_ == b.terms_;
    }

    /// Torus weight of a monomial term: alpha - indicator(K).
    static std::vector<std::int64_t> term_weight(const Key& key);

private:
    int ambient_;
    int degree_;
    std::map<Key, Scalar> terms_;
};

PolyMultivector wedge(const PolyMultivector& x, const PolyMultivector& y);

/// Schouten-Nijenhuis bracket, degree deg P + deg Q - 1. Extends the Lie
/// bracket of vector fields and the action of vector fields on functions;
/// graded antisymmetric, graded Leibniz, graded Jacobi.
PolyMultivector schouten(const PolyMultivector& P, const PolyMultivector& Q);

/// Lift of pi = sum a_ij v_i ^ v_j to the model: sum a_ij (z_i d_i)^(z_j d_j).
/// In the homogeneous CP^n model the z slots are 0..n and the lattice indices
/// 1..n land on slots 1..n; on C^n index i lands on slot i-1.
PolyMultivector lift_structure(const Space& space, const PoissonStructure& Pi);

/// Euler field sum_i z_i d/dz_i (homogeneous model).
PolyMultivector euler_field(int ambient);

/// Monomial spanning set of the degree-k sections.
/// Projective: coset representatives of F_k modulo the Euler subspace
/// e^F_{k-1}, chosen by exact elimination in lexicographic monomial order.
/// Affine: all monomial k-vectors whose weight has entries >= -1 and positive
/// degree <= degree_bound, grouped per weight.
struct SectionBasis {
    Space space{SpaceKind::projective, 1};
    int k = 0;
    std::optional<std::int64_t> degree_bound;
    std::vector<PolyMultivector> representatives;
    std::vector<Weight> rep_weights;  // parallel to representatives
};

SectionBasis section_basis(const Space& space, int k,
                           std::optional<std::int64_t> degree_bound = {});

/// Matrix of v -> [pi~, v] from `from` (degree k) to `to` (degree k+1)
/// coordinates; projective images are reduced modulo the Euler subspace
/// before coordinates are read. Consecutive matrices compose to zero.
ExactMatrix d_pi_matrix(const Space& space, const PoissonStructure& Pi,
                        const SectionBasis& from, const SectionBasis& to);

/// dim H^k = dim ker d^k - dim im d^{k-1} via exact ranks, never consulting
/// the closed-form theorems. Affine output is per weight block (exact under
/// truncation because the differential preserves weight).
CohomologyReport cohomology_oracle(const Space& space, const PoissonStructure& Pi, int k_max,
                                   std::optional<std::int64_t> degree_bound = {});

}  // namespace toric
