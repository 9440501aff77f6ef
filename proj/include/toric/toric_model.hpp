#pragma once

#include <cstdint>
#include <vector>

#include "toric/ext.hpp"
#include "toric/linalg.hpp"
#include "toric/scalar.hpp"

namespace toric {

enum class SpaceKind { projective, affine };

/// Ambient toric space: Projective(n) models CP^n (n+1 homogeneous
/// coordinates z_0..z_n), Affine(n) models C^n (coordinates z_1..z_n).
struct Space {
    SpaceKind kind;
    int n;

    static Space cpn(int n) { return {SpaceKind::projective, n}; }
    static Space cn(int n) { return {SpaceKind::affine, n}; }

    bool projective() const { return kind == SpaceKind::projective; }
    friend bool operator==(const Space& a, const Space& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

/// Lattice point I = (m_1,...,m_n) in the character lattice M.
struct Weight {
    std::vector<std::int64_t> coords;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    int n() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (auto m : coords)
            if (m != 0) return false;
        return true;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

/// Derived view of a weight: the full exponent tuple of chi^I, the minus-set
/// T = {i : m_i = -1} and its size |I|. For a projective space the full tuple
/// is (m_0,...,m_n) with m_0 = -sum m_i (never stored on the weight itself);
/// for affine it is (m_1,...,m_n). Indices are semantic: 0..n projective,
/// 1..n affine.
struct WeightProfile {
    Space space;
    std::vector<std::int64_t> full;
    std::vector<int> minus_set;
    int size = 0;

    /// chi^I = z_0^{m_0}...z_n^{m_n} (projective) or z_1^{m_1}...z_n^{m_n}
    /// (affine); the exponent tuple coincides with `full`.
    const std::vector<std::int64_t>& chi_exponents() const { return full; }

    std::int64_t entry(int index) const {
        return full[space.projective() ? index : index - 1];
    }
};

/// Antisymmetric n x n Scalar matrix A housing Pi = sum_{i<j} A_ij e_i^e_j,
/// i.e. the toric bivector pi = rho(Pi) = sum a_ij v_i^v_j. Antisymmetry is
/// a constructor invariant, never re-checked downstream.
class PoissonStructure {
public:
    explicit PoissonStructure(int n);  // zero structure

    struct Entry {
        int i, j;
        Scalar a;
    };
    static PoissonStructure from_entries(int n, const std::vector<Entry>& entries);

    int n() const { return n_; }
    const Scalar& at(int i, int j) const { return a_[(i - 1) * n_ + (j - 1)]; }  // 1-based

    PoissonStructure scaled(const Scalar& c) const;
    bool is_zero() const;
    std::vector<Entry> upper_entries() const;  // i<j, nonzero only

    friend bool operator==(const PoissonStructure& a, const PoissonStructure& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    int n_;
    std::vector<Scalar> a_;
};

/// Pi_st = sum_{1<=i<j<=n} e_i^e_j (all coefficients 1).
PoissonStructure standard_structure(int n);

WeightProfile profile(const Space& space, const Weight& I);

/// Full profile entries all >= -1 and |I| <= k.
bool admissible(const Space& space, const Weight& I, int k);

/// iota_I Pi with c_j = sum_i m_i A_ij, the convention
/// iota_I(e_i^e_j) = <I,e_i> e_j - <I,e_j> e_i.
ExtVector contract(const Weight& I, const PoissonStructure& Pi);

/// Frame E_I = e_{i_1}^...^e_{i_l} over the minus-set, expressed in the
/// basis e_1..e_n; a projective index 0 expands as e_0 = -sum e_i before
/// wedging. Indices are wedged in increasing full-profile order.
ExtElement frame(const Space& space, const WeightProfile& prof);

/// (iota_I Pi) ^ E_I = 0. Total predicate; admissibility is not required.
bool cocycle_condition(const Space& space, const Weight& I, const PoissonStructure& Pi);

/// dim V_I^k = C(n-|I|, k-|I|); 0 when |I| > k.
unsigned long long weight_space_dim(const Space& space, const Weight& I, int k);

/// Projective only: rotates the full profile (m_0,...,m_n) -> (m_1,...,m_n,m_0)
/// and re-normalizes to weight coordinates. sigma^{n+1} = id.
Weight cyclic_shift(const Space& space, const Weight& I);

unsigned long long binomial(int n, int k);

/// Canonical report order: lexicographic on the full profile.
bool weight_less_full(const Space& space, const Weight& a, const Weight& b);
void sort_weights(const Space& space, std::vector<Weight>& ws);

}  // namespace toric
