#include "toric/weight_solver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<std::int64_t> primitive_integer(const ExtVector& v) {
    Integer lcm_den(1), gcd_num(0);
    for (const auto& c : v.coords) lcm_den = lcm(lcm_den, Integer(denominator(c.re())));
    std::vector<Integer> scaled;
    for (const auto& c : v.coords) {
        Integer x = Integer(numerator(c.re())) * (lcm_den / Integer(denominator(c.re())));
        scaled.push_back(x);
        gcd_num = gcd(gcd_num, abs(x));
    }
    std::vector<std::int64_t> out;
    for (auto& x : scaled)
        out.push_back(static_cast<std::int64_t>(gcd_num == 0 ? x : Integer(x / gcd_num)));
    return out;
}

// Vertices of the polyhedron {x >= 0 : Beq x = rhs}: for every subset Z of
// coordinates pinned to zero, keep the restricted system's solution when it
// is unique and nonnegative. Every vertex arises this way, so the list
// contains all vertices (plus possibly non-extreme feasible points, which is
// harmless for both uses below).
std::vector<ExtVector> polytope_points(const ExactMatrix& Beq, const ExactMatrix& rhs) {
    size_t f = Beq.cols();
    std::vector<ExtVector> points;
    for (size_t mask = 0; mask < (size_t{1} << f); ++mask) {
        std::vector<size_t> support;
        for (size_t j = 0; j < f; ++j)
            if (!(mask & (size_t{1} << j))) support.push_back(j);
        ExactMatrix restricted(Beq.rows(), support.size());
        for (size_t i = 0; i < Beq.rows(); ++i)
            for (size_t s = 0; s < support.size(); ++s)
                restricted.at(i, s) = Beq.at(i, support[s]);
        if (rank(restricted) != support.size()) continue;  // not a unique basic solution
        auto sol = solve(restricted, rhs);
        if (!sol) continue;
        ExtVector x(f);
        bool ok = true;
        for (size_t s = 0; s < support.size(); ++s) {
            const Scalar& val = sol->at(s, 0);
            if (val.re() < 0) {
                ok = false;
                break;
            }
            x.coords[support[s]] = val;
        }
        if (ok) points.push_back(std::move(x));
    }
    return points;
}

// Primitive integer extreme rays of {d >= 0 : B d = 0} \ {0}, found as the
// vertices of its slice {sum d = 1}.
std::vector<std::vector<std::int64_t>> recession_rays(const ExactMatrix& B) {
    size_t f = B.cols();
    ExactMatrix sys(B.rows() + 1, f);
    for (size_t i = 0; i < B.rows(); ++i)
        for (size_t j = 0; j < f; ++j) sys.at(i, j) = B.at(i, j);
    for (size_t j = 0; j < f; ++j) sys.at(B.rows(), j) = Scalar(1);
    ExactMatrix rhs(B.rows() + 1, 1);
    rhs.at(B.rows(), 0) = Scalar(1);

    std::vector<std::vector<std::int64_t>> rays;
    for (const auto& p : polytope_points(sys, rhs)) {
        auto ray = primitive_integer(p);
        if (std::find(rays.begin(), rays.end(), ray) == rays.end()) rays.push_back(ray);
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

}  // namespace

std::vector<Weight> enumerate_S(const Space& space, int k) {
    if (!space.projective())
        throw std::invalid_argument("weight_solver: enumerate_S is projective-only");
    if (k < 0 || k > space.n) throw std::out_of_range("weight_solver: k out of range");
    int n = space.n;
    std::vector<Weight> out;
    std::vector<std::int64_t> m(n, -1);
    while (true) {
        std::int64_t sum = std::accumulate(m.begin(), m.end(), std::int64_t{0});
        if (sum <= 1) {  // m_0 = -sum >= -1
            int minus = (sum == 1) ? 1 : 0;
            for (auto v : m) minus += (v == -1);
            if (minus <= k) out.emplace_back(m);
        }
        int pos = n - 1;
        while (pos >= 0 && m[pos] == n) m[pos--] = -1;
        if (pos < 0) break;
        ++m[pos];
    }
    sort_weights(space, out);
    return out;
}

std::vector<Weight> enumerate_S_pi(const Space& space, int k, const PoissonStructure& Pi) {
    std::vector<Weight> out;
    for (const auto& I : enumerate_S(space, k))
        if (cocycle_condition(space, I, Pi)) out.push_back(I);
    return out;
}

SolutionFamily affine_pattern_solve(int n, const std::vector<int>& T,
                                    const PoissonStructure& Pi,
                                    std::optional<std::int64_t> degree_bound) {
    for (int t : T)
        if (t < 1 || t > n) throw std::invalid_argument("weight_solver: pattern index out of range");
    SolutionFamily fam;
    fam.pattern = T;
    std::sort(fam.pattern.begin(), fam.pattern.end());

    std::vector<bool> in_T(n + 1, false);
    for (int t : fam.pattern) in_T[t] = true;
    std::vector<int> free_idx;
    for (int j = 1; j <= n; ++j)
        if (!in_T[j]) free_idx.push_back(j);
    size_t f = free_idx.size();

    auto make_weight = [&](const std::vector<std::int64_t>& x) {
        std::vector<std::int64_t> m(n);
        for (int t : fam.pattern) m[t - 1] = -1;
        for (size_t s = 0; s < f; ++s) m[free_idx[s] - 1] = x[s];
        return Weight(std::move(m));
    };

    if (f == 0) {
        fam.particular.push_back(make_weight({}));
        return fam;
    }

    // The cocycle condition (iota_I Pi) ^ E_I = 0 with E_I = wedge of e_t,
    // t in T, says (iota_I Pi)_j = 0 for every free j. With m_t = -1 pinned:
    //   sum_{i free} m_i A_ij = sum_{t in T} A_tj      (one equation per free j)
    // Each Gaussian-rational equation splits into real and imaginary rows.
    ExactMatrix B(2 * f, f);
    ExactMatrix rhs(2 * f, 1);
    for (size_t row = 0; row < f; ++row) {
        int j = free_idx[row];
        for (size_t s = 0; s < f; ++s) {
            int i = free_idx[s];
            if (i == j) continue;
            const Scalar& a = Pi.at(i, j);
            B.at(2 * row, s) = Scalar(a.re());
            B.at(2 * row + 1, s) = Scalar(a.im());
        }
        Scalar r;
        for (int t : fam.pattern) r += Pi.at(t, j);
        rhs.at(2 * row, 0) = Scalar(r.re());
        rhs.at(2 * row + 1, 0) = Scalar(r.im());
    }

    auto particular_solution = solve(B, rhs);
    if (!particular_solution) return fam;  // inconsistent: empty, finite family

    auto kernel = kernel_basis(B);
    if (!kernel.empty()) {
        fam.free_directions = recession_rays(B);
        fam.finite = fam.free_directions.empty();
    }

    // Search cap for explicit solutions: finite families are bounded
    // polyhedra, so the vertex with the largest coordinate sum caps the
    // enumeration exactly; infinite families use the caller's degree bound.
    std::int64_t cap;
    if (fam.finite) {
        auto vertices = polytope_points(B, rhs);
        if (vertices.empty()) return fam;  // no nonnegative rational point at all
        Rational max_sum(0);
        for (const auto& v : vertices) {
            Rational s(0);
            for (const auto& c : v.coords) s += c.re();
            max_sum = std::max(max_sum, s);
        }
        cap = static_cast<std::int64_t>(numerator(max_sum) / denominator(max_sum)) + 1;
    } else {
        fam.truncated = true;
        if (!degree_bound) return fam;
        cap = *degree_bound;
    }

    // Integer points x >= 0 with sum <= cap satisfying B x = rhs exactly.
    std::vector<std::int64_t> x(f, 0);
    auto satisfies = [&] {
        for (size_t i = 0; i < 2 * f; ++i) {
            Rational acc(0);
            for (size_t s = 0; s < f; ++s)
                if (x[s] != 0) acc += B.at(i, s).re() * static_cast<long>(x[s]);
            if (acc != rhs.at(i, 0).re()) return false;
        }
        return true;
    };
    std::function<void(size_t, std::int64_t)> scan = [&](size_t s, std::int64_t left) {
        if (s == f) {
            if (satisfies()) fam.particular.push_back(make_weight(x));
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            x[s] = v;
            scan(s + 1, left - v);
        }
        x[s] = 0;
    };
    scan(0, cap);

    std::sort(fam.particular.begin(), fam.particular.end());
    return fam;
}

std::vector<Weight> AffineEnumeration::weights_up_to(int k) const {
    std::vector<Weight> out;
    for (const auto& fam : families)
        if (static_cast<int>(fam.pattern.size()) <= k)
            out.insert(out.end(), fam.particular.begin(), fam.particular.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool AffineEnumeration::any_infinite_up_to(int k) const {
    for (const auto& fam : families)
        if (static_cast<int>(fam.pattern.size()) <= k && !fam.finite) return true;
    return false;
}

std::vector<std::vector<int>> AffineEnumeration::infinite_patterns_up_to(int k) const {
    std::vector<std::vector<int>> out;
    for (const auto& fam : families)
        if (static_cast<int>(fam.pattern.size()) <= k && !fam.finite) out.push_back(fam.pattern);
    return out;
}

AffineEnumeration enumerate_affine(const Space& space, int k, const PoissonStructure& Pi,
                                   std::optional<std::int64_t> degree_bound) {
    if (space.projective())
        throw std::invalid_argument("weight_solver: enumerate_affine is affine-only");
    if (k < 0 || k > space.n) throw std::out_of_range("weight_solver: k out of range");
    if (degree_bound && *degree_bound < 0)
        throw std::invalid_argument("weight_solver: negative degree bound");
    int n = space.n;

    AffineEnumeration result;
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> T;
        for (int j = 1; j <= n; ++j)
            if (mask & (size_t{1} << (j - 1))) T.push_back(j);
        if (static_cast<int>(T.size()) > k) continue;
        result.families.push_back(affine_pattern_solve(n, T, Pi, degree_bound));
    }
    std::sort(result.families.begin(), result.families.end(),
              [](const SolutionFamily& a, const SolutionFamily& b) {
                  if (a.pattern.size() != b.pattern.size())
                      return a.pattern.size() < b.pattern.size();
                  return a.pattern < b.pattern;
              });
    return result;
}

}  // namespace toric
