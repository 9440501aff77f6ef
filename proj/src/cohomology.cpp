#include "toric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace toric {

namespace {

// Complement pool for V_I^k basis tuples: {1..n} minus (T\{0}) minus, when
// 0 is in T, the smallest index outside T (which stands in for the e_0
// direction). The pool always has n - |T| elements.
std::vector<int> complement_pool(const Space& space, const WeightProfile& prof) {
    std::vector<bool> excluded(space.n + 1, false);
    bool has_zero = false;
    for (int t : prof.minus_set) {
        if (t == 0)
            has_zero = true;
        else
            excluded[t] = true;
    }
    if (has_zero) {
        for (int j = 1; j <= space.n; ++j) {
            if (!excluded[j]) {
                excluded[j] = true;
                break;
            }
        }
    }
    std::vector<int> pool;
    for (int j = 1; j <= space.n; ++j)
        if (!excluded[j]) pool.push_back(j);
    return pool;
}

void append_tuples(const std::vector<int>& pool, int size, std::vector<int>& cur,
                   size_t start, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (size_t t = start; t < pool.size(); ++t) {
        cur.push_back(pool[t]);
        append_tuples(pool, size, cur, t + 1, out);
        cur.pop_back();
    }
}

// Exact-rank certificate that the chosen complement tuples span V_I^k: the
// elements E_I ^ e_S must be linearly independent in the exterior algebra.
void assert_independent(const Space& space, const WeightProfile& prof,
                        const std::vector<std::vector<int>>& tuples) {
    if (tuples.empty()) return;
    ExtElement fr = frame(space, prof);
    std::vector<ExtElement> elements;
    std::map<IndexTuple, size_t> rows;
    for (const auto& S : tuples) {
        ExtElement el = fr;
        for (int j : S) el = wedge(el, ExtElement::basis_vector(space.n, j));
        for (const auto& [idx, c] : el.terms()) rows.emplace(idx, rows.size());
        elements.push_back(std::move(el));
    }
    ExactMatrix m(rows.size(), elements.size());
    for (size_t col = 0; col < elements.size(); ++col)
        for (const auto& [idx, c] : elements[col].terms()) m.at(rows.at(idx), col) = c;
    if (rank(m) != tuples.size())
        throw std::logic_error("cohomology: complement convention produced dependent basis");
}

std::vector<BasisDescriptor> weight_basis(const Space& space, const Weight& I, int k) {
    WeightProfile prof = profile(space, I);
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    append_tuples(complement_pool(space, prof), k - prof.size, cur, 0, tuples);
    assert_independent(space, prof, tuples);
    std::vector<BasisDescriptor> out;
    for (auto& S : tuples)
        out.push_back({I, prof.full, prof.minus_set, std::move(S)});
    return out;
}

DegreeEntry projective_entry(const Space& space, const PoissonStructure& Pi, int k,
                             bool with_basis) {
    DegreeEntry entry;
    entry.k = k;
    if (k > space.n) return entry;
    for (const auto& I : enumerate_S_pi(space, k, Pi)) {
        WeightEntry we{I, profile(space, I).full, weight_space_dim(space, I, k)};
        entry.dim += we.mult;
        if (with_basis) {
            auto b = weight_basis(space, I, k);
            entry.basis.insert(entry.basis.end(), b.begin(), b.end());
        }
        entry.weights.push_back(std::move(we));
    }
    return entry;
}

DegreeEntry affine_entry(const Space& space, int k, const AffineEnumeration& enumeration,
                         std::optional<std::int64_t> degree_bound, bool with_basis) {
    DegreeEntry entry;
    entry.k = k;
    if (k > space.n) return entry;
    if (enumeration.any_infinite_up_to(k)) {
        if (!degree_bound) {
            std::string msg = "cohomology: infinite weight family at k=" + std::to_string(k) +
                              " (pattern";
            for (const auto& T : enumeration.infinite_patterns_up_to(k)) {
                msg += " T={";
                for (size_t i = 0; i < T.size(); ++i) msg += (i ? "," : "") + std::to_string(T[i]);
                msg += "}";
            }
            throw MissingDegreeBound(msg + "); pass a degree bound");
        }
        entry.infinite = true;
        entry.witness = enumeration.infinite_patterns_up_to(k);
        entry.truncated = true;
    }
    for (const auto& I : enumeration.weights_up_to(k)) {
        WeightEntry we{I, profile(space, I).full, weight_space_dim(space, I, k)};
        entry.dim += we.mult;
        if (with_basis) {
            auto b = weight_basis(space, I, k);
            entry.basis.insert(entry.basis.end(), b.begin(), b.end());
        }
        entry.weights.push_back(std::move(we));
    }
    return entry;
}

}  // namespace

CohomologyReport cohomology(const Space& space, const PoissonStructure& Pi, int k_max,
                            std::optional<std::int64_t> degree_bound, bool with_basis) {
    if (Pi.n() != space.n)
        throw std::invalid_argument("cohomology: structure dimension does not match space");
    if (k_max < 0) throw std::invalid_argument("cohomology: negative k_max");

    CohomologyReport report{space, Pi, "closed",
                            space.projective() ? std::nullopt : degree_bound, with_basis, {}};
    if (space.projective()) {
        for (int k = 0; k <= k_max; ++k)
            report.H.push_back(projective_entry(space, Pi, k, with_basis));
    } else {
        auto enumeration =
            enumerate_affine(space, std::min(k_max, space.n), Pi, degree_bound);
        for (int k = 0; k <= k_max; ++k)
            report.H.push_back(affine_entry(space, k, enumeration, degree_bound, with_basis));
    }
    return report;
}

DegreeEntry h0(const Space& space, const PoissonStructure& Pi,
               std::optional<std::int64_t> degree_bound) {
    if (space.projective()) return cohomology(space, Pi, 0).H.front();
    // Total predicate: an infinite Casimir family reports as infinite rather
    // than raising, listing whatever fits under the bound (possibly nothing).
    SolutionFamily fam = affine_pattern_solve(space.n, {}, Pi, degree_bound);
    DegreeEntry entry;
    entry.k = 0;
    if (!fam.finite) {
        entry.infinite = true;
        entry.witness = {fam.pattern};
        entry.truncated = true;
    }
    for (const auto& I : fam.particular) {
        entry.weights.push_back({I, profile(space, I).full, 1});
        entry.dim += 1;
    }
    return entry;
}

bool recursion_check(const Space& space, const PoissonStructure& Pi, int k) {
    if (!space.projective())
        throw std::invalid_argument("cohomology: recursion_check is projective-only");
    if (k < 1 || k > space.n) throw std::out_of_range("cohomology: k out of range");

    unsigned long long dim_k = 0;
    unsigned long long from_previous = 0;
    unsigned long long new_weights = 0;
    for (const auto& I : enumerate_S_pi(space, k, Pi)) {
        dim_k += weight_space_dim(space, I, k);
        if (profile(space, I).size == k)
            ++new_weights;
        else
            from_previous += weight_space_dim(space, I, k);
    }
    return dim_k == from_previous + new_weights;
}

std::vector<std::vector<Weight>> symmetry_orbits(const Space& space,
                                                 const PoissonStructure& Pi, int k) {
    if (!space.projective())
        throw std::invalid_argument("cohomology: symmetry_orbits is projective-only");
    if (!(Pi == standard_structure(space.n)))
        throw std::invalid_argument(
            "cohomology: symmetry_orbits requires the standard structure");

    std::vector<Weight> remaining = enumerate_S_pi(space, k, Pi);
    std::vector<std::vector<Weight>> orbits;
    while (!remaining.empty()) {
        Weight seed = remaining.front();
        std::vector<Weight> orbit{seed};
        Weight w = cyclic_shift(space, seed);
        while (!(w == seed)) {
            orbit.push_back(w);
            w = cyclic_shift(space, w);
        }
        sort_weights(space, orbit);
        std::vector<Weight> next;
        for (const auto& r : remaining)
            if (std::find(orbit.begin(), orbit.end(), r) == orbit.end()) next.push_back(r);
        remaining = std::move(next);
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(),
              [&](const std::vector<Weight>& a, const std::vector<Weight>& b) {
                  return weight_less_full(space, a.front(), b.front());
              });
    return orbits;
}

PoissonStructure random_structure(int n, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng](long lo, long hi) {
        auto span = static_cast<unsigned long long>(hi - lo + 1);
        unsigned long long limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
        unsigned long long v;
        do {
            v = rng();
        } while (v >= limit);
        return lo + static_cast<long>(v % span);
    };
    std::vector<PoissonStructure::Entry> entries;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational re(draw(-10, 10), draw(1, 10));
            Rational im(draw(-10, 10), draw(1, 10));
            entries.push_back({i, j, Scalar(re, im)});
        }
    return PoissonStructure::from_entries(n, entries);
}

}  // namespace toric
