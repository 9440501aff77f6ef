#include "toric/toric_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric {

PoissonStructure::PoissonStructure(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
    if (n < 1) throw std::invalid_argument("toric_model: dimension must be >= 1");
}

PoissonStructure PoissonStructure::from_entries(int n, const std::vector<Entry>& entries) {
    PoissonStructure p(n);
    std::vector<bool> seen(static_cast<size_t>(n) * n, false);
    for (const auto& e : entries) {
        if (e.i < 1 || e.i > n || e.j < 1 || e.j > n)
            throw std::invalid_argument("toric_model: entry index out of range");
        if (e.i == e.j)
            throw std::invalid_argument("toric_model: diagonal entry breaks antisymmetry");
        size_t lo = static_cast<size_t>(std::min(e.i, e.j) - 1) * n + (std::max(e.i, e.j) - 1);
        if (seen[lo])
            throw std::invalid_argument("toric_model: duplicate (i,j)/(j,i) entry");
        seen[lo] = true;
        p.a_[(e.i - 1) * static_cast<size_t>(n) + (e.j - 1)] = e.a;
        p.a_[(e.j - 1) * static_cast<size_t>(n) + (e.i - 1)] = -e.a;
    }
    return p;
}

PoissonStructure PoissonStructure::scaled(const Scalar& c) const {
    PoissonStructure p(n_);
    for (size_t t = 0; t < a_.size(); ++t) p.a_[t] = a_[t] * c;
    return p;
}

bool PoissonStructure::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<PoissonStructure::Entry> PoissonStructure::upper_entries() const {
    std::vector<Entry> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!at(i, j).is_zero()) out.push_back({i, j, at(i, j)});
    return out;
}

PoissonStructure standard_structure(int n) {
    std::vector<PoissonStructure::Entry> entries;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) entries.push_back({i, j, Scalar(1)});
    return PoissonStructure::from_entries(n, entries);
}

WeightProfile profile(const Space& space, const Weight& I) {
    if (I.n() != space.n)
        throw std::invalid_argument("toric_model: weight length does not match space dimension");
    WeightProfile p{space, {}, {}, 0};
    if (space.projective()) {
        std::int64_t m0 = -std::accumulate(I.coords.begin(), I.coords.end(), std::int64_t{0});
        p.full.reserve(space.n + 1);
        p.full.push_back(m0);
        p.full.insert(p.full.end(), I.coords.begin(), I.coords.end());
        for (int i = 0; i <= space.n; ++i)
            if (p.full[i] == -1) p.minus_set.push_back(i);
    } else {
        p.full = I.coords;
        for (int i = 1; i <= space.n; ++i)
            if (p.full[i - 1] == -1) p.minus_set.push_back(i);
    }
    p.size = static_cast<int>(p.minus_set.size());
    return p;
}

bool admissible(const Space& space, const Weight& I, int k) {
    WeightProfile p = profile(space, I);
    for (auto m : p.full)
        if (m < -1) return false;
    return p.size <= k;
}

ExtVector contract(const Weight& I, const PoissonStructure& Pi) {
    if (I.n() != Pi.n())
        throw std::invalid_argument("toric_model: contract dimension mismatch");
    int n = Pi.n();
    ExtVector c(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        Scalar acc;
        for (int i = 1; i <= n; ++i) {
            if (i == j || I.coords[i - 1] == 0) continue;
            acc += Scalar(static_cast<long>(I.coords[i - 1])) * Pi.at(i, j);
        }
        c.coords[j - 1] = acc;
    }
    return c;
}

ExtElement frame(const Space& space, const WeightProfile& prof) {
    int n = space.n;
    ExtElement result = ExtElement::unit(n);
    for (int idx : prof.minus_set) {
        ExtElement factor(n, 1);
        if (idx == 0) {
            // e_0 = -sum_{i=1}^{n} e_i
            for (int i = 1; i <= n; ++i) factor.add_term({i}, Scalar(-1));
        } else {
            factor = ExtElement::basis_vector(n, idx);
        }
        result = wedge(result, factor);
    }
    return result;
}

bool cocycle_condition(const Space& space, const Weight& I, const PoissonStructure& Pi) {
    WeightProfile prof = profile(space, I);
    ExtElement iota = ExtElement::from_vector(contract(I, Pi));
    return wedge(iota, frame(space, prof)).is_zero();
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * static_cast<unsigned long long>(n - k + t) / t;
    return r;
}

unsigned long long weight_space_dim(const Space& space, const Weight& I, int k) {
    WeightProfile p = profile(space, I);
    if (p.size > k) return 0;
    return binomial(space.n - p.size, k - p.size);
}

Weight cyclic_shift(const Space& space, const Weight& I) {
    if (!space.projective())
        throw std::invalid_argument("toric_model: cyclic_shift is projective-only");
    WeightProfile p = profile(space, I);
    std::vector<std::int64_t> shifted(p.full.begin() + 1, p.full.end());
    shifted.push_back(p.full.front());
    // Drop the new m_0 slot; it is re-derived from the sum-zero relation.
    return Weight(std::vector<std::int64_t>(shifted.begin() + 1, shifted.end()));
}

bool weight_less_full(const Space& space, const Weight& a, const Weight& b) {
    return profile(space, a).full < profile(space, b).full;
}

void sort_weights(const Space& space, std::vector<Weight>& ws) {
    std::sort(ws.begin(), ws.end(), [&](const Weight& a, const Weight& b) {
        return weight_less_full(space, a, b);
    });
}

}  // namespace toric
