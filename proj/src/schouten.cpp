#include "toric/schouten.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "toric/ext.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// PolyMultivector
// ---------------------------------------------------------------------------

PolyMultivector PolyMultivector::monomial(int ambient, std::vector<int> exponents,
                                          std::vector<int> derivs, const Scalar& c) {
    PolyMultivector p(ambient, static_cast<int>(derivs.size()));
    p.add_term(exponents, std::move(derivs), c);
    return p;
}

void PolyMultivector::add_term(const std::vector<int>& exponents, std::vector<int> derivs,
                               const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(exponents.size()) != ambient_)
        throw std::invalid_argument("schouten: exponent tuple length mismatch");
    if (static_cast<int>(derivs.size()) != degree_)
        throw std::invalid_argument("schouten: term degree mismatch");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("schouten: negative exponent");
    for (int d : derivs)
        if (d < 0 || d >= ambient_) throw std::out_of_range("schouten: derivative slot");
    int sign = sort_indices(derivs);
    if (sign == 0) return;
    Key key{exponents, std::move(derivs)};
    Scalar& slot = terms_[key];
    slot += sign < 0 ? -c : c;
    if (slot.is_zero()) terms_.erase(key);
}

PolyMultivector PolyMultivector::operator+(const PolyMultivector& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("schouten: ambient mismatch");
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("schouten: degree mismatch in sum");
    PolyMultivector out = is_zero() ? o : *this;
    const PolyMultivector& rest = is_zero() ? *this : o;
    for (const auto& [key, c] : rest.terms_) {
        Scalar& slot = out.terms_[key];
        slot += c;
        if (slot.is_zero()) out.terms_.erase(key);
    }
    return out;
}

PolyMultivector PolyMultivector::operator*(const Scalar& c) const {
    PolyMultivector out(ambient_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [key, coef] : terms_) out.terms_[key] = coef * c;
    return out;
}

std::vector<std::int64_t> PolyMultivector::term_weight(const Key& key) {
    std::vector<std::int64_t> w(key.first.begin(), key.first.end());
    for (int d : key.second) w[d] -= 1;
    return w;
}

PolyMultivector wedge(const PolyMultivector& x, const PolyMultivector& y) {
    if (x.ambient() != y.ambient()) throw std::invalid_argument("schouten: ambient mismatch");
    PolyMultivector out(x.ambient(), x.degree() + y.degree());
    for (const auto& [xk, xc] : x.terms()) {
        for (const auto& [yk, yc] : y.terms()) {
            std::vector<int> exps = xk.first;
            for (size_t i = 0; i < exps.size(); ++i) exps[i] += yk.first[i];
            std::vector<int> derivs = xk.second;
            derivs.insert(derivs.end(), yk.second.begin(), yk.second.end());
            out.add_term(exps, std::move(derivs), xc * yc);
        }
    }
    return out;
}

namespace {

// Adds outer * sum_i dA/dxi_i * dB/dz_i to `out`. The xi-derivative is the
// right derivative: d(xi_K)/dxi_i = (-1)^{|K|-1-pos} xi_{K minus i}, which is
// what makes the bracket extend the Lie bracket with [f dK, g dL] =
// sum_s (-1)^{p-s} f (d_{k_s} g) d_{K\s}^dL - (graded transpose).
void accumulate_half_bracket(const PolyMultivector& A, const PolyMultivector& B, int outer,
                             PolyMultivector& out) {
    for (const auto& [ak, ac] : A.terms()) {
        const auto& [alpha, K] = ak;
        for (size_t pos = 0; pos < K.size(); ++pos) {
            int i = K[pos];
            int sign = ((K.size() - 1 - pos) % 2 == 0) ? outer : -outer;
            std::vector<int> k_rest;
            k_rest.reserve(K.size() - 1);
            for (size_t t = 0; t < K.size(); ++t)
                if (t != pos) k_rest.push_back(K[t]);
            for (const auto& [bk, bc] : B.terms()) {
                const auto& [beta, L] = bk;
                if (beta[i] == 0) continue;
                std::vector<int> exps(alpha.size());
                for (size_t t = 0; t < exps.size(); ++t) exps[t] = alpha[t] + beta[t];
                exps[i] -= 1;
                std::vector<int> derivs = k_rest;
                derivs.insert(derivs.end(), L.begin(), L.end());
                Scalar coef = ac * bc * Scalar(beta[i]);
                out.add_term(exps, std::move(derivs), sign < 0 ? -coef : coef);
            }
        }
    }
}

}  // namespace

PolyMultivector schouten(const PolyMultivector& P, const PolyMultivector& Q) {
    if (P.ambient() != Q.ambient()) throw std::invalid_argument("schouten: ambient mismatch");
    int p = P.degree(), q = Q.degree();
    if (p + q == 0) return PolyMultivector(P.ambient(), 0);  // [f,g] = 0
    PolyMultivector out(P.ambient(), p + q - 1);
    accumulate_half_bracket(P, Q, 1, out);
    int swap_sign = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;
    accumulate_half_bracket(Q, P, swap_sign, out);
    return out;
}

PolyMultivector lift_structure(const Space& space, const PoissonStructure& Pi) {
    int ambient = space.projective() ? space.n + 1 : space.n;
    int offset = space.projective() ? 0 : -1;
    PolyMultivector out(ambient, 2);
    for (const auto& e : Pi.upper_entries()) {
        std::vector<int> exps(ambient, 0);
        exps[e.i + offset] = 1;
        exps[e.j + offset] = 1;
        out.add_term(exps, {e.i + offset, e.j + offset}, e.a);
    }
    return out;
}

PolyMultivector euler_field(int ambient) {
    PolyMultivector out(ambient, 1);
    for (int i = 0; i < ambient; ++i) {
        std::vector<int> exps(ambient, 0);
        exps[i] = 1;
        out.add_term(exps, {i}, Scalar(1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projective model: F_k on z_0..z_n modulo the Euler subspace
// ---------------------------------------------------------------------------

namespace {

using Key = PolyMultivector::Key;

void compositions(int total, int slots, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, slots - 1, cur, out);
        cur.pop_back();
    }
}

void subsets(int n, int size, int start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        subsets(n, size, v + 1, cur, out);
        cur.pop_back();
    }
}

// Lexicographically sorted monomial basis of F_k: coefficients homogeneous of
// degree k on z_0..z_n, derivative tuples of size k.
std::vector<Key> f_monomials(int n, int k) {
    std::vector<std::vector<int>> exps, tuples;
    std::vector<int> cur;
    compositions(k, n + 1, cur, exps);
    subsets(n + 1, k, 0, cur, tuples);
    std::vector<Key> keys;
    keys.reserve(exps.size() * tuples.size());
    for (const auto& e : exps)
        for (const auto& t : tuples) keys.emplace_back(e, t);
    std::sort(keys.begin(), keys.end());
    return keys;
}

struct ProjectiveDegreeData {
    int n = 0, k = 0;
    std::vector<Key> monomials;  // F_k basis
    std::map<Key, size_t> index;
    size_t euler_rank = 0;
    std::vector<size_t> rep_positions;
    ExactMatrix reducer;  // inverse of [EulerBasis | rep unit columns]

    size_t rep_count() const { return rep_positions.size(); }

    /// Coordinates of v in the coset representatives, reducing modulo the
    /// Euler subspace.
    ExtVector reduce(const PolyMultivector& v) const {
        ExtVector coords(monomials.size());
        for (const auto& [key, c] : v.terms()) {
            auto it = index.find(key);
            if (it == index.end())
                throw std::logic_error("schouten: monomial outside F_k");
            coords.coords[it->second] = c;
        }
        ExtVector y = reducer.apply(coords);
        ExtVector out(rep_count());
        for (size_t r = 0; r < rep_count(); ++r) out.coords[r] = y.coords[euler_rank + r];
        return out;
    }
};

const ProjectiveDegreeData& projective_data(int n, int k) {
    static std::map<std::pair<int, int>, std::unique_ptr<ProjectiveDegreeData>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<ProjectiveDegreeData>();
    data->n = n;
    data->k = k;
    data->monomials = f_monomials(n, k);
    for (size_t i = 0; i < data->monomials.size(); ++i)
        data->index.emplace(data->monomials[i], i);
    size_t dim = data->monomials.size();

    if (k == 0) {
        data->euler_rank = 0;
        data->rep_positions = {0};
        data->reducer = ExactMatrix::identity(1);
        cache[key] = std::move(data);
        return *cache[key];
    }

    // Euler subspace e ^ F_{k-1} as a column space in F_k coordinates.
    std::vector<Key> lower = f_monomials(n, k - 1);
    PolyMultivector euler = euler_field(n + 1);
    ExactMatrix e_cols(dim, lower.size());
    for (size_t j = 0; j < lower.size(); ++j) {
        PolyMultivector u = PolyMultivector::monomial(n + 1, lower[j].first, lower[j].second,
                                                      Scalar(1));
        PolyMultivector ew = wedge(euler, u);
        for (const auto& [mk, c] : ew.terms()) {
            auto it = data->index.find(mk);
            if (it == data->index.end())
                throw std::logic_error("schouten: euler wedge left F_k");
            e_cols.at(it->second, j) = c;
        }
    }

    Rref er = rref(e_cols);
    data->euler_rank = er.rank();
    ExactMatrix basis(dim, data->euler_rank + dim);
    for (size_t b = 0; b < er.pivot_cols.size(); ++b)
        for (size_t i = 0; i < dim; ++i) basis.at(i, b) = e_cols.at(i, er.pivot_cols[b]);
    for (size_t i = 0; i < dim; ++i) basis.at(i, data->euler_rank + i) = Scalar(1);

    // Pivots beyond the Euler block select the lex-first monomials whose
    // classes extend the Euler subspace to all of F_k: the coset reps.
    Rref full = rref(basis);
    ExactMatrix square(dim, dim);
    size_t col = 0;
    for (size_t b = 0; b < data->euler_rank; ++b, ++col)
        for (size_t i = 0; i < dim; ++i) square.at(i, col) = basis.at(i, b);
    for (size_t p : full.pivot_cols) {
        if (p < data->euler_rank) continue;
        size_t mono = p - data->euler_rank;
        data->rep_positions.push_back(mono);
        square.at(mono, col++) = Scalar(1);
    }
    if (col != dim) throw std::logic_error("schouten: coset basis is not complete");
    data->reducer = inverse(square);

    cache[key] = std::move(data);
    return *cache[key];
}

Weight key_weight(const Space& space, const Key& key) {
    auto full = PolyMultivector::term_weight(key);
    if (space.projective())
        return Weight({full.begin() + 1, full.end()});
    return Weight(full);
}

// ---------------------------------------------------------------------------
// Affine model: monomial blocks per weight
// ---------------------------------------------------------------------------

// Explored weights: entries >= -1, positive degree <= bound (weights with an
// entry <= -2 support no monomial multivector at all).
std::vector<Weight> affine_explored_weights(int n, std::int64_t bound) {
    std::vector<Weight> out;
    std::vector<std::int64_t> m(n, -1);
    while (true) {
        std::int64_t pos_deg = 0;
        for (auto v : m) pos_deg += std::max<std::int64_t>(v, 0);
        if (pos_deg <= bound) out.emplace_back(m);
        int pos = n - 1;
        while (pos >= 0 && m[pos] == bound) m[pos--] = -1;
        if (pos < 0) break;
        ++m[pos];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Degree-k monomial basis of the weight block: z^{m + 1_K} d_K for K of size
// k containing every slot with m = -1.
std::vector<std::vector<int>> weight_block_tuples(const Weight& m, int k) {
    int n = m.n();
    std::vector<int> forced, optional_slots;
    for (int i = 0; i < n; ++i)
        (m.coords[i] == -1 ? forced : optional_slots).push_back(i);
    int extra = k - static_cast<int>(forced.size());
    std::vector<std::vector<int>> out;
    if (extra < 0) return out;
    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    subsets(static_cast<int>(optional_slots.size()), extra, 0, cur, picks);
    for (const auto& pick : picks) {
        std::vector<int> K = forced;
        for (int t : pick) K.push_back(optional_slots[t]);
        std::sort(K.begin(), K.end());
        out.push_back(std::move(K));
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolyMultivector block_monomial(const Weight& m, const std::vector<int>& K) {
    int n = m.n();
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i) exps[i] = static_cast<int>(m.coords[i]);
    for (int d : K) exps[d] += 1;
    return PolyMultivector::monomial(n, std::move(exps), K, Scalar(1));
}

// d_pi on one weight block, as an exact matrix between tuple bases.
ExactMatrix weight_block_matrix(const Weight& m, const PolyMultivector& pi_lift,
                                const std::vector<std::vector<int>>& from,
                                const std::vector<std::vector<int>>& to) {
    std::map<std::vector<int>, size_t> to_index;
    for (size_t r = 0; r < to.size(); ++r) to_index.emplace(to[r], r);
    ExactMatrix d(to.size(), from.size());
    for (size_t c = 0; c < from.size(); ++c) {
        PolyMultivector image = schouten(pi_lift, block_monomial(m, from[c]));
        for (const auto& [key, coef] : image.terms()) {
            if (PolyMultivector::term_weight(key) != m.coords)
                throw std::logic_error("schouten: bracket left its weight block");
            auto it = to_index.find(key.second);
            if (it == to_index.end())
                throw std::logic_error("schouten: bracket image outside block basis");
            d.at(it->second, c) = coef;
        }
    }
    return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

SectionBasis section_basis(const Space& space, int k, std::optional<std::int64_t> degree_bound) {
    SectionBasis out{space, k, degree_bound, {}, {}};
    if (space.projective()) {
        if (k < 0 || k > space.n + 1)
            throw std::out_of_range("schouten: projective degree out of range");
        const auto& data = projective_data(space.n, k);
        for (size_t pos : data.rep_positions) {
            const Key& key = data.monomials[pos];
            out.representatives.push_back(
                PolyMultivector::monomial(space.n + 1, key.first, key.second, Scalar(1)));
            out.rep_weights.push_back(key_weight(space, key));
        }
    } else {
        if (!degree_bound)
            throw MissingDegreeBound("schouten: affine section basis needs a degree bound");
        if (k < 0 || k > space.n + 1)
            throw std::out_of_range("schouten: affine degree out of range");
        for (const auto& m : affine_explored_weights(space.n, *degree_bound)) {
            for (const auto& K : weight_block_tuples(m, k)) {
                out.representatives.push_back(block_monomial(m, K));
                out.rep_weights.push_back(m);
            }
        }
    }
    return out;
}

ExactMatrix d_pi_matrix(const Space& space, const PoissonStructure& Pi,
                        const SectionBasis& from, const SectionBasis& to) {
    if (!(from.space == space) || !(to.space == space) || to.k != from.k + 1 ||
        from.degree_bound != to.degree_bound)
        throw std::invalid_argument("schouten: inconsistent section bases");
    if (Pi.n() != space.n) throw std::invalid_argument("schouten: structure dimension mismatch");

    PolyMultivector pi_lift = lift_structure(space, Pi);
    if (space.projective()) {
        const auto& target = projective_data(space.n, to.k);
        ExactMatrix d(target.rep_count(), from.representatives.size());
        for (size_t c = 0; c < from.representatives.size(); ++c) {
            ExtVector coords = target.reduce(schouten(pi_lift, from.representatives[c]));
            for (size_t r = 0; r < target.rep_count(); ++r) d.at(r, c) = coords.coords[r];
        }
        return d;
    }

    std::map<Key, size_t> to_index;
    for (size_t r = 0; r < to.representatives.size(); ++r)
        to_index.emplace(to.representatives[r].terms().begin()->first, r);
    ExactMatrix d(to.representatives.size(), from.representatives.size());
    for (size_t c = 0; c < from.representatives.size(); ++c) {
        PolyMultivector image = schouten(pi_lift, from.representatives[c]);
        for (const auto& [key, coef] : image.terms()) {
            auto it = to_index.find(key);
            if (it == to_index.end())
                throw std::logic_error("schouten: affine image outside section basis");
            d.at(it->second, c) = coef;
        }
    }
    return d;
}

CohomologyReport cohomology_oracle(const Space& space, const PoissonStructure& Pi, int k_max,
                                   std::optional<std::int64_t> degree_bound) {
    if (Pi.n() != space.n) throw std::invalid_argument("schouten: structure dimension mismatch");
    if (k_max < 0) throw std::invalid_argument("schouten: negative k_max");

    CohomologyReport report{space, Pi, "oracle",
                            space.projective() ? std::optional<std::int64_t>{} : degree_bound,
                            false, {}};
    PolyMultivector pi_lift = lift_structure(space, Pi);

    if (space.projective()) {
        int top = std::min(k_max, space.n);
        std::vector<size_t> ranks(top + 1, 0);
        std::vector<size_t> dims(top + 1, 0);
        for (int k = 0; k <= top; ++k) {
            const auto& data = projective_data(space.n, k);
            const auto& target = projective_data(space.n, k + 1);
            dims[k] = data.rep_count();
            ExactMatrix d(target.rep_count(), data.rep_count());
            for (size_t c = 0; c < data.rep_count(); ++c) {
                const Key& key = data.monomials[data.rep_positions[c]];
                PolyMultivector rep =
                    PolyMultivector::monomial(space.n + 1, key.first, key.second, Scalar(1));
                ExtVector coords = target.reduce(schouten(pi_lift, rep));
                for (size_t r = 0; r < target.rep_count(); ++r) d.at(r, c) = coords.coords[r];
            }
            ranks[k] = rank(d);
        }
        for (int k = 0; k <= k_max; ++k) {
            DegreeEntry entry;
            entry.k = k;
            entry.has_weights = false;
            if (k <= top)
                entry.dim = dims[k] - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
            report.H.push_back(std::move(entry));
        }
        return report;
    }

    if (!degree_bound)
        throw MissingDegreeBound("schouten: affine oracle needs a degree bound");
    int n = space.n;
    int top = std::min(k_max, n);

    // Per-weight complexes are exact even under truncation: the differential
    // preserves weight, so the bound only limits which weights are explored.
    std::vector<std::map<Weight, unsigned long long>> h(top + 1);
    for (const auto& m : affine_explored_weights(n, *degree_bound)) {
        std::vector<std::vector<std::vector<int>>> tuples(n + 2);
        for (int k = 0; k <= n + 1; ++k) tuples[k] = weight_block_tuples(m, k);
        std::vector<size_t> ranks(top + 1, 0);
        for (int k = 0; k <= top; ++k)
            ranks[k] = rank(weight_block_matrix(m, pi_lift, tuples[k], tuples[k + 1]));
        for (int k = 0; k <= top; ++k) {
            unsigned long long dim =
                tuples[k].size() - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
            if (dim > 0) h[k][m] = dim;
        }
    }

    for (int k = 0; k <= k_max; ++k) {
        DegreeEntry entry;
        entry.k = k;
        entry.truncated = k <= top;
        if (k <= top) {
            for (const auto& [m, dim] : h[k]) {
                entry.weights.push_back({m, m.coords, dim});
                entry.dim += dim;
            }
        }
        report.H.push_back(std::move(entry));
    }
    return report;
}

}  // namespace toric
