// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; runtime limits are asserted with wall
// clocks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "toric/cli.hpp"
#include "toric/cohomology.hpp"
#include "toric/report.hpp"
#include "toric/schouten.hpp"
#include "toric/weight_solver.hpp"

using namespace toric;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double limit_seconds;

    void report(bool ok, double seconds, const std::string& detail = "") const {
        bool in_time = seconds <= limit_seconds;
        if (ok && in_time) {
            std::printf("PASS  %-52s (%.2fs)\n", name.c_str(), seconds);
        } else {
            ++failures;
            std::printf("FAIL  %-52s (%.2fs%s)%s%s\n", name.c_str(), seconds,
                        in_time ? "" : ", over time limit", detail.empty() ? "" : " ",
                        detail.c_str());
        }
    }
};

std::vector<unsigned long long> dims(const CohomologyReport& r) {
    std::vector<unsigned long long> out;
    for (const auto& e : r.H) out.push_back(e.dim);
    return out;
}

std::set<std::vector<std::int64_t>> full_set(const DegreeEntry& e) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& w : e.weights) out.insert(w.full);
    return out;
}

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.report(ok, seconds, detail);
}

}  // namespace

int main() {
    // 1. CP^2 standard structure: dims (1,2,4), exact H^2 weight set.
    run({"1. CP^2 standard structure", 1.0}, [](std::string& detail) {
        auto r = cohomology(Space::cpn(2), standard_structure(2), 4);
        if (dims(r) != std::vector<unsigned long long>{1, 2, 4, 0, 0}) {
            detail = "dims mismatch";
            return false;
        }
        std::set<std::vector<std::int64_t>> expected = {
            {0, 0, 0}, {-1, -1, 2}, {-1, 2, -1}, {2, -1, -1}};
        if (full_set(r.H[2]) != expected) {
            detail = "H^2 weight set mismatch";
            return false;
        }
        return true;
    });

    // 2. CP^3 standard structure: dims (1,3,9,11); H^2 three-part basis and
    //    the 11-tuple H^3 table.
    run({"2. CP^3 standard structure", 5.0}, [](std::string& detail) {
        auto r = cohomology(Space::cpn(3), standard_structure(3), 3, {}, true);
        if (dims(r) != std::vector<unsigned long long>{1, 3, 9, 11}) {
            detail = "dims mismatch";
            return false;
        }
        std::set<std::vector<std::int64_t>> expected2 = {
            {0, 0, 0, 0},   {-1, 1, -1, 1}, {-1, 2, -1, 0}, {-1, 0, -1, 2},
            {1, -1, 1, -1}, {2, -1, 0, -1}, {0, -1, 2, -1}};
        if (full_set(r.H[2]) != expected2) {
            detail = "H^2 weight set mismatch";
            return false;
        }
        // part (a): weight 0 carries multiplicity 3 = dim W^2; parts (b),(c):
        // frames v0^v2 and v1^v3
        for (const auto& w : r.H[2].weights) {
            unsigned long long want = w.weight.is_zero() ? 3 : 1;
            if (w.mult != want) {
                detail = "H^2 multiplicity mismatch";
                return false;
            }
        }
        int part_b = 0, part_c = 0;
        for (const auto& b : r.H[2].basis) {
            if (b.frame_indices == std::vector<int>{0, 2}) ++part_b;
            if (b.frame_indices == std::vector<int>{1, 3}) ++part_c;
        }
        if (part_b != 3 || part_c != 3) {
            detail = "H^2 basis frames mismatch";
            return false;
        }
        std::set<std::vector<std::int64_t>> expected3 = {
            {0, 0, 0, 0},    {-1, 1, -1, 1},  {-1, 2, -1, 0},  {-1, 0, -1, 2},
            {1, -1, 1, -1},  {2, -1, 0, -1},  {0, -1, 2, -1},  {-1, -1, -1, 3},
            {-1, -1, 3, -1}, {-1, 3, -1, -1}, {3, -1, -1, -1}};
        if (full_set(r.H[3]) != expected3 || r.H[3].weights.size() != 11) {
            detail = "H^3 weight table mismatch";
            return false;
        }
        return true;
    });

    // 3. dim H^1(pi_st) = n for n = 2..6.
    run({"3. dim H^1 = n for n = 2..6", 30.0}, [](std::string& detail) {
        for (int n = 2; n <= 6; ++n) {
            auto r = cohomology(Space::cpn(n), standard_structure(n), 1);
            if (r.H[1].dim != static_cast<unsigned long long>(n)) {
                detail = "failed at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    // 4. Engine-oracle equivalence on CP^2 and CP^3: pi_st, 0 and 20 random
    //    Gaussian-rational structures per space.
    run({"4. engine-oracle equivalence (incl. 2x20 random)", 120.0}, [](std::string& detail) {
        for (int n = 2; n <= 3; ++n) {
            Space space = Space::cpn(n);
            std::vector<PoissonStructure> structures = {standard_structure(n),
                                                        PoissonStructure(n)};
            for (unsigned long long seed = 1; seed <= 20; ++seed)
                structures.push_back(random_structure(n, seed));
            for (size_t s = 0; s < structures.size(); ++s) {
                Diff diff = compare(cohomology(space, structures[s], n),
                                    cohomology_oracle(space, structures[s], n));
                if (!diff.empty()) {
                    detail = "diff at n=" + std::to_string(n) + " structure " +
                             std::to_string(s) + ": " + diff.items.front();
                    return false;
                }
            }
        }
        return true;
    });

    // 5. Zero structure on CP^2: both paths (1, 8, 10); 8 = n^2+2n and 10 =
    //    deg-3 monomial count come from the oracle's section bases.
    run({"5. CP^2 zero structure both paths (1,8,10)", 10.0}, [](std::string& detail) {
        auto engine = cohomology(Space::cpn(2), PoissonStructure(2), 2);
        auto oracle = cohomology_oracle(Space::cpn(2), PoissonStructure(2), 2);
        if (dims(engine) != std::vector<unsigned long long>{1, 8, 10} ||
            dims(oracle) != std::vector<unsigned long long>{1, 8, 10}) {
            detail = "dims mismatch";
            return false;
        }
        if (section_basis(Space::cpn(2), 1).representatives.size() != 8 ||
            section_basis(Space::cpn(2), 2).representatives.size() != 10) {
            detail = "section basis sizes mismatch";
            return false;
        }
        return true;
    });

    // 6. Affine C^2 with a = 1 and a = 2+i: dims (1,2,2), all families
    //    finite; oracle agrees per weight block under bound 6.
    run({"6. affine C^2 dims (1,2,2), oracle per weight", 30.0}, [](std::string& detail) {
        for (const Scalar& a : {Scalar(1), Scalar(Rational(2), Rational(1))}) {
            auto pi = PoissonStructure::from_entries(2, {{1, 2, a}});
            auto engine = cohomology(Space::cn(2), pi, 2, 6);
            if (dims(engine) != std::vector<unsigned long long>{1, 2, 2}) {
                detail = "engine dims mismatch for a = " + a.str();
                return false;
            }
            for (const auto& e : engine.H)
                if (e.infinite || e.truncated) {
                    detail = "family flagged infinite for a = " + a.str();
                    return false;
                }
            auto oracle = cohomology_oracle(Space::cn(2), pi, 2, 6);
            Diff diff = compare(engine, oracle);
            if (!diff.empty()) {
                detail = "oracle diff for a = " + a.str() + ": " + diff.items.front();
                return false;
            }
        }
        return true;
    });

    // 7. Property suites, each >= 200 randomized exact cases.
    run({"7a. wedge bilinearity/antisymmetry (>=200)", 30.0}, [](std::string& detail) {
        std::mt19937_64 rng(101);
        auto rand_scalar = [&rng] {
            return Scalar(Rational(static_cast<long>(rng() % 21) - 10,
                                   static_cast<long>(rng() % 10) + 1),
                          Rational(static_cast<long>(rng() % 21) - 10,
                                   static_cast<long>(rng() % 10) + 1));
        };
        for (int t = 0; t < 200; ++t) {
            int n = 2 + rng() % 3;
            auto rand_el = [&](int d) {
                ExtElement e(n, d);
                for (int trm = 0; trm < 2; ++trm) {
                    IndexTuple idx;
                    std::vector<int> pool;
                    for (int i = 1; i <= n; ++i) pool.push_back(i);
                    for (int s = 0; s < d; ++s) {
                        size_t pick = rng() % pool.size();
                        idx.push_back(pool[pick]);
                        pool.erase(pool.begin() + pick);
                    }
                    e.add_term(idx, rand_scalar());
                }
                return e;
            };
            int dx = rng() % 2 + 1, dy = rng() % 2 + 1;
            if (dx > n || dy > n) continue;
            ExtElement x = rand_el(dx), y = rand_el(dy), z = rand_el(dy);
            Scalar a = rand_scalar(), b = rand_scalar();
            if (!(wedge(x, y * a + z * b) == wedge(x, y) * a + wedge(x, z) * b)) {
                detail = "bilinearity failed";
                return false;
            }
            ExtElement yx = wedge(y, x);
            if (!(wedge(x, y) == ((dx * dy) % 2 ? yx * Scalar(-1) : yx))) {
                detail = "antisymmetry failed";
                return false;
            }
        }
        return true;
    });

    run({"7b. Schouten antisymmetry/Leibniz/Jacobi (>=200)", 60.0}, [](std::string& detail) {
        std::mt19937_64 rng(103);
        auto rand_scalar = [&rng] {
            return Scalar(Rational(static_cast<long>(rng() % 11) - 5,
                                   static_cast<long>(rng() % 5) + 1));
        };
        auto rand_mv = [&](int nvars, int degree) {
            PolyMultivector p(nvars, degree);
            for (int trm = 0; trm < 2; ++trm) {
                std::vector<int> exps(nvars);
                for (int& e : exps) e = rng() % 2;
                std::vector<int> pool, derivs;
                for (int i = 0; i < nvars; ++i) pool.push_back(i);
                for (int d = 0; d < degree; ++d) {
                    size_t pick = rng() % pool.size();
                    derivs.push_back(pool[pick]);
                    pool.erase(pool.begin() + pick);
                }
                p.add_term(exps, derivs, rand_scalar());
            }
            return p;
        };
        for (int t = 0; t < 200; ++t) {
            int n = 2 + rng() % 2;
            int p = rng() % 3, q = rng() % 3, r = rng() % 2;
            PolyMultivector P = rand_mv(n, p), Q = rand_mv(n, q), R = rand_mv(n, r);
            PolyMultivector anti = schouten(Q, P) * Scalar(((p - 1) * (q - 1)) % 2 ? 1 : -1);
            if (!(schouten(P, Q) == anti)) {
                detail = "antisymmetry failed";
                return false;
            }
            PolyMultivector leib_l = schouten(P, wedge(Q, R));
            PolyMultivector leib_r =
                wedge(schouten(P, Q), R) +
                wedge(Q, schouten(P, R)) * Scalar(((p - 1) * q) % 2 ? -1 : 1);
            if (!(leib_l == leib_r)) {
                detail = "Leibniz failed";
                return false;
            }
            PolyMultivector jac_l = schouten(P, schouten(Q, R));
            PolyMultivector jac_r =
                schouten(schouten(P, Q), R) +
                schouten(Q, schouten(P, R)) * Scalar(((p - 1) * (q - 1)) % 2 ? -1 : 1);
            if (!(jac_l == jac_r)) {
                detail = "Jacobi failed";
                return false;
            }
        }
        return true;
    });

    run({"7c. d after d = 0 for every assembled complex", 60.0}, [](std::string& detail) {
        for (int n = 2; n <= 3; ++n) {
            Space space = Space::cpn(n);
            std::vector<SectionBasis> bases;
            for (int k = 0; k <= n + 1; ++k) bases.push_back(section_basis(space, k));
            std::vector<PoissonStructure> structures = {standard_structure(n),
                                                        PoissonStructure(n)};
            for (unsigned long long seed = 20; seed < 24; ++seed)
                structures.push_back(random_structure(n, seed));
            for (const auto& pi : structures) {
                for (int k = 0; k + 1 <= n; ++k) {
                    ExactMatrix d1 = d_pi_matrix(space, pi, bases[k], bases[k + 1]);
                    ExactMatrix d2 = d_pi_matrix(space, pi, bases[k + 1], bases[k + 2]);
                    if (!d2.multiply(d1).is_zero()) {
                        detail = "projective d^2 != 0 at n=" + std::to_string(n);
                        return false;
                    }
                }
            }
        }
        Space c2 = Space::cn(2);
        auto a0 = section_basis(c2, 0, 4), a1 = section_basis(c2, 1, 4),
             a2 = section_basis(c2, 2, 4), a3 = section_basis(c2, 3, 4);
        for (unsigned long long seed = 30; seed < 34; ++seed) {
            PoissonStructure pi = random_structure(2, seed);
            ExactMatrix d0 = d_pi_matrix(c2, pi, a0, a1);
            ExactMatrix d1 = d_pi_matrix(c2, pi, a1, a2);
            ExactMatrix d2 = d_pi_matrix(c2, pi, a2, a3);
            if (!d1.multiply(d0).is_zero() || !d2.multiply(d1).is_zero()) {
                detail = "affine d^2 != 0";
                return false;
            }
        }
        return true;
    });

    run({"7d. weight preservation of d_pi (>=200)", 30.0}, [](std::string& detail) {
        std::mt19937_64 rng(107);
        int cases = 0;
        while (cases < 200) {
            int n = 2 + rng() % 2;
            bool projective = cases % 2 == 0;
            int nvars = projective ? n + 1 : n;
            Space space = projective ? Space::cpn(n) : Space::cn(n);
            PoissonStructure pi = random_structure(n, rng());
            std::vector<int> exps(nvars), derivs;
            for (int& e : exps) e = rng() % 3;
            for (int i = 0; i < nvars; ++i)
                if (rng() % 2 && derivs.size() < 2) derivs.push_back(i);
            PolyMultivector mono = PolyMultivector::monomial(
                nvars, exps, derivs, Scalar(1));
            auto weight = PolyMultivector::term_weight(mono.terms().begin()->first);
            PolyMultivector image = schouten(lift_structure(space, pi), mono);
            for (const auto& [key, c] : image.terms()) {
                if (PolyMultivector::term_weight(key) != weight) {
                    detail = "weight changed";
                    return false;
                }
            }
            ++cases;
        }
        return true;
    });

    run({"7e. scale invariance of reports (>=200)", 60.0}, [](std::string& detail) {
        std::mt19937_64 rng(109);
        for (int t = 0; t < 200; ++t) {
            int n = 2 + t % 2;
            PoissonStructure pi = random_structure(n, rng());
            long re_num = static_cast<long>(rng() % 21) - 10;
            long im_num = static_cast<long>(rng() % 21) - 10;
            Scalar c(Rational(re_num, static_cast<long>(rng() % 10) + 1),
                     Rational(im_num, static_cast<long>(rng() % 10) + 1));
            if (c.is_zero()) c = Scalar(1);
            auto a = cohomology(Space::cpn(n), pi, n);
            auto b = cohomology(Space::cpn(n), pi.scaled(c), n);
            for (size_t k = 0; k < a.H.size(); ++k) {
                if (a.H[k].dim != b.H[k].dim || full_set(a.H[k]) != full_set(b.H[k])) {
                    detail = "report changed under scaling";
                    return false;
                }
            }
        }
        return true;
    });

    run({"7f. recursion_check for all computed (space, Pi, k)", 60.0},
        [](std::string& detail) {
            std::mt19937_64 rng(113);
            for (int t = 0; t < 200; ++t) {
                int n = 2 + t % 2;
                PoissonStructure pi =
                    (t % 5 == 0) ? standard_structure(n)
                                 : (t % 5 == 1 ? PoissonStructure(n) : random_structure(n, rng()));
                for (int k = 1; k <= n; ++k) {
                    if (!recursion_check(Space::cpn(n), pi, k)) {
                        detail = "recursion failed at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k);
                        return false;
                    }
                }
            }
            return true;
        });

    // 8. Z_{n+1} symmetry for n = 2, 3.
    run({"8. Z_{n+1} symmetry of S_k(pi_st), n = 2, 3", 30.0}, [](std::string& detail) {
        for (int n = 2; n <= 3; ++n) {
            Space space = Space::cpn(n);
            PoissonStructure st = standard_structure(n);
            for (int k = 0; k <= n; ++k) {
                auto sk = enumerate_S_pi(space, k, st);
                std::set<Weight> sk_set(sk.begin(), sk.end());
                for (const auto& I : sk) {
                    if (!sk_set.count(cyclic_shift(space, I))) {
                        detail = "shift left S_k at n=" + std::to_string(n);
                        return false;
                    }
                }
                unsigned long long orbit_total = 0;
                for (const auto& orbit : symmetry_orbits(space, st, k))
                    for (const auto& w : orbit) orbit_total += weight_space_dim(space, w, k);
                if (orbit_total != cohomology(space, st, k).H[k].dim) {
                    detail = "orbit multiplicity sum mismatch";
                    return false;
                }
            }
        }
        return true;
    });

    // 9. Finiteness truthfulness: C^2 zero structure is infinite at every k
    //    with witness T = {}; no silent truncation path.
    run({"9. finiteness truthfulness on C^2, zero", 10.0}, [](std::string& detail) {
        auto r = cohomology(Space::cn(2), PoissonStructure(2), 2, 5);
        for (const auto& e : r.H) {
            bool witnessed = false;
            for (const auto& T : e.witness) witnessed |= T.empty();
            if (!e.infinite || !witnessed) {
                detail = "missing infinite flag or witness at k=" + std::to_string(e.k);
                return false;
            }
        }
        try {
            cohomology(Space::cn(2), PoissonStructure(2), 2);
            detail = "missing degree bound was not rejected";
            return false;
        } catch (const MissingDegreeBound&) {
        }
        try {
            parse_args({"--space", "cn", "--dim", "2", "--poisson", "zero"});
            detail = "CLI accepted affine zero without a bound";
            return false;
        } catch (const UsageError&) {
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
