#pragma once

#include <random>

#include "toric/scalar.hpp"
#include "toric/toric_model.hpp"

namespace toric::testing {

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng, long max_num = 10, long max_den = 10) {
    return Rational(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
}

inline Scalar rand_scalar(std::mt19937_64& rng) {
    return Scalar(rand_rational(rng), rand_rational(rng));
}

inline Scalar rand_nonzero_scalar(std::mt19937_64& rng) {
    while (true) {
        Scalar s = rand_scalar(rng);
        if (!s.is_zero()) return s;
    }
}

inline PoissonStructure rand_poisson(std::mt19937_64& rng, int n) {
    std::vector<PoissonStructure::Entry> entries;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) entries.push_back({i, j, rand_scalar(rng)});
    return PoissonStructure::from_entries(n, entries);
}

}  // namespace toric::testing
