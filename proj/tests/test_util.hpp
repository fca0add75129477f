#pragma once

#include <random>

#include "critgroup/matrix.hpp"

namespace critgroup::testutil {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                               long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline std::vector<Int> random_vector(std::mt19937& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<Int> v(n);
    for (Int& x : v) x = dist(rng);
    return v;
}

}  // namespace critgroup::testutil
