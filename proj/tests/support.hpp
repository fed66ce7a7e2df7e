#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "vandinv/node_set.hpp"

namespace vandinv::testing {

/// Random complex nodes with |v| in [0.5, 1.5] and uniform phase; redrawn
/// until pairwise distinct (practically always on the first try).
inline NodeSet random_nodes(std::mt19937_64& rng, std::size_t count) {
    std::uniform_real_distribution<double> radius(0.5, 1.5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (;;) {
        std::vector<Complex> v(count);
        for (auto& x : v) x = std::polar(radius(rng), angle(rng));
        if (validate_pairwise_distinct(v).distinct) return NodeSet(std::move(v));
    }
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// |a - b| / |b|, falling back to |a - b| when |b| < 1.
inline double mixed_error(Complex a, Complex b) {
    const double scale = std::abs(b);
    return scale < 1.0 ? std::abs(a - b) : std::abs(a - b) / scale;
}

inline double relative_error(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace vandinv::testing
