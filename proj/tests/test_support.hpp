#pragma once

// Shared helpers for the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qsph/quantum_state.hpp"

namespace qsph::testing {

inline StateVector random_state(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    for (auto& z : v) z = {g(rng), g(rng)};
    return normalize(std::span<const Complex>(v)).state;
}

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
    return std::abs(a - b) <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

}  // namespace qsph::testing
