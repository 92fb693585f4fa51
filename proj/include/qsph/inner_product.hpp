#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "qsph/quantum_state.hpp"

namespace qsph {

// Swap-test state for a pair of d-dimensional unit states x, y:
//
//   |phi> = 1/2 ( |0>(|x> + |y>) + |1>(|x> - |y>) )
//         = sin(theta) |0>|u> + cos(theta) |1>|v>
//
// with sin^2(theta) = (1 + Re<x|y>)/2. The ancilla is the leading qubit, so
// the first d amplitudes are (x+y)/2 and the last d are (x-y)/2.
struct SwapTestState {
    StateVector phi;
    double theta;       // in [0, pi/2]
    double re_overlap;  // Re<x|y>, clamped to [-1, 1]
    std::size_t d;
    // |u> is undefined when x = -y (theta = 0), |v> when x = y (theta = pi/2).
    std::optional<StateVector> u;
    std::optional<StateVector> v;

    bool degenerate() const { return !u || !v; }
};

SwapTestState build_swap_state(const StateVector& x, const StateVector& y);

// Probabilities of reading the ancilla as |0> and |1>.
std::array<double, 2> ancilla_probabilities(const SwapTestState& s);

// Rotation operator whose restriction to span{|0>|u>, |1>|v>} is
//   [[cos 2theta, sin 2theta], [-sin 2theta, cos 2theta]]
// with eigenvalues e^{+-2i theta}. This is (I - 2|phi><phi|)(Z (x) I); the
// product with the opposite sign of the reflection has spectrum -e^{+-2i theta}.
Operator build_g_operator(const SwapTestState& s);

struct GEigenpairs {
    std::array<Complex, 2> eigenvalues;  // e^{+2i theta}, e^{-2i theta}
    StateVector w_plus;                  // (|0>|u> + i|1>|v>)/sqrt 2
    StateVector w_minus;                 // (|0>|u> - i|1>|v>)/sqrt 2
};

// Analytic eigenpairs, checked against G to 1e-10. Throws ConfigError for a
// degenerate state.
GEigenpairs g_eigenpairs(const SwapTestState& s);

struct ExactEstimator {};
struct SampledEstimator {
    std::size_t shots = 1000;
    std::uint64_t seed = 0;
};
struct PhaseEstimator {
    int n_pe = 8;
};
using Estimator = std::variant<ExactEstimator, SampledEstimator, PhaseEstimator>;

struct EstimationResult {
    Estimator method;
    double estimate = 0.0;  // estimated Re<x|y>, in [-1, 1]
    std::optional<double> theta_estimate;
    // Phase estimation only: 1/2^{n_pe+1}, a bound on |theta - theta_estimate|
    // measured in units of pi (the grid is k pi / 2^{n_pe}).
    std::optional<double> error_bound;

    // error_bound converted to radians, pi/2^{n_pe+1}.
    std::optional<double> theta_error_bound_radians() const;
};

EstimationResult estimate_exact(const StateVector& x, const StateVector& y);

// Measures the ancilla of |phi> `shots` times. Shot j draws from the keyed
// stream at (seed, j), so the result depends only on (x, y, shots, seed).
EstimationResult estimate_sampled(const StateVector& x, const StateVector& y, std::size_t shots,
                                  std::uint64_t seed);

// Idealized phase estimation: theta is rounded to the nearest grid point
// k pi / 2^{n_pe} (ties to the smaller k) and Re<x|y> = 2 sin^2(theta) - 1 is
// recovered from it. Success probability is taken as 1.
EstimationResult estimate_phase(const StateVector& x, const StateVector& y, int n_pe);

EstimationResult estimate(const StateVector& x, const StateVector& y, const Estimator& method);

}  // namespace qsph
