#include "qsph/inner_product.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qsph/errors.hpp"
#include "qsph/random.hpp"

namespace qsph {

namespace {

// 1 +- Re<x|y> below this is treated as an exact (anti)alignment.
constexpr double kDegenerateTol = 1e-12;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

void require_same_dim(const StateVector& x, const StateVector& y) {
    if (x.dim() != y.dim()) {
        throw ConfigError("swap test: dimension mismatch (" + std::to_string(x.dim()) + " vs " +
                          std::to_string(y.dim()) + ")");
    }
}

double ancilla_zero_probability(const StateVector& x, const StateVector& y) {
    double p0 = 0.0;
    for (std::size_t k = 0; k < x.dim(); ++k) p0 += std::norm(0.5 * (x[k] + y[k]));
    return std::clamp(p0, 0.0, 1.0);
}

}  // namespace

SwapTestState build_swap_state(const StateVector& x, const StateVector& y) {
    require_same_dim(x, y);
    const std::size_t d = x.dim();
    const double rho = clamp_unit(inner_product(x, y).real());

    std::vector<Complex> phi(2 * d);
    std::vector<Complex> sum(d);
    std::vector<Complex> diff(d);
    for (std::size_t k = 0; k < d; ++k) {
        sum[k] = x[k] + y[k];
        diff[k] = x[k] - y[k];
        phi[k] = 0.5 * sum[k];
        phi[d + k] = 0.5 * diff[k];
    }

    SwapTestState s{StateVector(std::move(phi)),
                    std::atan2(std::sqrt(0.5 * (1.0 + rho)), std::sqrt(0.5 * (1.0 - rho))),
                    rho,
                    d,
                    std::nullopt,
                    std::nullopt};
    if (1.0 + rho > kDegenerateTol) s.u = normalize(std::span<const Complex>(sum)).state;
    if (1.0 - rho > kDegenerateTol) s.v = normalize(std::span<const Complex>(diff)).state;
    return s;
}

std::array<double, 2> ancilla_probabilities(const SwapTestState& s) {
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::size_t k = 0; k < s.d; ++k) {
        p0 += std::norm(s.phi[k]);
        p1 += std::norm(s.phi[s.d + k]);
    }
    return {p0, p1};
}

Operator build_g_operator(const SwapTestState& s) {
    const std::size_t dim = s.phi.dim();
    Operator g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double z = j < s.d ? 1.0 : -1.0;
            const Complex delta = i == j ? 1.0 : 0.0;
            g(i, j) = (delta - 2.0 * s.phi[i] * std::conj(s.phi[j])) * z;
        }
    }
    return g;
}

GEigenpairs g_eigenpairs(const SwapTestState& s) {
    if (s.degenerate()) {
        throw ConfigError("g_eigenpairs: theta is 0 or pi/2, |u> or |v> is undefined");
    }
    const std::size_t d = s.d;
    const double r = std::numbers::sqrt2 / 2.0;
    const Complex i_unit{0.0, 1.0};
    std::vector<Complex> plus(2 * d);
    std::vector<Complex> minus(2 * d);
    for (std::size_t k = 0; k < d; ++k) {
        plus[k] = r * (*s.u)[k];
        minus[k] = r * (*s.u)[k];
        plus[d + k] = r * i_unit * (*s.v)[k];
        minus[d + k] = -r * i_unit * (*s.v)[k];
    }
    GEigenpairs out{{std::polar(1.0, 2.0 * s.theta), std::polar(1.0, -2.0 * s.theta)},
                    StateVector(std::move(plus)),
                    StateVector(std::move(minus))};

    const Operator g = build_g_operator(s);
    const StateVector* vecs[2] = {&out.w_plus, &out.w_minus};
    for (int e = 0; e < 2; ++e) {
        const auto gw = apply_raw(g, vecs[e]->amplitudes());
        double residual = 0.0;
        for (std::size_t k = 0; k < gw.size(); ++k) {
            residual = std::max(residual, std::abs(gw[k] - out.eigenvalues[e] * (*vecs[e])[k]));
        }
        if (residual > 1e-10) {
            throw NumericalError("g_eigenpairs: eigen-residual " + std::to_string(residual));
        }
    }
    return out;
}

std::optional<double> EstimationResult::theta_error_bound_radians() const {
    if (!error_bound) return std::nullopt;
    return std::numbers::pi * *error_bound;
}

EstimationResult estimate_exact(const StateVector& x, const StateVector& y) {
    require_same_dim(x, y);
    EstimationResult r;
    r.method = ExactEstimator{};
    r.estimate = clamp_unit(inner_product(x, y).real());
    return r;
}

EstimationResult estimate_sampled(const StateVector& x, const StateVector& y, std::size_t shots,
                                  std::uint64_t seed) {
    require_same_dim(x, y);
    if (shots == 0) throw ConfigError("estimate_sampled: shots must be >= 1");
    const double p0 = ancilla_zero_probability(x, y);
    const KeyedStream stream(seed);
    std::size_t zeros = 0;
    for (std::size_t j = 0; j < shots; ++j) {
        if (stream.uniform(j) < p0) ++zeros;
    }
    EstimationResult r;
    r.method = SampledEstimator{shots, seed};
    r.estimate = clamp_unit(2.0 * static_cast<double>(zeros) / static_cast<double>(shots) - 1.0);
    return r;
}

EstimationResult estimate_phase(const StateVector& x, const StateVector& y, int n_pe) {
    require_same_dim(x, y);
    if (n_pe < 1 || n_pe > 52) throw ConfigError("estimate_phase: n_pe must be in [1, 52]");
    const double rho = clamp_unit(inner_product(x, y).real());
    const double theta = std::atan2(std::sqrt(0.5 * (1.0 + rho)), std::sqrt(0.5 * (1.0 - rho)));

    const double grid = std::ldexp(1.0, n_pe);
    const double t = theta * grid / std::numbers::pi;
    const double k = std::min(std::ceil(t - 0.5), grid - 1.0);
    const double theta_hat = k * std::numbers::pi / grid;
    const double s = std::sin(theta_hat);

    EstimationResult r;
    r.method = PhaseEstimator{n_pe};
    r.estimate = clamp_unit(2.0 * s * s - 1.0);
    r.theta_estimate = theta_hat;
    r.error_bound = std::ldexp(1.0, -(n_pe + 1));
    return r;
}

EstimationResult estimate(const StateVector& x, const StateVector& y, const Estimator& method) {
    return std::visit(
        [&](const auto& m) -> EstimationResult {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ExactEstimator>) {
                return estimate_exact(x, y);
            } else if constexpr (std::is_same_v<T, SampledEstimator>) {
                return estimate_sampled(x, y, m.shots, m.seed);
            } else {
                return estimate_phase(x, y, m.n_pe);
            }
        },
        method);
}

}  // namespace qsph
