#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsph/discretization.hpp"
#include "qsph/inner_product.hpp"
#include "qsph/kernels.hpp"
#include "qsph/sph_encoding.hpp"

namespace qsph {

// Test function f(x) = 1/(1 + 25x^2) and its first two derivatives.
double target_function(double x, int order);

// How function values at the ghost particles outside [a, b] are obtained.
enum class BoundaryValues { Analytic, Zero };

struct ExperimentConfig {
    KernelFamily kernel = KernelFamily::Gaussian;
    int order = 0;
    int qubits = 8;  // 2^qubits interior particles
    Domain domain{-1.0, 1.0};
    std::size_t eval_points = 300;
    std::size_t boundary_particles = 4;  // per end
    std::optional<double> h;             // unset: h = 4 / 2^qubits
    NormMode::Kind norm = NormMode::Kind::Exact;
    std::size_t quadrature_points = 20001;
    Estimator estimator = ExactEstimator{};
    BoundaryValues boundary = BoundaryValues::Analytic;
    std::size_t threads = 0;  // 0: QSPH_THREADS, else hardware concurrency

    static constexpr int kMaxQubits = 16;

    // Throws ConfigError naming the offending field.
    void validate() const;
    double smoothing_length() const;
    KernelSpec kernel_spec() const;
};

struct ExperimentRow {
    double x;
    double f_exact;
    double f_approx;
    double abs_error;
};

// One row per evaluation point, ascending in x. Particle values are f (order
// 0) at every particle; derivatives come from the derivative kernel.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

// sqrt(sum_j (f(x_j) - f_j)^2 / n)
double rms_error(std::span<const ExperimentRow> rows);

struct SweepRow {
    int m;
    KernelFamily kernel;
    int order;
    double rms;
};

std::vector<SweepRow> run_convergence_sweep(const ExperimentConfig& base,
                                            std::span<const int> m_values);

// Additive split of f_approx - f_exact at each evaluation point:
//   discretisation      exact-norm, exact-overlap pipeline minus f_exact
//   norm_approximation  configured norm mode vs exact norm (exact overlap)
//   shot_noise          sampled estimator vs exact overlap (configured norm)
//   quantization        phase estimator vs exact overlap (configured norm)
struct ErrorDecompositionRow {
    double x;
    double f_exact;
    double f_approx;
    double discretisation;
    double norm_approximation;
    double shot_noise;
    double quantization;
};

std::vector<ErrorDecompositionRow> decompose_error(const ExperimentConfig& config);

// Worker count used when config.threads == 0.
std::size_t default_thread_count();

}  // namespace qsph
