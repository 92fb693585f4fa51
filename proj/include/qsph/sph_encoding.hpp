#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "qsph/discretization.hpp"
#include "qsph/kernels.hpp"
#include "qsph/quantum_state.hpp"

namespace qsph {

// How the classical scalar ||a|| used to undo the normalisation of |a> is
// obtained. The state |a> itself is always built by exact normalisation.
struct NormMode {
    enum class Kind { Exact, IntegralApprox };

    Kind kind = Kind::Exact;
    double integral_norm = 0.0;  // used when kind == IntegralApprox

    static NormMode exact() { return {}; }
    static NormMode integral(double approx_norm) { return {Kind::IntegralApprox, approx_norm}; }
};

// Smallest power of two >= particle_count.
std::size_t register_length(std::size_t particle_count);

struct EncodedFunction {
    StateVector state;  // (f_k dx_k)/||a||, zero padded to the register length
    double norm_a;
};

// samples[k] = f(r_k) for every particle of disc (boundary particles included).
EncodedFunction build_a(const ParticleDiscretisation& disc, std::span<const double> samples,
                        NormMode norm_mode = NormMode::exact());

// sqrt(((b - a)/N) * int_a^b |f|^2 dx), composite trapezoid rule.
double integral_norm_estimate(const Domain& domain, const std::function<double(double)>& f,
                              std::size_t n, std::size_t quadrature_points);

struct EncodedKernel {
    StateVector state;  // W(x - r_k)/(cN) + i b_k, padded with i/sqrt(N)
    double c;
};

// Kernel state for evaluation point eval_point. N is register_len, which must
// be a power of two no smaller than disc.total_count().
EncodedKernel build_w(const ParticleDiscretisation& disc, const KernelSpec& spec,
                      double eval_point, std::size_t register_len);

struct EncodedPair {
    StateVector state_a;
    StateVector state_w;
    double norm_a;
    double c;
    std::size_t n_register;
    std::size_t padding;
};

EncodedPair encode(const ParticleDiscretisation& disc, std::span<const double> samples,
                   const KernelSpec& spec, double eval_point,
                   NormMode norm_mode = NormMode::exact());

// c N ||a|| Re<a|W> with the exact inner product.
double reconstruct(const EncodedPair& pair);
// c N ||a|| * re_overlap, for an externally estimated Re<a|W>.
double reconstruct_from_overlap(const EncodedPair& pair, double re_overlap);

// sum_k f_k dx_k W(eval_point - r_k, h) over all particles.
double classical_sph_sum(const ParticleDiscretisation& disc, std::span<const double> samples,
                         const KernelSpec& spec, double eval_point);

}  // namespace qsph
