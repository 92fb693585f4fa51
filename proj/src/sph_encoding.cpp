#include "qsph/sph_encoding.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <string>
#include <vector>

#include "qsph/errors.hpp"

namespace qsph {

namespace {

void require_sample_count(const ParticleDiscretisation& disc, std::span<const double> samples) {
    if (samples.size() != disc.total_count()) {
        throw ConfigError("samples: expected " + std::to_string(disc.total_count()) +
                          " values, got " + std::to_string(samples.size()));
    }
}

}  // namespace

std::size_t register_length(std::size_t particle_count) {
    return std::bit_ceil(std::max<std::size_t>(particle_count, 1));
}

EncodedFunction build_a(const ParticleDiscretisation& disc, std::span<const double> samples,
                        NormMode norm_mode) {
    require_sample_count(disc, samples);
    std::vector<Complex> a(register_length(disc.total_count()));
    const auto& widths = disc.widths();
    for (std::size_t k = 0; k < samples.size(); ++k) a[k] = samples[k] * widths[k];

    auto [state, exact_norm] = normalize(std::span<const Complex>(a));
    double norm_a = exact_norm;
    if (norm_mode.kind == NormMode::Kind::IntegralApprox) {
        if (!(norm_mode.integral_norm > 0.0)) {
            throw ConfigError("build_a: integral norm approximation must be positive");
        }
        norm_a = norm_mode.integral_norm;
    }
    return {std::move(state), norm_a};
}

double integral_norm_estimate(const Domain& domain, const std::function<double(double)>& f,
                              std::size_t n, std::size_t quadrature_points) {
    domain.validate();
    if (quadrature_points < 2) throw ConfigError("integral_norm_estimate: need >= 2 points");
    if (n == 0) throw ConfigError("integral_norm_estimate: N must be >= 1");

    const double step = domain.length() / static_cast<double>(quadrature_points - 1);
    double sum = 0.0;
    for (std::size_t j = 0; j < quadrature_points; ++j) {
        const double x = j + 1 == quadrature_points ? domain.b
                                                    : domain.a + static_cast<double>(j) * step;
        const double v = f(x);
        const double weight = (j == 0 || j + 1 == quadrature_points) ? 0.5 : 1.0;
        sum += weight * v * v;
    }
    const double integral = sum * step;
    return std::sqrt(domain.length() / static_cast<double>(n) * integral);
}

EncodedKernel build_w(const ParticleDiscretisation& disc, const KernelSpec& spec,
                      double eval_point, std::size_t register_len) {
    spec.validate();
    if (!std::has_single_bit(register_len) || register_len < disc.total_count()) {
        throw ConfigError("build_w: register length must be a power of two >= particle count");
    }
    const double c = scaling_constant(spec);
    const double n = static_cast<double>(register_len);
    const double inv_n = 1.0 / n;
    const double pad = std::sqrt(inv_n);

    const auto& positions = disc.positions();
    std::vector<Complex> w(register_len, Complex{0.0, pad});
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const double scaled = evaluate(spec, eval_point - positions[k]) / (c * n);
        const double slack = inv_n - scaled * scaled;
        // |W| <= c, so the slack is nonnegative up to rounding.
        assert(slack >= -1e-14 * inv_n);
        w[k] = Complex{scaled, std::sqrt(std::max(slack, 0.0))};
    }
    return {StateVector(std::move(w)), c};
}

EncodedPair encode(const ParticleDiscretisation& disc, std::span<const double> samples,
                   const KernelSpec& spec, double eval_point, NormMode norm_mode) {
    auto a = build_a(disc, samples, norm_mode);
    const std::size_t len = a.state.dim();
    auto w = build_w(disc, spec, eval_point, len);
    return {std::move(a.state), std::move(w.state), a.norm_a, w.c, len,
            len - disc.total_count()};
}

double reconstruct_from_overlap(const EncodedPair& pair, double re_overlap) {
    return pair.c * static_cast<double>(pair.n_register) * pair.norm_a * re_overlap;
}

double reconstruct(const EncodedPair& pair) {
    return reconstruct_from_overlap(pair, inner_product(pair.state_a, pair.state_w).real());
}

double classical_sph_sum(const ParticleDiscretisation& disc, std::span<const double> samples,
                         const KernelSpec& spec, double eval_point) {
    require_sample_count(disc, samples);
    spec.validate();
    const auto& positions = disc.positions();
    const auto& widths = disc.widths();
    double sum = 0.0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        sum += samples[k] * widths[k] * evaluate(spec, eval_point - positions[k]);
    }
    return sum;
}

}  // namespace qsph
