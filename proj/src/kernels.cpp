#include "qsph/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "qsph/errors.hpp"

namespace qsph {

namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// Gaussian: W = e^{-q^2} / (sqrt(pi) h), q = |r|/h. Derivatives in r are
// smooth, so the signed form needs no |r| handling.
double gaussian(int order, double r, double h) {
    const double q = r / h;
    const double g = std::exp(-q * q) * kInvSqrtPi;
    switch (order) {
        case 0:
            return g / h;
        case 1:
            return -2.0 * q * g / (h * h);
        default:
            return (4.0 * q * q - 2.0) * g / (h * h * h);
    }
}

// Wendland: W = (3/4h) (1 - q/2)^4 (2q + 1) for q <= 2.
//   W'  = -(15 r / 4h^3) (1 - q/2)^3
//   W'' = -(15 / 4h^3) (1 - q/2)^2 (1 - 2q)
double wendland(int order, double r, double h) {
    const double q = std::abs(r) / h;
    if (q > 2.0) {
        return 0.0;
    }
    const double s = 1.0 - 0.5 * q;
    const double s2 = s * s;
    switch (order) {
        case 0:
            return 0.75 / h * s2 * s2 * (2.0 * q + 1.0);
        case 1:
            return -3.75 * r / (h * h * h) * s2 * s;
        default:
            return -3.75 / (h * h * h) * s2 * (1.0 - 2.0 * q);
    }
}

}  // namespace

std::string_view to_string(KernelFamily family) {
    return family == KernelFamily::Gaussian ? "gaussian" : "wendland";
}

KernelFamily parse_kernel_family(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "gaussian") return KernelFamily::Gaussian;
    if (lower == "wendland") return KernelFamily::Wendland;
    throw ConfigError("kernel: unknown family '" + std::string(name) + "'");
}

void KernelSpec::validate() const {
    if (derivative_order < 0 || derivative_order > 2) {
        throw ConfigError("kernel: derivative order must be 0, 1 or 2");
    }
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw ConfigError("kernel: smoothing length h must be positive");
    }
}

double evaluate(const KernelSpec& spec, double r) {
    return spec.family == KernelFamily::Gaussian ? gaussian(spec.derivative_order, r, spec.h)
                                                 : wendland(spec.derivative_order, r, spec.h);
}

double scaling_constant(const KernelSpec& spec) {
    const double h = spec.h;
    if (spec.family == KernelFamily::Gaussian) {
        switch (spec.derivative_order) {
            case 0:
                return kInvSqrtPi / h;
            case 1:
                return std::numbers::sqrt2 * std::exp(-0.5) * kInvSqrtPi / (h * h);
            default:
                return 2.0 * kInvSqrtPi / (h * h * h);
        }
    }
    switch (spec.derivative_order) {
        case 0:
            return 0.75 / h;
        case 1:
            return 405.0 / 512.0 / (h * h);
        default:
            return 3.75 / (h * h * h);
    }
}

}  // namespace qsph
