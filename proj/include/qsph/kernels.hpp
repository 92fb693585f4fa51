#pragma once

#include <string>
#include <string_view>

namespace qsph {

enum class KernelFamily { Gaussian, Wendland };

std::string_view to_string(KernelFamily family);
// Accepts "gaussian" / "wendland" (case-insensitive); throws ConfigError otherwise.
KernelFamily parse_kernel_family(std::string_view name);

struct KernelSpec {
    KernelFamily family = KernelFamily::Gaussian;
    int derivative_order = 0;  // 0, 1 or 2
    double h = 1.0;            // smoothing length

    void validate() const;
};

// W(r,h) or its first/second derivative with respect to the signed
// separation r. The Wendland kernel and its derivatives vanish for |r| > 2h.
double evaluate(const KernelSpec& spec, double r);

// c = max_r |d^n W / dr^n|, in closed form for each (family, order).
//
//   Gaussian:  1/(sqrt(pi) h),  sqrt(2) e^{-1/2}/(sqrt(pi) h^2),  2/(sqrt(pi) h^3)
//   Wendland:  3/(4h),          405/(512 h^2),                     15/(4 h^3)
double scaling_constant(const KernelSpec& spec);

}  // namespace qsph
