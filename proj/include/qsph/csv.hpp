#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qsph/harness.hpp"

namespace qsph::csv {

// Reals are written with 17 significant digits, lines end in LF.
//   rows:      x,f_exact,f_approx,abs_error
//   sweep:     m,kernel,order,rms
//   decompose: x,f_exact,f_approx,discretisation,norm_approximation,shot_noise,quantization

std::string format_real(double v);

void write_rows(std::ostream& out, std::span<const ExperimentRow> rows);
std::vector<ExperimentRow> read_rows(std::istream& in);

void write_sweep(std::ostream& out, std::span<const SweepRow> rows);
std::vector<SweepRow> read_sweep(std::istream& in);

void write_decomposition(std::ostream& out, std::span<const ErrorDecompositionRow> rows);

}  // namespace qsph::csv
