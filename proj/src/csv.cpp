#include "qsph/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "qsph/errors.hpp"

namespace qsph::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_real(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw ConfigError("csv: bad real '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0') throw ConfigError("csv: bad integer '" + s + "'");
    return static_cast<int>(v);
}

// Reads data lines after checking the header; each must have `width` fields.
template <typename F>
void for_each_record(std::istream& in, const char* header, std::size_t width, F&& f) {
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw ConfigError(std::string("csv: expected header '") + header + "'");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != width) throw ConfigError("csv: wrong field count in '" + line + "'");
        f(fields);
    }
}

constexpr const char* kRowsHeader = "x,f_exact,f_approx,abs_error";
constexpr const char* kSweepHeader = "m,kernel,order,rms";

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_rows(std::ostream& out, std::span<const ExperimentRow> rows) {
    out << kRowsHeader << '\n';
    for (const auto& r : rows) {
        out << format_real(r.x) << ',' << format_real(r.f_exact) << ',' << format_real(r.f_approx)
            << ',' << format_real(r.abs_error) << '\n';
    }
}

std::vector<ExperimentRow> read_rows(std::istream& in) {
    std::vector<ExperimentRow> rows;
    for_each_record(in, kRowsHeader, 4, [&](const std::vector<std::string>& f) {
        rows.push_back({parse_real(f[0]), parse_real(f[1]), parse_real(f[2]), parse_real(f[3])});
    });
    return rows;
}

void write_sweep(std::ostream& out, std::span<const SweepRow> rows) {
    out << kSweepHeader << '\n';
    for (const auto& r : rows) {
        out << r.m << ',' << to_string(r.kernel) << ',' << r.order << ',' << format_real(r.rms)
            << '\n';
    }
}

std::vector<SweepRow> read_sweep(std::istream& in) {
    std::vector<SweepRow> rows;
    for_each_record(in, kSweepHeader, 4, [&](const std::vector<std::string>& f) {
        rows.push_back({parse_int(f[0]), parse_kernel_family(f[1]), parse_int(f[2]),
                        parse_real(f[3])});
    });
    return rows;
}

void write_decomposition(std::ostream& out, std::span<const ErrorDecompositionRow> rows) {
    out << "x,f_exact,f_approx,discretisation,norm_approximation,shot_noise,quantization\n";
    for (const auto& r : rows) {
        out << format_real(r.x) << ',' << format_real(r.f_exact) << ',' << format_real(r.f_approx)
            << ',' << format_real(r.discretisation) << ',' << format_real(r.norm_approximation)
            << ',' << format_real(r.shot_noise) << ',' << format_real(r.quantization) << '\n';
    }
}

}  // namespace qsph::csv
