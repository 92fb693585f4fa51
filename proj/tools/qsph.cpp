// qsph: command-line driver for the quantum-register SPH experiments.
//
//   qsph run       one experiment, rows  x,f_exact,f_approx,abs_error
//   qsph sweep     RMS per register size, rows  m,kernel,order,rms
//   qsph decompose per-point error split against the exact pipeline
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qsph/csv.hpp"
#include "qsph/errors.hpp"
#include "qsph/harness.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CliOptions {
    std::vector<std::string> kernels{"gaussian"};
    std::vector<int> orders{0};
    int qubits = 8;
    std::size_t points = 300;
    std::vector<double> domain{-1.0, 1.0};
    std::size_t boundary_particles = 4;
    std::string boundary = "analytic";
    double h = 0.0;
    std::string norm = "exact";
    std::size_t quadrature_points = 20001;
    std::string estimator = "exact";
    std::size_t shots = 1000;
    int pe_qubits = 8;
    std::uint64_t seed = 0;
    int m_min = 4;
    int m_max = 8;
    std::string out;
};

qsph::ExperimentConfig to_config(const CliOptions& o, const std::string& kernel, int order) {
    qsph::ExperimentConfig cfg;
    cfg.kernel = qsph::parse_kernel_family(kernel);
    cfg.order = order;
    cfg.qubits = o.qubits;
    if (o.domain.size() != 2) throw qsph::ConfigError("domain: expected two values A B");
    cfg.domain = {o.domain[0], o.domain[1]};
    cfg.eval_points = o.points;
    cfg.boundary_particles = o.boundary_particles;
    if (o.boundary == "analytic") {
        cfg.boundary = qsph::BoundaryValues::Analytic;
    } else if (o.boundary == "zero") {
        cfg.boundary = qsph::BoundaryValues::Zero;
    } else {
        throw qsph::ConfigError("boundary: expected analytic or zero");
    }
    if (o.h > 0.0) cfg.h = o.h;
    if (o.norm == "exact") {
        cfg.norm = qsph::NormMode::Kind::Exact;
    } else if (o.norm == "integral") {
        cfg.norm = qsph::NormMode::Kind::IntegralApprox;
    } else {
        throw qsph::ConfigError("norm: expected exact or integral");
    }
    cfg.quadrature_points = o.quadrature_points;
    if (o.estimator == "exact") {
        cfg.estimator = qsph::ExactEstimator{};
    } else if (o.estimator == "sampled") {
        cfg.estimator = qsph::SampledEstimator{o.shots, o.seed};
    } else if (o.estimator == "phase") {
        cfg.estimator = qsph::PhaseEstimator{o.pe_qubits};
    } else {
        throw qsph::ConfigError("estimator: expected exact, sampled or phase");
    }
    cfg.validate();
    return cfg;
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw qsph::ConfigError("out: cannot open '" + path + "' for writing");
    write(file);
}

qsph::ExperimentConfig single_config(const CliOptions& o) {
    if (o.kernels.size() != 1 || o.orders.size() != 1) {
        throw qsph::ConfigError("kernel/order: this command takes exactly one of each");
    }
    return to_config(o, o.kernels.front(), o.orders.front());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-register SPH function approximation experiments"};
    app.set_config("--config", "", "Read options from a TOML/INI file; flags override it");
    app.require_subcommand(1);
    // --h is the smoothing length, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");

    CliOptions o;
    app.add_option("--kernel", o.kernels, "gaussian|wendland (sweep accepts a list)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--order", o.orders, "Kernel derivative order 0|1|2 (sweep accepts a list)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--qubits", o.qubits, "Register qubits m; 2^m interior particles")
        ->capture_default_str();
    app.add_option("--points", o.points, "Evaluation points across the domain")->capture_default_str();
    app.add_option("--domain", o.domain, "Domain endpoints A B")->expected(2)->capture_default_str();
    app.add_option("--boundary-particles", o.boundary_particles, "Ghost particles per end")
        ->capture_default_str();
    app.add_option("--boundary", o.boundary, "Ghost particle values: analytic|zero")
        ->capture_default_str();
    app.add_option("--h", o.h, "Explicit smoothing length (default 4/2^m)");
    app.add_option("--norm", o.norm, "Norm of the function vector: exact|integral")
        ->capture_default_str();
    app.add_option("--quadrature-points", o.quadrature_points, "Trapezoid points for --norm integral")
        ->capture_default_str();
    app.add_option("--estimator", o.estimator, "Overlap readout: exact|sampled|phase")
        ->capture_default_str();
    app.add_option("--shots", o.shots, "Shots per point for --estimator sampled")->capture_default_str();
    app.add_option("--pe-qubits", o.pe_qubits, "Phase register size for --estimator phase")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for --estimator sampled")->capture_default_str();
    app.add_option("--m-min", o.m_min, "Smallest register size for sweep")->capture_default_str();
    app.add_option("--m-max", o.m_max, "Largest register size for sweep")->capture_default_str();
    app.add_option("--out", o.out, "Output CSV path (default stdout)");

    auto* run = app.add_subcommand("run", "Approximate f or a derivative at the evaluation points");
    auto* sweep = app.add_subcommand("sweep", "RMS error over a range of register sizes");
    auto* decompose = app.add_subcommand("decompose", "Split the error by source at each point");
    for (auto* sub : {run, sweep, decompose}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*run) {
            const auto cfg = single_config(o);
            const auto rows = qsph::run_experiment(cfg);
            emit(o.out, [&](std::ostream& os) { qsph::csv::write_rows(os, rows); });
            std::cerr << "rms " << qsph::csv::format_real(qsph::rms_error(rows)) << '\n';
        } else if (*sweep) {
            if (o.m_min > o.m_max) throw qsph::ConfigError("m-min: must not exceed m-max");
            std::vector<int> ms;
            for (int m = o.m_min; m <= o.m_max; ++m) ms.push_back(m);
            std::vector<qsph::SweepRow> all;
            for (const auto& kernel : o.kernels) {
                for (const int order : o.orders) {
                    const auto rows = qsph::run_convergence_sweep(to_config(o, kernel, order), ms);
                    all.insert(all.end(), rows.begin(), rows.end());
                }
            }
            emit(o.out, [&](std::ostream& os) { qsph::csv::write_sweep(os, all); });
        } else if (*decompose) {
            const auto rows = qsph::decompose_error(single_config(o));
            emit(o.out, [&](std::ostream& os) { qsph::csv::write_decomposition(os, rows); });
        }
    } catch (const qsph::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const qsph::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return 0;
}
