#include "qsph/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>

#include "qsph/errors.hpp"
#include "qsph/random.hpp"

namespace qsph {

namespace {

// Everything about one experiment that does not depend on the evaluation point.
struct Prepared {
    ParticleDiscretisation disc;
    KernelSpec spec;
    EncodedFunction a;
    double exact_norm;
    std::vector<double> xs;
};

Prepared prepare(const ExperimentConfig& config) {
    config.validate();
    const std::size_t n = std::size_t{1} << config.qubits;
    auto disc = uniform_discretise(config.domain, n, config.boundary_particles);

    std::vector<double> samples(disc.total_count());
    const auto& positions = disc.positions();
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const bool ghost = k < disc.n_boundary_each_end() ||
                           k >= disc.n_boundary_each_end() + disc.interior_count();
        samples[k] = ghost && config.boundary == BoundaryValues::Zero
                         ? 0.0
                         : target_function(positions[k], 0);
    }

    auto a = build_a(disc, samples);
    const double exact_norm = a.norm_a;
    if (config.norm == NormMode::Kind::IntegralApprox) {
        a.norm_a = integral_norm_estimate(
            config.domain, [](double x) { return target_function(x, 0); }, n,
            config.quadrature_points);
    }
    auto xs = sample_points(config.domain, config.eval_points);
    return {std::move(disc), config.kernel_spec(), std::move(a), exact_norm, std::move(xs)};
}

Estimator keyed_for_point(const Estimator& e, std::size_t point) {
    if (const auto* s = std::get_if<SampledEstimator>(&e)) {
        return SampledEstimator{s->shots, KeyedStream(s->seed).derive(point).key()};
    }
    return e;
}

std::size_t resolve_threads(const ExperimentConfig& config) {
    return config.threads > 0 ? config.threads : default_thread_count();
}

// Runs body(j) for j in [0, count) on up to `threads` workers. Each index is
// written by exactly one worker, so results do not depend on scheduling.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        for (std::size_t j = 0; j < count; ++j) body(j);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t j = t; j < count; j += threads) body(j);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void require_finite(double v, double x, const char* what) {
    if (!std::isfinite(v)) {
        throw NumericalError(std::string(what) + " is not finite at x = " + std::to_string(x));
    }
}

}  // namespace

double target_function(double x, int order) {
    const double d = 1.0 + 25.0 * x * x;
    switch (order) {
        case 0:
            return 1.0 / d;
        case 1:
            return -50.0 * x / (d * d);
        case 2:
            return 50.0 * (75.0 * x * x - 1.0) / (d * d * d);
        default:
            throw ConfigError("target_function: order must be 0, 1 or 2");
    }
}

void ExperimentConfig::validate() const {
    if (order < 0 || order > 2) throw ConfigError("order: must be 0, 1 or 2");
    if (qubits < 1 || qubits > kMaxQubits) {
        throw ConfigError("qubits: must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
    domain.validate();
    if (eval_points < 2) throw ConfigError("points: must be >= 2");
    if (h && !(*h > 0.0 && std::isfinite(*h))) throw ConfigError("h: must be positive");
    if (norm == NormMode::Kind::IntegralApprox && quadrature_points < 2) {
        throw ConfigError("quadrature_points: must be >= 2");
    }
    if (const auto* s = std::get_if<SampledEstimator>(&estimator); s && s->shots == 0) {
        throw ConfigError("shots: must be >= 1");
    }
    if (const auto* p = std::get_if<PhaseEstimator>(&estimator); p && (p->n_pe < 1 || p->n_pe > 52)) {
        throw ConfigError("pe_qubits: must be in [1, 52]");
    }
}

double ExperimentConfig::smoothing_length() const {
    return h ? *h : 4.0 / std::ldexp(1.0, qubits);
}

KernelSpec ExperimentConfig::kernel_spec() const {
    return {kernel, order, smoothing_length()};
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("QSPH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ErrorDecompositionRow> decompose_error(const ExperimentConfig& config) {
    const Prepared p = prepare(config);
    const std::size_t len = p.a.state.dim();
    std::vector<ErrorDecompositionRow> rows(p.xs.size());

    parallel_for(p.xs.size(), resolve_threads(config), [&](std::size_t j) {
        const double x = p.xs[j];
        const auto w = build_w(p.disc, p.spec, x, len);
        const double scale = w.c * static_cast<double>(len);
        const double overlap = inner_product(p.a.state, w.state).real();
        const double estimated = estimate(p.a.state, w.state, keyed_for_point(config.estimator, j)).estimate;

        const double f_disc = scale * p.exact_norm * overlap;
        const double f_norm = scale * p.a.norm_a * overlap;
        const double f_full = scale * p.a.norm_a * estimated;
        const double f_exact = target_function(x, config.order);
        require_finite(f_full, x, "approximation");

        auto& row = rows[j];
        row.x = x;
        row.f_exact = f_exact;
        row.f_approx = f_full;
        row.discretisation = f_disc - f_exact;
        row.norm_approximation = f_norm - f_disc;
        row.shot_noise = std::holds_alternative<SampledEstimator>(config.estimator) ? f_full - f_norm : 0.0;
        row.quantization = std::holds_alternative<PhaseEstimator>(config.estimator) ? f_full - f_norm : 0.0;
    });
    return rows;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
    const Prepared p = prepare(config);
    const std::size_t len = p.a.state.dim();
    std::vector<ExperimentRow> rows(p.xs.size());

    parallel_for(p.xs.size(), resolve_threads(config), [&](std::size_t j) {
        const double x = p.xs[j];
        const auto w = build_w(p.disc, p.spec, x, len);
        const auto est = estimate(p.a.state, w.state, keyed_for_point(config.estimator, j));
        const double f_approx = w.c * static_cast<double>(len) * p.a.norm_a * est.estimate;
        require_finite(f_approx, x, "approximation");
        const double f_exact = target_function(x, config.order);
        rows[j] = {x, f_exact, f_approx, std::abs(f_exact - f_approx)};
    });
    return rows;
}

double rms_error(std::span<const ExperimentRow> rows) {
    if (rows.empty()) throw ConfigError("rms_error: no rows");
    double sum = 0.0;
    for (const auto& r : rows) {
        const double e = r.f_exact - r.f_approx;
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(rows.size()));
}

std::vector<SweepRow> run_convergence_sweep(const ExperimentConfig& base,
                                            std::span<const int> m_values) {
    if (m_values.empty()) throw ConfigError("sweep: m_values is empty");
    if (!std::is_sorted(m_values.begin(), m_values.end())) {
        throw ConfigError("sweep: m_values must be ascending");
    }
    std::vector<SweepRow> out;
    out.reserve(m_values.size());
    for (const int m : m_values) {
        ExperimentConfig cfg = base;
        cfg.qubits = m;
        const auto rows = run_experiment(cfg);
        out.push_back({m, cfg.kernel, cfg.order, rms_error(rows)});
    }
    return out;
}

}  // namespace qsph
