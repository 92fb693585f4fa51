#include "qsph/discretization.hpp"

#include <cmath>
#include <string>

#include "qsph/errors.hpp"

namespace qsph {

void Domain::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b) || !std::isfinite(b - a)) {
        throw ConfigError("domain: require finite a < b, got [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
    }
}

ParticleDiscretisation ParticleDiscretisation::from_edges(std::vector<double> edges,
                                                          std::size_t n_boundary_each_end) {
    if (edges.size() < 2) {
        throw ConfigError("discretisation: need at least one subinterval");
    }
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        if (!(edges[k] < edges[k + 1])) {
            throw ConfigError("discretisation: edges must be strictly increasing");
        }
    }

    ParticleDiscretisation d;
    d.n_boundary_ = n_boundary_each_end;
    const std::size_t n = edges.size() - 1;
    const std::size_t total = n + 2 * n_boundary_each_end;
    d.positions_.reserve(total);
    d.widths_.reserve(total);

    const double dx_left = edges[1] - edges[0];
    const double dx_right = edges[n] - edges[n - 1];

    for (std::size_t j = n_boundary_each_end; j-- > 0;) {
        d.positions_.push_back(edges.front() - 0.5 * dx_left - static_cast<double>(j) * dx_left);
        d.widths_.push_back(dx_left);
    }
    for (std::size_t k = 0; k < n; ++k) {
        d.positions_.push_back(0.5 * (edges[k + 1] + edges[k]));
        d.widths_.push_back(edges[k + 1] - edges[k]);
    }
    for (std::size_t j = 0; j < n_boundary_each_end; ++j) {
        d.positions_.push_back(edges.back() + 0.5 * dx_right + static_cast<double>(j) * dx_right);
        d.widths_.push_back(dx_right);
    }
    d.edges_ = std::move(edges);
    return d;
}

ParticleDiscretisation uniform_discretise(const Domain& domain, std::size_t num_particles,
                                          std::size_t n_boundary_each_end) {
    domain.validate();
    if (num_particles == 0) {
        throw ConfigError("discretisation: num_particles must be >= 1");
    }
    std::vector<double> edges(num_particles + 1);
    const double dx = domain.length() / static_cast<double>(num_particles);
    for (std::size_t k = 0; k < num_particles; ++k) {
        edges[k] = domain.a + static_cast<double>(k) * dx;
    }
    edges[num_particles] = domain.b;
    return ParticleDiscretisation::from_edges(std::move(edges), n_boundary_each_end);
}

std::vector<double> sample_points(const Domain& domain, std::size_t n) {
    domain.validate();
    if (n < 2) {
        throw ConfigError("sample_points: n must be >= 2");
    }
    std::vector<double> xs(n);
    const double step = domain.length() / static_cast<double>(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        xs[j] = domain.a + static_cast<double>(j) * step;
    }
    xs[n - 1] = domain.b;
    return xs;
}

}  // namespace qsph
