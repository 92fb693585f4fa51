#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qsph {

struct Domain {
    double a = -1.0;
    double b = 1.0;

    double length() const { return b - a; }
    // Throws ConfigError unless a < b and both are finite.
    void validate() const;
};

// 1-D particle layout: N interior particles at subinterval centres, plus
// optional ghost particles continuing the grid beyond each end.
//
// positions()/widths() run over all particles in ascending order: the left
// boundary particles, the interior particles, then the right boundary ones.
class ParticleDiscretisation {
public:
    // General (possibly non-uniform) interior partition given by its edges.
    // Boundary particles continue the outermost interior spacing.
    static ParticleDiscretisation from_edges(std::vector<double> edges,
                                             std::size_t n_boundary_each_end = 0);

    const std::vector<double>& edges() const { return edges_; }
    const std::vector<double>& positions() const { return positions_; }
    const std::vector<double>& widths() const { return widths_; }

    std::size_t interior_count() const { return edges_.size() - 1; }
    std::size_t n_boundary_each_end() const { return n_boundary_; }
    std::size_t total_count() const { return positions_.size(); }

    Domain domain() const { return {edges_.front(), edges_.back()}; }

    // Index into positions()/widths() of interior particle k.
    std::size_t interior_index(std::size_t k) const { return n_boundary_ + k; }

private:
    ParticleDiscretisation() = default;

    std::vector<double> edges_;
    std::vector<double> positions_;
    std::vector<double> widths_;
    std::size_t n_boundary_ = 0;
};

ParticleDiscretisation uniform_discretise(const Domain& domain, std::size_t num_particles,
                                          std::size_t n_boundary_each_end = 0);

// n evaluation points spread evenly over [a, b], both endpoints included.
std::vector<double> sample_points(const Domain& domain, std::size_t n);

}  // namespace qsph
