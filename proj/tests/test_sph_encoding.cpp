#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qsph/errors.hpp"
#include "qsph/harness.hpp"
#include "qsph/sph_encoding.hpp"

using namespace qsph;

namespace {

std::vector<double> sample(const ParticleDiscretisation& d, double (*f)(double)) {
    std::vector<double> out;
    for (double r : d.positions()) out.push_back(f(r));
    return out;
}

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }
double one(double) { return 1.0; }

// Random partition of [a, b] with widths varying by up to a factor of 10.
ParticleDiscretisation random_partition(std::mt19937_64& rng, double a, double b, std::size_t n,
                                        std::size_t ghosts) {
    std::uniform_real_distribution<double> w(0.1, 1.0);
    std::vector<double> cum{0.0};
    for (std::size_t k = 0; k < n; ++k) cum.push_back(cum.back() + w(rng));
    std::vector<double> edges;
    for (double c : cum) edges.push_back(a + (b - a) * c / cum.back());
    edges.back() = b;
    return ParticleDiscretisation::from_edges(std::move(edges), ghosts);
}

}  // namespace

TEST_CASE("register length") {
    CHECK(register_length(1) == 1);
    CHECK(register_length(4) == 4);
    CHECK(register_length(5) == 8);
    CHECK(register_length(256 + 8) == 512);
}

TEST_CASE("build_a for a constant function") {
    {
        const auto d = uniform_discretise({-1.0, 1.0}, 4);
        const auto a = build_a(d, sample(d, one));
        CHECK(a.norm_a == doctest::Approx(1.0).epsilon(1e-15));
        for (std::size_t k = 0; k < 4; ++k) CHECK(a.state[k].real() == doctest::Approx(0.5));
    }
    {
        const auto d = uniform_discretise({0.0, 1.0}, 4);
        const auto a = build_a(d, sample(d, one));
        CHECK(a.norm_a == doctest::Approx(0.5).epsilon(1e-15));
    }
    {
        // 6 particles pad to a register of 8
        const auto d = uniform_discretise({0.0, 1.0}, 4, 1);
        const auto a = build_a(d, sample(d, one));
        REQUIRE(a.state.dim() == 8);
        CHECK(a.state[6] == Complex{0.0});
        CHECK(a.state[7] == Complex{0.0});
    }
    const auto d = uniform_discretise({0.0, 1.0}, 4);
    CHECK_THROWS_AS(build_a(d, std::vector<double>(4, 0.0)), ConfigError);
    CHECK_THROWS_AS(build_a(d, std::vector<double>(3, 1.0)), ConfigError);
}

TEST_CASE("integral norm estimate") {
    CHECK(integral_norm_estimate({0.0, 1.0}, one, 4, 11) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(integral_norm_estimate({-1.0, 1.0}, one, 4, 11) == doctest::Approx(1.0).epsilon(1e-14));

    // Exact Euclidean norms from a 40-digit reference computation.
    const double exact16 = 0.19775301614934572443;
    const double approx16 = integral_norm_estimate({-1.0, 1.0}, runge, 16, 200001);
    CHECK(approx16 == doctest::Approx(0.19784517047761793726).epsilon(1e-9));
    {
        const auto d = uniform_discretise({-1.0, 1.0}, 16);
        const auto a = build_a(d, sample(d, runge));
        CHECK(a.norm_a == doctest::Approx(exact16).epsilon(1e-14));
        const auto approx = build_a(d, sample(d, runge), NormMode::integral(approx16));
        CHECK(approx.norm_a == approx16);
        // the state is exactly normalised either way
        for (std::size_t k = 0; k < 16; ++k) CHECK(approx.state[k] == a.state[k]);
        CHECK(std::abs(approx16 - exact16) / exact16 < 1e-3);
    }

    const auto identity = [](double x) { return x; };
    const double est64 = integral_norm_estimate({0.0, 1.0}, identity, 64, 100001);
    CHECK(est64 == doctest::Approx(0.072168783648703220564).epsilon(1e-9));
    const auto d64 = uniform_discretise({0.0, 1.0}, 64);
    const auto a64 = build_a(d64, d64.positions());
    CHECK(a64.norm_a == doctest::Approx(0.072166581198602800724).epsilon(1e-14));
    CHECK(std::abs(est64 - a64.norm_a) < 1.0 / 64);
}

TEST_CASE("build_w closure and structure") {
    {
        // every particle is far outside the Wendland support
        const auto d = uniform_discretise({-1.0, 1.0}, 4);
        const auto w = build_w(d, {KernelFamily::Wendland, 0, 0.1}, 10.0, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(w.state[k].real() == 0.0);
            CHECK(w.state[k].imag() == doctest::Approx(0.5).epsilon(1e-15));
        }
    }
    {
        const auto d = uniform_discretise({-0.5, 0.5}, 1);
        const auto w = build_w(d, {KernelFamily::Gaussian, 0, 0.3}, 0.0, 1);
        CHECK(w.state[0].real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(w.state[0].imag() == 0.0);
    }
    {
        const auto d = uniform_discretise({-1.0, 1.0}, 8);
        const KernelSpec spec{KernelFamily::Gaussian, 0, 0.25};
        const auto w = build_w(d, spec, 0.0, 8);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(std::norm(w.state[k]) - 0.125) < 1e-12);
            CHECK(w.state[k].imag() >= 0.0);
            CHECK(w.state[k].real() * w.c * 8 ==
                  doctest::Approx(evaluate(spec, -d.positions()[k])).epsilon(1e-14));
        }
    }
    {
        // padded slots carry i/sqrt(N)
        const auto d = uniform_discretise({-1.0, 1.0}, 4, 1);
        const auto w = build_w(d, {KernelFamily::Wendland, 1, 0.5}, 0.3, 8);
        CHECK(w.state[6] == Complex{0.0, std::sqrt(0.125)});
        CHECK(w.state[7] == Complex{0.0, std::sqrt(0.125)});
    }
    const auto d = uniform_discretise({-1.0, 1.0}, 8);
    CHECK_THROWS_AS(build_w(d, {KernelFamily::Gaussian, 0, 0.25}, 0.0, 4), ConfigError);
    CHECK_THROWS_AS(build_w(d, {KernelFamily::Gaussian, 0, 0.25}, 0.0, 12), ConfigError);
}

TEST_CASE("reconstruction fixture for the Runge function") {
    const auto d = uniform_discretise({-1.0, 1.0}, 256, 4);
    const auto f = sample(d, runge);
    const KernelSpec spec{KernelFamily::Gaussian, 0, 4.0 / 256};
    const double direct = classical_sph_sum(d, f, spec, 0.0);
    // 40-digit reference evaluation of the same sum
    CHECK(direct == doctest::Approx(0.9969757644043342035).epsilon(1e-14));
    CHECK(reconstruct(encode(d, f, spec, 0.0)) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("zero function reconstructs to zero through the classical sum") {
    const auto d = uniform_discretise({-1.0, 1.0}, 16, 2);
    const std::vector<double> zeros(d.total_count(), 0.0);
    CHECK(classical_sph_sum(d, zeros, {KernelFamily::Wendland, 0, 0.25}, 0.1) == 0.0);
    // |a> cannot be formed from an all-zero vector
    CHECK_THROWS_AS(encode(d, zeros, {KernelFamily::Wendland, 0, 0.25}, 0.1), ConfigError);
}

TEST_CASE("classical sum sanity") {
    const auto d = uniform_discretise({-1.0, 1.0}, 1024, 40);
    const auto f = sample(d, one);
    CHECK(classical_sph_sum(d, f, {KernelFamily::Gaussian, 0, 0.01}, 0.1) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(classical_sph_sum(d, f, {KernelFamily::Gaussian, 1, 0.01}, 0.0)) < 1e-9);
    CHECK(std::abs(classical_sph_sum(d, f, {KernelFamily::Wendland, 1, 0.01}, 0.0)) < 1e-9);
}

TEST_CASE("reconstruct matches the classical sum on random layouts") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> n_dist(4, 200);
    std::uniform_int_distribution<int> order_dist(0, 2);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        const bool uniform = t % 2 == 0;
        const std::size_t n = n_dist(rng);
        const std::size_t ghosts = t % 5;
        const auto d = uniform ? uniform_discretise({-1.0, 1.0}, n, ghosts)
                               : random_partition(rng, -1.0, 1.0, n, ghosts);
        std::vector<double> f;
        const double c0 = u(rng), c1 = u(rng), c2 = u(rng);
        for (double r : d.positions()) f.push_back(c0 + c1 * std::sin(3 * r) + c2 * r * r);
        const KernelSpec spec{t % 3 == 0 ? KernelFamily::Wendland : KernelFamily::Gaussian,
                              order_dist(rng), 0.02 + 0.3 * std::abs(u(rng))};
        const double x = 1.2 * u(rng);

        const auto pair = encode(d, f, spec, x);
        const double oracle = classical_sph_sum(d, f, spec, x);
        CHECK(std::abs(reconstruct(pair) - oracle) <= 1e-10 * std::abs(oracle) + 1e-12);

        // the imaginary part does not carry the sum
        const double im = pair.c * pair.n_register * pair.norm_a *
                          inner_product(pair.state_a, pair.state_w).imag();
        if (std::abs(im) > 1e-6) ++checked;

        // padding slots of |a> contribute nothing to the real part
        for (std::size_t k = d.total_count(); k < pair.n_register; ++k) {
            CHECK((std::conj(pair.state_a[k]) * pair.state_w[k]).real() == 0.0);
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("reconstruction scales linearly with the samples") {
    const auto d = uniform_discretise({-1.0, 1.0}, 64, 4);
    const auto f = sample(d, runge);
    const KernelSpec spec{KernelFamily::Wendland, 1, 4.0 / 64};
    const double base = reconstruct(encode(d, f, spec, 0.17));
    for (double lambda : {-3.0, 0.5, 7.25}) {
        std::vector<double> g;
        for (double v : f) g.push_back(lambda * v);
        const auto pair = encode(d, g, spec, 0.17);
        CHECK(reconstruct(pair) == doctest::Approx(lambda * base).epsilon(1e-12));
        CHECK(pair.norm_a == doctest::Approx(std::abs(lambda) * build_a(d, f).norm_a));
    }
}
