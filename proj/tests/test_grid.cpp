#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coneatoms/grid.hpp"
#include "coneatoms/rng.hpp"

#include <cmath>

using namespace coneatoms;

TEST_CASE("round trip and Parseval") {
    FrequencyGrid grid = make_grid(1, 256, 8.0);
    Rng rng(42);
    std::vector<cd> samples(grid.size());
    for (auto& s : samples) s = cd(rng.normal(), rng.normal());
    GridFunction f = from_spatial(grid, samples);
    GridFunction g = from_spectrum(grid, f.spectrum);
    double diff = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        diff += std::norm(f.spatial[i] - g.spatial[i]);
        norm += std::norm(f.spatial[i]);
    }
    CHECK(std::sqrt(diff / norm) <= 1e-12);
    CHECK(l2_norm(f) == doctest::Approx(spectral_l2(f)).epsilon(1e-12));
}

TEST_CASE("unitary transform fixes the Gaussian") {
    FrequencyGrid grid = make_grid(1, 512, 16.0);
    std::vector<cd> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double x = grid.space_point(i)(0);
        samples[i] = std::exp(-0.5 * x * x);
    }
    GridFunction f = from_spatial(grid, std::move(samples));
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double w = grid.freq_point(k)(0);
        CHECK(std::abs(f.spectrum[k] - cd(std::exp(-0.5 * w * w), 0.0)) <= 1e-10);
    }
}

TEST_CASE("2d separable Gaussian") {
    FrequencyGrid grid = make_grid(2, 64, 8.0);
    std::vector<cd> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Vec x = grid.space_point(i);
        samples[i] = std::exp(-0.5 * x.squaredNorm());
    }
    GridFunction f = from_spatial(grid, std::move(samples));
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        Vec w = grid.freq_point(k);
        worst = std::max(worst, std::abs(f.spectrum[k] -
                                         cd(std::exp(-0.5 * w.squaredNorm()), 0.0)));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("grid-aligned shift becomes a pure phase") {
    FrequencyGrid grid = make_grid(1, 256, 8.0);
    std::vector<cd> a(grid.size()), b(grid.size());
    const int shift = 5;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double x = grid.space_point(i)(0);
        a[i] = std::exp(-x * x);
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
        b[i] = a[(i + shift) % grid.size()];
    GridFunction fa = from_spatial(grid, std::move(a));
    GridFunction fb = from_spatial(grid, std::move(b));
    double u = shift * grid.dx();
    for (std::size_t k = 0; k < grid.size(); k += 17) {
        double w = grid.freq_point(k)(0);
        cd expect = fa.spectrum[k] * std::polar(1.0, w * u);
        CHECK(std::abs(fb.spectrum[k] - expect) <= 1e-10);
    }
}

TEST_CASE("lp norms and helpers") {
    FrequencyGrid grid = make_grid(1, 128, 4.0);
    GridFunction z = zero_function(grid);
    CHECK(l2_norm(z) == 0.0);
    std::vector<cd> s(grid.size(), cd(0.0, 0.0));
    s[10] = cd(2.0, 0.0);
    GridFunction f = from_spatial(grid, s);
    double dx = grid.dx();
    CHECK(lp_norm(f, 1.0) == doctest::Approx(2.0 * dx));
    CHECK(lp_norm(f, 2.0) == doctest::Approx(2.0 * std::sqrt(dx)));
    GridFunction g = add(f, scale(f, cd(-1.0, 0.0)));
    CHECK(l2_norm(g) <= 1e-14);
}

TEST_CASE("spectral leakage fraction") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 128, 4.0);
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    // one unit of mass inside the cone, one outside
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double w = grid.freq_point(i)(0);
        if (std::abs(w - 1.0) < 1e-9) spec[i] = 1.0;
        if (std::abs(w + 1.0) < 1e-9) spec[i] = 1.0;
    }
    GridFunction f = from_spectrum(grid, std::move(spec));
    CHECK(spectral_leakage(cone, f) == doctest::Approx(0.5).epsilon(1e-12));
}
