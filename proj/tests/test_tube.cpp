#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coneatoms/besov.hpp"
#include "coneatoms/tube.hpp"

#include <cmath>
#include <sstream>

using namespace coneatoms;

namespace {

// sharp indicator of [1,2] with trapezoid half-weights at the endpoints,
// so grid sums of smooth integrands against it are O(dw^2) accurate
GridFunction indicator12(const FrequencyGrid& grid) {
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double w = grid.freq_point(i)(0);
        if (w > 1.0 + 1e-12 && w < 2.0 - 1e-12)
            spec[i] = 1.0;
        else if (std::abs(w - 1.0) < 1e-12 || std::abs(w - 2.0) < 1e-12)
            spec[i] = 0.5;
    }
    return from_spectrum(grid, std::move(spec));
}

GridFunction smooth_band(const FrequencyGrid& grid, double lo, double hi) {
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double w = grid.freq_point(i)(0);
        spec[i] = bump((w - c) / r);
    }
    return from_spectrum(grid, std::move(spec));
}

// variant for quadratic functionals: the trapezoid half-weight must land
// on |fhat|^2, so the endpoint value is 2^{-1/2}
GridFunction indicator12_sq(const FrequencyGrid& grid) {
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double w = grid.freq_point(i)(0);
        if (w > 1.0 + 1e-12 && w < 2.0 - 1e-12)
            spec[i] = 1.0;
        else if (std::abs(w - 1.0) < 1e-12 || std::abs(w - 2.0) < 1e-12)
            spec[i] = std::sqrt(0.5);
    }
    return from_spectrum(grid, std::move(spec));
}

Partition halfline_partition(const FrequencyGrid& grid, std::uint64_t seed) {
    ConeDescriptor cone = make_halfline();
    Region region{std::exp(-3.0), std::exp(3.0), 10.0};
    ConeLattice lat = build_lattice(cone, 0.5, 2.0, region, seed);
    return build_partition(cone, lat, grid);
}

} // namespace

TEST_CASE("halfline closed-form extension values") {
    ConeDescriptor cone = make_halfline();
    // L = 8/3 puts w = 1 and w = 2 exactly on the grid
    FrequencyGrid grid = make_grid(1, 4096, 8.0 / 3.0);
    GridFunction f = indicator12(grid);
    for (double y : {0.5, 1.0, 2.0}) {
        Vec h(1);
        h << y;
        GridFunction F = extend(cone, f, h);
        double value = std::sqrt(2.0 * M_PI) * F.spatial[grid.N / 2].real();
        double expect = (std::exp(-y) - std::exp(-2.0 * y)) / y;
        CHECK(value == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("extension is linear and damping-Plancherel holds") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 1024, 4.0);
    GridFunction f = smooth_band(grid, 0.5, 2.0);
    GridFunction g = smooth_band(grid, 1.5, 3.0);
    Vec y(1);
    y << 0.7;
    GridFunction lhs = extend(cone, add(f, g), y);
    GridFunction rhs = add(extend(cone, f, y), extend(cone, g, y));
    CHECK(l2_norm(add(lhs, scale(rhs, cd(-1.0, 0.0)))) <= 1e-12);

    double quad = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double w = grid.freq_point(i)(0);
        if (w <= 0.0) continue;
        quad += std::norm(f.spectrum[i]) * std::exp(-2.0 * y(0) * w);
    }
    quad = std::sqrt(quad * grid.dw());
    CHECK(l2_norm(extend(cone, f, y)) == doctest::Approx(quad).epsilon(1e-8));
}

TEST_CASE("semigroup and monotone boundary limit") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 1024, 4.0);
    GridFunction f = smooth_band(grid, 0.5, 2.5);
    Vec y1(1), y2(1), y12(1);
    y1 << 0.3;
    y2 << 0.9;
    y12 << 1.2;
    GridFunction a = extend(cone, extend(cone, f, y1), y2);
    GridFunction b = extend(cone, f, y12);
    CHECK(l2_norm(add(a, scale(b, cd(-1.0, 0.0)))) <= 1e-8);

    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1.0, 0.5, 0.25, 0.125}) {
        Vec h(1);
        h << t;
        double err = l2_norm(add(extend(cone, f, h), scale(f, cd(-1.0, 0.0))));
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("extension rejects leaking spectra and bad heights") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 256, 4.0);
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    spec[10] = 1.0; // negative frequency
    GridFunction bad = from_spectrum(grid, std::move(spec));
    Vec y(1);
    y << 1.0;
    CHECK_THROWS_AS(extend(cone, bad, y), std::domain_error);
    GridFunction f = smooth_band(grid, 0.5, 2.0);
    Vec neg(1);
    neg << -1.0;
    CHECK_THROWS_AS(extend(cone, f, neg), std::domain_error);
}

TEST_CASE("extend_full, slices, and restriction round trip") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 1024, 4.0);
    Partition part = halfline_partition(grid, 42);
    TubeGridOptions opts;
    opts.t_min = 1e-3;
    opts.t_max = 20.0;
    opts.n_t = 80;
    TubeGrid tg = make_tube_grid(cone, grid, 1.0, opts);
    GridFunction f = smooth_band(grid, 1.0, 2.0);
    TubeFunction F = extend_full(cone, f, part, tg);
    CHECK(F.has_boundary);

    // pointwise agreement with plain extend at a middle height
    std::size_t k = tg.heights.size() / 2;
    GridFunction direct = extend(cone, f, tg.heights[k]);
    GridFunction slice = height_slice(F, k);
    CHECK(l2_norm(add(slice, scale(direct, cd(-1.0, 0.0)))) <= 1e-10);

    GridFunction back = restrict_height(cone, F, F.tgrid.min_height, 1e6);
    CHECK(l2_norm(add(back, scale(f, cd(-1.0, 0.0)))) <= 1e-9);

    // tight cap at the deepest height drops nearly all the mass
    CHECK_THROWS_AS(restrict_height(cone, F, tg.heights.size() - 1, 1.5),
                    std::domain_error);

    TubeFunction Z = zero_tube_function(tg);
    CHECK(bergman_norm(cone, Z, ParamSet{2.0, 2.0, 1.0}) == 0.0);
}

TEST_CASE("bergman norm oracle (ln 2)/2") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 4096, 8.0 / 3.0);
    Partition part = halfline_partition(grid, 42);
    TubeGridOptions opts;
    opts.t_min = 1e-6;
    opts.t_max = 30.0;
    opts.n_t = 1600;
    TubeGrid tg = make_tube_grid(cone, grid, 1.0, opts);
    GridFunction f = indicator12_sq(grid);
    TubeFunction F = extend_full(cone, f, part, tg);
    double n = bergman_norm(cone, F, ParamSet{2.0, 2.0, 1.0});
    CHECK(n * n == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-4));
    // homogeneity
    TubeFunction F2 = F;
    for (auto& row : F2.spec)
        for (auto& v : row) v *= 3.0;
    CHECK(bergman_norm(cone, F2, ParamSet{2.0, 2.0, 1.0}) ==
          doctest::Approx(3.0 * n).epsilon(1e-12));
}

TEST_CASE("bergman kernel values and symmetries") {
    ConeDescriptor cone = make_halfline();
    const double c = 1.0 / M_PI;
    CVec zi(1), wi(1);
    zi << cd(0.0, 1.0);
    wi << cd(0.0, 1.0);
    cd B = bergman_kernel(cone, zi, wi, c);
    CHECK(B.real() == doctest::Approx(c / 4.0).epsilon(1e-12));
    CHECK(B.imag() == doctest::Approx(0.0));

    CVec z(1), w(1);
    z << cd(0.3, 0.8);
    w << cd(-1.1, 2.0);
    cd a = bergman_kernel(cone, z, w, c);
    cd b = bergman_kernel(cone, w, z, c);
    CHECK(std::abs(a - std::conj(b)) <= 1e-14);
    for (double t : {2.0, 5.0}) {
        cd scaled = bergman_kernel(cone, CVec(t * z), CVec(t * w), c);
        CHECK(std::abs(scaled - a / (t * t)) <= 1e-12 * std::abs(a));
    }

    CVec outside(1);
    outside << cd(0.0, -1.0);
    CHECK_THROWS_AS(bergman_kernel(cone, outside, wi, c), std::domain_error);
}

TEST_CASE("principal power branch handling") {
    CHECK_THROWS_AS(principal_power(cd(-1.0, 0.0), 0.5), std::domain_error);
    CHECK_THROWS_AS(principal_power(cd(0.0, 0.0), 0.5), std::domain_error);
    cd v = principal_power(cd(0.0, 1.0), 2.0);
    CHECK(v.real() == doctest::Approx(-1.0));
}

TEST_CASE("kernel calibration and reproduction on the half-line") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 2048, 8.0);
    Partition part = halfline_partition(grid, 42);
    TubeGridOptions opts;
    opts.t_min = 1e-4;
    opts.t_max = 40.0;
    opts.n_t = 200;
    TubeGrid tg = make_tube_grid(cone, grid, 1.0, opts);
    GridFunction f = smooth_band(grid, 0.5, 3.0);
    TubeFunction F = extend_full(cone, f, part, tg);

    CVec z0(1);
    z0 << cd(0.0, 1.0);
    double c = calibrate_kernel_constant(cone, F, z0);
    CHECK(c == doctest::Approx(1.0 / M_PI).epsilon(0.02));

    CVec z(1);
    z << cd(0.4, 1.3);
    cd direct = evaluate_at(cone, F, z);
    cd repro = kernel_reproduce(cone, F, z, c);
    CHECK(std::abs(repro - direct) <= 0.01 * std::abs(direct));
}

TEST_CASE("coifman-rochberg atom") {
    ConeDescriptor cone = make_halfline();
    const double c = 1.0 / M_PI;
    CVec xi(1), z(1);
    xi << cd(0.0, 1.0);
    z << cd(0.0, 2.0);
    bool ok = false;
    cd v = cr_atom(cone, z, xi, 0.0, 0.0, 2.0, c, &ok);
    CHECK(ok);
    CHECK(v.real() == doctest::Approx(2.0 / (9.0 * std::sqrt(M_PI))).epsilon(1e-10));
    CHECK(std::abs(v.imag()) <= 1e-12);

    cd at_base = cr_atom(cone, xi, xi, 0.3, 0.1, 2.0, c, nullptr);
    cd expect = principal_power(bergman_kernel(cone, xi, xi, c), (1.0 + 0.3) / 2.0);
    CHECK(std::abs(at_base - expect) <= 1e-12);

    // validity condition: theta must exceed p(1-eps)+eps+gamma-2-r
    cr_atom(cone, z, xi, 0.0, 0.0, 4.0, c, &ok);
    CHECK(!ok); // threshold is 0 at p=4 on the half-line
}

TEST_CASE("tube grids for rank-2 cones carry positive weights in the cone") {
    TubeGridOptions opts;
    opts.n_t = 12;
    for (const char* name : {"lorentz:3", "spd:2"}) {
        ConeDescriptor cone = parse_cone(name);
        FrequencyGrid grid = make_grid(3, 8, 4.0);
        TubeGrid tg = make_tube_grid(cone, grid, 2.0, opts);
        REQUIRE(!tg.heights.empty());
        for (std::size_t k = 0; k < tg.heights.size(); ++k) {
            CHECK(contains(cone, tg.heights[k]));
            CHECK(tg.weights[k] > 0.0);
        }
    }
    // spd(2) total Lebesgue mass doubles the lorentz(3) mass through the
    // isomorphism (2 sqrt(2) Jacobian over sqrt(2) packing scale... the
    // weight ratio is uniformly 2 sqrt 2 by construction)
    ConeDescriptor lc = parse_cone("lorentz:3");
    ConeDescriptor sc = parse_cone("spd:2");
    FrequencyGrid grid = make_grid(3, 8, 4.0);
    TubeGrid tl = make_tube_grid(lc, grid, 1.5, opts);
    TubeGrid ts = make_tube_grid(sc, grid, 1.5, opts);
    REQUIRE(tl.heights.size() == ts.heights.size());
    for (std::size_t k = 0; k < tl.heights.size(); ++k)
        CHECK(ts.weights[k] == doctest::Approx(2.0 * std::sqrt(2.0) *
                                               tl.weights[k]));
}

TEST_CASE("tube csv dump") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 256, 4.0);
    Partition part = halfline_partition(grid, 42);
    TubeGridOptions opts;
    opts.n_t = 8;
    TubeGrid tg = make_tube_grid(cone, grid, 1.0, opts);
    TubeFunction F = extend_full(cone, smooth_band(grid, 1.0, 2.0), part, tg);
    std::ostringstream os;
    write_tube_csv(os, F, 0);
    CHECK(os.str().rfind("x0,re,im\n", 0) == 0);
}
