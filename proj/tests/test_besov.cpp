#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coneatoms/besov.hpp"

#include <cmath>
#include <limits>

using namespace coneatoms;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

GridFunction band_bump(const FrequencyGrid& grid, double c, double r) {
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    for (std::size_t i = 0; i < grid.size(); ++i)
        spec[i] = bump((grid.freq_point(i)(0) - c) / r);
    return from_spectrum(grid, std::move(spec));
}
} // namespace

TEST_CASE("q-tilde index examples") {
    ConeDescriptor lorentz = make_lorentz(3);
    ConeDescriptor spd3 = parse_cone("spd:3");

    // n/R = 1.5 is not above p' = 2: no finite embedding bound
    CHECK(qtilde_index(lorentz, ParamSet{2.0, 2.0, 1.0}) == kInf);
    // boundary case n/R = p' = 2 on spd(3)
    CHECK(qtilde_index(spd3, ParamSet{2.0, 2.0, 1.0}) == kInf);
    // interior case: (1 + 2 - 1)/(2/(4/3) - 1) = 4
    CHECK(qtilde_index(spd3, ParamSet{4.0, 2.0, 1.0}) ==
          doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("q index examples") {
    ConeDescriptor half = make_halfline();
    ConeDescriptor lorentz = make_lorentz(3);

    // rank-1 line: n = R, the extension is void
    CHECK(q_index(half, ParamSet{2.0, 2.0, 3.0}) == kInf);
    // lorentz(3), nu = 2: min(2,2)(2 + 0.5)/0.5 = 10
    CHECK(q_index(lorentz, ParamSet{2.0, 2.0, 2.0}) ==
          doctest::Approx(10.0).epsilon(1e-14));
    // p = 1: min(1,inf)(2 + 0.5)/0.5 = 5
    CHECK(q_index(lorentz, ParamSet{1.0, 2.0, 2.0}) ==
          doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("index gate decisions and flags") {
    ConeDescriptor lorentz = make_lorentz(3);
    IndexReport ok = index_gate(lorentz, ParamSet{2.0, 2.0, 2.0});
    CHECK(ok.embedding_ok);
    CHECK(ok.isomorphism_ok);
    CHECK(ok.atomic_ok);
    CHECK(ok.rank2_extended_flag);

    // q = 12 exceeds q_index = 10
    IndexReport bad = index_gate(lorentz, ParamSet{2.0, 12.0, 2.0});
    CHECK(!bad.isomorphism_ok);
    CHECK(!bad.atomic_ok);

    // nu at the critical line n/R - 1 fails the smoothness condition
    IndexReport crit = index_gate(lorentz, ParamSet{2.0, 2.0, 0.5});
    CHECK(!crit.isomorphism_ok);

    ConeDescriptor spd3 = parse_cone("spd:3");
    CHECK(!index_gate(spd3, ParamSet{2.0, 2.0, 2.0}).rank2_extended_flag);
}

TEST_CASE("index report json serialization") {
    ConeDescriptor lorentz = make_lorentz(3);
    std::string js = index_gate(lorentz, ParamSet{2.0, 2.0, 2.0}).to_json();
    CHECK(js.find("\"q_tilde\":\"inf\"") != std::string::npos);
    CHECK(js.find("\"q_index\":10") != std::string::npos);
    CHECK(js.find("\"atomic_ok\":true") != std::string::npos);
    CHECK(js.find("\"rank2_extended_flag\":true") != std::string::npos);
}

TEST_CASE("finite indices satisfy 2 < q_index <= q_tilde") {
    ConeDescriptor spd3 = parse_cone("spd:3"); // n/R = 2
    Rng rng(99);
    for (int it = 0; it < 1000; ++it) {
        ParamSet ps;
        ps.p = 2.0 + 8.0 * rng.uniform();       // p' < 2 keeps q_tilde finite
        ps.nu = 1.0 + 1e-6 + 4.0 * rng.uniform(); // above n/R - 1
        double qi = q_index(spd3, ps);
        double qt = qtilde_index(spd3, ps);
        REQUIRE(std::isfinite(qi));
        REQUIRE(std::isfinite(qt));
        CHECK(qi > 2.0);
        CHECK(qi <= qt * (1.0 + 1e-12));
    }
}

TEST_CASE("besov norm: zero, homogeneity, grid mismatch") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 1024, 8.0);
    Region region{std::exp(-3.0), std::exp(3.0), 10.0};
    ConeLattice lat = build_lattice(cone, 0.5, 2.0, region, 42);
    Partition part = build_partition(cone, lat, grid);
    ParamSet ps{2.0, 2.0, 1.0};

    CHECK(besov_norm(cone, zero_function(grid), part, ps) == 0.0);

    GridFunction f = band_bump(grid, 1.5, 0.4);
    double n1 = besov_norm(cone, f, part, ps);
    double n2 = besov_norm(cone, scale(f, cd(2.0, 0.0)), part, ps);
    CHECK(n2 == doctest::Approx(2.0 * n1).epsilon(1e-12));

    FrequencyGrid other = make_grid(1, 512, 8.0);
    CHECK_THROWS_AS(besov_norm(cone, zero_function(other), part, ps),
                    std::invalid_argument);
}

TEST_CASE("besov norm against the single-window closed form") {
    // one lattice point at e: the window is identically one on its ball, so
    // the norm collapses to Delta(e)^{-nu/q} |f|_p = |f|_p
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 512, 8.0);
    ConeLattice lat;
    lat.delta = 0.5;
    lat.lambda = 2.0;
    lat.points.push_back(cone.e);
    Partition part = build_partition(cone, lat, grid);
    GridFunction f = band_bump(grid, 1.5, 0.3);
    for (double p : {1.0, 2.0, 3.0})
        for (double nu : {0.5, 1.0, 2.5}) {
            ParamSet ps{p, 2.0, nu};
            CHECK(besov_norm(cone, f, part, ps) ==
                  doctest::Approx(lp_norm(f, p)).epsilon(1e-6));
        }
}

TEST_CASE("besov norm is invariant under grid translations") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 1024, 8.0);
    Region region{std::exp(-3.0), std::exp(3.0), 10.0};
    ConeLattice lat = build_lattice(cone, 0.5, 2.0, region, 42);
    Partition part = build_partition(cone, lat, grid);
    GridFunction f = band_bump(grid, 2.0, 0.6);

    double u = 16.0 * grid.dx(); // lattice-commensurate shift: cyclic in space
    std::vector<cd> spec = f.spectrum;
    for (std::size_t i = 0; i < spec.size(); ++i)
        spec[i] *= std::exp(cd(0.0, -grid.freq_point(i)(0) * u));
    GridFunction g = from_spectrum(grid, std::move(spec));

    for (double p : {1.5, 2.0}) {
        ParamSet ps{p, 2.5, 1.2};
        CHECK(besov_norm(cone, g, part, ps) ==
              doctest::Approx(besov_norm(cone, f, part, ps)).epsilon(1e-8));
    }
}

TEST_CASE("besov norm decreases in nu when all active windows sit above e") {
    ConeDescriptor cone = make_halfline();
    FrequencyGrid grid = make_grid(1, 1024, 8.0);
    Region region{2.0, 8.0, 5.0};
    ConeLattice lat = build_lattice(cone, 0.5, 2.0, region, 42);
    Partition part = build_partition(cone, lat, grid);
    GridFunction f = band_bump(grid, 3.0, 1.0); // spectrum in [2, 4]

    double prev = kInf;
    for (double nu : {0.5, 1.0, 2.0, 3.0}) {
        double v = besov_norm(cone, f, part, ParamSet{2.0, 2.0, nu});
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
}

static AtomSystem& small_system() {
    static AtomSystem sys = [] {
        ConeDescriptor cone = make_halfline();
        FrequencyGrid grid = make_grid(1, 1024, 16.0);
        Region region{std::exp(-1.0), std::exp(1.0), 4.0};
        ConeLattice lat = build_lattice(cone, 0.5, 2.0, region, 42);
        MotherWavelet mother;
        mother.radius = 1.3;
        return build_atom_system(cone, lat, 1.5, mother, grid, 42);
    }();
    return sys;
}

TEST_CASE("sequence norm: zero, homogeneity, size check") {
    const AtomSystem& sys = small_system();
    ParamSet ps{2.0, 2.0, 1.0};
    std::vector<cd> zero(sys.total, cd(0.0, 0.0));
    CHECK(sequence_norm(zero, sys, ps) == 0.0);

    Rng rng(5);
    std::vector<cd> c(sys.total);
    for (cd& v : c) v = cd(rng.normal(), rng.normal());
    std::vector<cd> c3 = c;
    for (cd& v : c3) v *= 3.0;
    CHECK(sequence_norm(c3, sys, ps) ==
          doctest::Approx(3.0 * sequence_norm(c, sys, ps)).epsilon(1e-12));

    std::vector<cd> wrong(sys.total + 1, cd(0.0, 0.0));
    CHECK_THROWS_AS(sequence_norm(wrong, sys, ps), std::invalid_argument);
}

TEST_CASE("sequence norm single-cell closed form") {
    const AtomSystem& sys = small_system();
    const ConeDescriptor& cone = sys.cone;
    const AtomGroup& grp = sys.groups[sys.groups.size() / 2];
    std::vector<cd> c(sys.total, cd(0.0, 0.0));
    c[grp.offset + 1] = cd(0.3, -0.4); // modulus 1/2

    ParamSet ps{1.5, 3.0, 2.0};
    double alpha =
        ps.nu - ps.q * cone.n / (2.0 * cone.R) - double(cone.n) / cone.R;
    double inner = std::pow(0.5, ps.p) * grp.box_vol;
    double expect = std::pow(std::pow(inner, ps.q / ps.p) *
                                 std::pow(det(cone, grp.y), alpha) *
                                 grp.ball_vol,
                             1.0 / ps.q);
    CHECK(sequence_norm(c, sys, ps) ==
          doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sequence norm at p = q is a weighted lp norm") {
    const AtomSystem& sys = small_system();
    const ConeDescriptor& cone = sys.cone;
    Rng rng(11);
    std::vector<cd> c(sys.total);
    for (cd& v : c) v = cd(rng.normal(), rng.normal());

    for (double p : {1.0, 2.0, 2.7}) {
        ParamSet ps{p, p, 1.7};
        double alpha =
            ps.nu - ps.q * cone.n / (2.0 * cone.R) - double(cone.n) / cone.R;
        double acc = 0.0;
        for (const auto& grp : sys.groups) {
            double wgt = grp.box_vol * std::pow(det(cone, grp.y), alpha) *
                         grp.ball_vol;
            for (std::size_t k = 0; k < grp.count; ++k)
                acc += std::pow(std::abs(c[grp.offset + k]), p) * wgt;
        }
        CHECK(sequence_norm(c, sys, ps) ==
              doctest::Approx(std::pow(acc, 1.0 / p)).epsilon(1e-10));
    }
}
