#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coneatoms/crcompare.hpp"

#include <cmath>
#include <sstream>

using namespace coneatoms;

TEST_CASE("domain constants") {
    DomainConstants h = constants(make_halfline());
    CHECK(h.eps == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h.gamma == doctest::Approx(0.0).epsilon(1e-15));

    DomainConstants l = constants(make_lorentz(3));
    CHECK(l.eps == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(l.gamma == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

    DomainConstants s = constants(parse_cone("spd:2"));
    CHECK(s.eps == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(s.gamma == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

    // the two constants always split one half
    for (const char* name : {"halfline", "lorentz:3", "spd:2", "spd:4",
                             "lorentz:7"}) {
        DomainConstants c = constants(parse_cone(name));
        CHECK(c.eps + c.gamma == doctest::Approx(0.5).epsilon(1e-15));
    }
}

TEST_CASE("weight parameter maps are mutually inverse") {
    ConeDescriptor lorentz = make_lorentz(3);
    // nu = 3r + 3/2 on lorentz(3)
    CHECK(r_to_nu(lorentz, 0.0) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(nu_to_r(lorentz, 1.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(nu_to_r(lorentz, 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    for (double r : {-0.4, -1.0 / 6.0, 0.0, 0.8, 2.3})
        CHECK(nu_to_r(lorentz, r_to_nu(lorentz, r)) ==
              doctest::Approx(r).epsilon(1e-14));
}

TEST_CASE("threshold values") {
    ConeDescriptor half = make_halfline();
    ConeDescriptor lorentz = make_lorentz(3);

    // at p = 1 the first branch is active: threshold is -eps
    CHECK(our_threshold(half, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(our_threshold(lorentz, 1.0) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

    // acceptance anchors at p = 2
    CHECK(our_threshold(lorentz, 2.0) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(cr_threshold(lorentz, 2.0) ==
          doctest::Approx(-1.0 / 6.0).epsilon(1e-14));
    CHECK(our_threshold(half, 2.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(cr_threshold(half, 2.0) == doctest::Approx(-0.5).epsilon(1e-14));

    // half-line, p = 3: the growth branch reaches zero
    CHECK(cr_threshold(half, 3.0) == doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(our_threshold(half, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(cr_threshold(half, 0.5), std::invalid_argument);
}

TEST_CASE("our range dominates the classical one on a p sweep") {
    std::vector<double> ps;
    for (int k = 0; k <= 300; ++k) ps.push_back(1.0 + 0.01 * k);
    for (const char* name : {"halfline", "lorentz:3", "spd:2"}) {
        ConeDescriptor cone = parse_cone(name);
        std::vector<RangeReport> reps = compare(cone, ps);
        REQUIRE(reps.size() == ps.size());
        for (const RangeReport& r : reps) {
            CHECK(r.dominates);
            CHECK(r.r_ours <= r.r_cr + 1e-15);
            // the nu picture is consistent with the r picture
            CHECK(r.nu_ours == doctest::Approx(r_to_nu(cone, r.r_ours))
                                   .epsilon(1e-14));
            CHECK(r.nu_cr ==
                  doctest::Approx(r_to_nu(cone, r.r_cr)).epsilon(1e-14));
        }
    }
}

TEST_CASE("comparison csv dump") {
    ConeDescriptor cone = make_lorentz(3);
    std::vector<RangeReport> reps = compare(cone, {1.0, 2.0});
    std::ostringstream os;
    write_compare_csv(os, reps);
    const std::string s = os.str();
    CHECK(s.rfind("p,r_ours,r_cr,nu_ours,nu_cr,dominates\n", 0) == 0);
    CHECK(s.find(",1\n") != std::string::npos);
}
