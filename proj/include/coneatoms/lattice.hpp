#pragma once

#include "coneatoms/cone.hpp"
#include "coneatoms/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace coneatoms {

// Desk-scale truncation of the cone: determinant band plus a distance cap
// around the identity point.
struct Region {
    double det_min = 0.1;
    double det_max = 10.0;
    double radius_max = 3.0;
};

struct ConeLattice {
    std::vector<Vec> points;
    double delta = 0.5;
    double lambda = 2.0;
    Region region;
    double verified_packing = 0.0;  // min pairwise invariant distance
    double verified_covering = 0.0; // max observed nearest-point gap
};

struct CoverageReport {
    double fraction = 0.0; // probes within lambda*delta of a lattice point
    double max_gap = 0.0;  // largest nearest-distance over all probes
    int probes = 0;
};

// Greedy maximal packing with seeded candidates, log-uniform stratified in
// the determinant. Accepts a candidate iff it is at distance >= 2*delta
// from every accepted point; stops after 300*|points| consecutive
// rejections (the slack buys the 99.9% covering margin).
ConeLattice build_lattice(const ConeDescriptor& cone, double delta,
                          double lambda, const Region& region,
                          std::uint64_t seed);

// Min over all pairs of the invariant distance; +inf for fewer than two
// points.
double verify_packing(const ConeDescriptor& cone, const ConeLattice& lattice);

// Seeded random probes in the region interior (margin lambda*delta from
// the truncation boundary).
CoverageReport verify_covering(const ConeDescriptor& cone,
                               const ConeLattice& lattice, int probes,
                               std::uint64_t seed);

// One point per row: "j,coords...,det".
void write_lattice_csv(std::ostream& os, const ConeDescriptor& cone,
                       const ConeLattice& lattice);

// Seeded draw of a point in the region (shared by the lattice builder and
// the covering probes; margin shrinks the region on all sides).
Vec sample_region_point(const ConeDescriptor& cone, const Region& region,
                        double margin, Rng& rng);

} // namespace coneatoms
