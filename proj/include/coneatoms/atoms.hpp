#pragma once

#include "coneatoms/cone.hpp"
#include "coneatoms/grid.hpp"
#include "coneatoms/lattice.hpp"
#include "coneatoms/spectral.hpp"
#include "coneatoms/tube.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace coneatoms {

// Mother wavelet, fixed by its spectral profile: psi-hat is the smooth
// bump supported on the invariant ball B_radius(e) inside the cone.
struct MotherWavelet {
    double radius = 1.0;
    double spectrum_at(const ConeDescriptor& cone, const Vec& u) const;
};

GridFunction mother_grid_function(const ConeDescriptor& cone,
                                  const MotherWavelet& mother,
                                  const FrequencyGrid& grid);

// All atoms sharing one lattice point y_j: translates x = h_j(step * k)
// of the h_j-dilated mother, k ranging over a box per axis.
struct AtomGroup {
    GroupElement h;
    Vec y;
    // Scale applied to psihat(h^T w); the continuum value is
    // absdet^{1/2}, adjusted so the discrete atom norm equals the mother
    // norm exactly.
    double absdet_sqrt = 1.0;
    std::array<int, 3> kmin{}, kmax{};      // inclusive translate ranges
    std::vector<std::uint32_t> support;     // frequency flat indices
    std::vector<double> base;               // absdet_sqrt * psihat(h^T w)
    std::vector<Vec> u;                     // h^T w at support points
    std::size_t offset = 0;                 // first coefficient index
    std::size_t count = 0;                  // number of translates
    double box_vol = 0.0;                   // |det h| step^n
    double ball_vol = 0.0;                  // Lebesgue volume of B_{lambda delta}(y_j)
    double weight = 0.0;                    // invariant cell measure C_inv * step^n
};

struct AtomSystem {
    ConeDescriptor cone;
    FrequencyGrid grid;
    MotherWavelet mother;
    double delta = 0.5;
    double lambda = 2.0;
    double spatial_step = 1.0;
    double inv_ball_volume = 0.0; // invariant volume of B_{lambda delta}(e)
    std::vector<AtomGroup> groups;
    std::size_t total = 0;
    int overlap_observed = 0;     // Monte Carlo cell-multiplicity audit
    double coverage = 0.0;        // Monte Carlo cell-coverage fraction
};

struct CoeffSequence {
    std::vector<cd> values;
    double residual = 0.0;     // relative L2 residual of the frame inversion
    int iterations = 0;
    double frame_lower = 0.0;  // power-iteration estimates of A and B
    double frame_upper = 0.0;
};

// Monte Carlo invariant volume of the ball B_radius(e); closed form on
// the half-line.
double invariant_ball_volume(const ConeDescriptor& cone, double radius,
                             std::uint64_t seed);

AtomSystem build_atom_system(const ConeDescriptor& cone,
                             const ConeLattice& lattice, double spatial_step,
                             const MotherWavelet& mother,
                             const FrequencyGrid& grid, std::uint64_t seed);

GridFunction atom_eval(const AtomSystem& system, std::size_t i);

// Frame operator S f = sum_i w_i <f, atom_i> atom_i applied spectrally.
std::vector<cd> frame_apply(const AtomSystem& system, const std::vector<cd>& spec);

// Dual-frame coefficients via Richardson iteration on S; residual is
// |f - synthesize(c)|_2 / |f|_2.
CoeffSequence analyze(const GridFunction& f, const AtomSystem& system,
                      double tol, int max_iter, std::uint64_t seed = 7);

GridFunction synthesize(const std::vector<cd>& coeffs, const AtomSystem& system,
                        const FrequencyGrid& grid);

TubeFunction bergman_atom_eval(const AtomSystem& system, std::size_t i,
                               const Partition& partition, const TubeGrid& tgrid);

CoeffSequence bergman_analyze(const TubeFunction& F, const AtomSystem& system,
                              double tol, int max_iter,
                              double amplification_cap = 1e6,
                              std::uint64_t seed = 7);

TubeFunction bergman_synthesize(const std::vector<cd>& coeffs,
                                const AtomSystem& system,
                                const Partition& partition,
                                const TubeGrid& tgrid);

// CSV dump: "i,y_coords...,x_coords...,re,im".
void write_coeffs_csv(std::ostream& os, const AtomSystem& system,
                      const std::vector<cd>& coeffs);

// Decodes a flat atom index into (group, translate indices).
std::pair<std::size_t, std::array<int, 3>> atom_location(const AtomSystem& system,
                                                         std::size_t i);
// Spatial translate point of atom i.
Vec atom_position(const AtomSystem& system, std::size_t i);

} // namespace coneatoms
