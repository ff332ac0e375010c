#pragma once

#include "coneatoms/cone.hpp"
#include "coneatoms/grid.hpp"
#include "coneatoms/lattice.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace coneatoms {

// Smooth compact bump: eta(s) = exp(1 - 1/(1 - s^2)) for |s| < 1, else 0.
double bump(double s);

// One frequency window of the partition, stored sparsely on its support
// ball B_2(center).
struct SpectralWindow {
    int j = 0;
    Vec center;
    std::vector<std::pair<std::uint32_t, double>> values; // (flat index, value)
};

struct Partition {
    FrequencyGrid grid;
    std::vector<SpectralWindow> windows;
    // sorted flat indices of cone grid points where the window sum was
    // normalized to one
    std::vector<std::uint32_t> interior_mask;
};

// Normalized-bump partition subordinate to the lattice balls: windows sum
// to one at every cone grid point reached by at least one bump.
Partition build_partition(const ConeDescriptor& cone, const ConeLattice& lattice,
                          const FrequencyGrid& grid);

// Spectrum of the result is fhat * psihat_j pointwise.
GridFunction window_convolve(const GridFunction& f, const SpectralWindow& window);

// sum_j f * psi_j; equals fhat restricted to the interior mask.
GridFunction sharp_projection(const GridFunction& f, const Partition& partition);

// CSV dump of one window: frequency coordinates and value per row.
void write_window_csv(std::ostream& os, const Partition& partition, int j);

} // namespace coneatoms
