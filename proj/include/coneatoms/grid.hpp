#pragma once

#include "coneatoms/cone.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace coneatoms {

using cd = std::complex<double>;

// Uniform frequency box [-L, L)^n with N points per axis and the dual
// spatial grid under the unitary transform with (2pi)^{-n/2}
// normalization. Spatial spacing dx = pi/L so that dx * dw * N = 2pi.
struct FrequencyGrid {
    int dims = 1;
    int N = 256;    // points per axis, power of two
    double L = 8.0; // frequency half-width per axis

    double dw() const { return 2.0 * L / N; }
    double dx() const { return M_PI / L; }
    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dims; ++d) s *= static_cast<std::size_t>(N);
        return s;
    }
    double freq_coord(int k) const { return -L + k * dw(); }
    double space_coord(int m) const { return (m - N / 2) * dx(); }

    void decode(std::size_t flat, int* idx) const {
        for (int d = dims - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(flat % N);
            flat /= N;
        }
    }
    std::size_t encode(const int* idx) const {
        std::size_t flat = 0;
        for (int d = 0; d < dims; ++d) flat = flat * N + idx[d];
        return flat;
    }
    Vec freq_point(std::size_t flat) const {
        int idx[3];
        decode(flat, idx);
        Vec w(dims);
        for (int d = 0; d < dims; ++d) w(d) = freq_coord(idx[d]);
        return w;
    }
    Vec space_point(std::size_t flat) const {
        int idx[3];
        decode(flat, idx);
        Vec x(dims);
        for (int d = 0; d < dims; ++d) x(d) = space_coord(idx[d]);
        return x;
    }
    bool compatible(const FrequencyGrid& o) const {
        return dims == o.dims && N == o.N && L == o.L;
    }
};

FrequencyGrid make_grid(int dims, int N, double L);

// Complex samples on the spatial grid together with their discrete
// spectrum; both sides are kept in sync on construction.
struct GridFunction {
    FrequencyGrid grid;
    std::vector<cd> spatial;
    std::vector<cd> spectrum;
};

GridFunction from_spatial(const FrequencyGrid& grid, std::vector<cd> samples);
GridFunction from_spectrum(const FrequencyGrid& grid, std::vector<cd> spec);
GridFunction zero_function(const FrequencyGrid& grid);

// Unitary DFT between the spatial and frequency grids.
std::vector<cd> dft(const FrequencyGrid& grid, const std::vector<cd>& in,
                    bool forward);

// (sum |f|^p dx^n)^{1/p} over the spatial grid.
double lp_norm(const GridFunction& f, double p);
double l2_norm(const GridFunction& f);
// (sum |fhat|^2 dw^n)^{1/2}.
double spectral_l2(const GridFunction& f);

GridFunction add(const GridFunction& a, const GridFunction& b);
GridFunction scale(const GridFunction& a, cd factor);

// Fraction of spectral mass (squared) at frequency points outside the
// closed cone.
double spectral_leakage(const ConeDescriptor& cone, const GridFunction& f);

} // namespace coneatoms
