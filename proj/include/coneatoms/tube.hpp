#pragma once

#include "coneatoms/cone.hpp"
#include "coneatoms/grid.hpp"
#include "coneatoms/spectral.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

namespace coneatoms {

struct ParamSet {
    double p = 2.0;
    double q = 2.0;
    double nu = 1.0;
    double p_prime() const {
        return p > 1.0 ? p / (p - 1.0) : std::numeric_limits<double>::infinity();
    }
};

struct TubeGridOptions {
    double t_min = 1e-3;
    double t_max = 30.0;
    int n_t = 160;        // log-radial nodes
    double alpha_max = 2.0; // rank-2 cones: boost truncation
    int n_alpha = 4;
    int n_omega = 8;      // lorentz(3): angular nodes on the circle
};

// Quadrature heights y_k in the cone with weights approximating
// int_Omega . Delta(y)^{nu - n/R} dy over the truncated region
// (log-radial product rule).
struct TubeGrid {
    FrequencyGrid xgrid;
    double nu = 1.0;
    std::vector<Vec> heights;
    std::vector<double> weights;
    std::size_t min_height = 0; // index of the smallest height
};

TubeGrid make_tube_grid(const ConeDescriptor& cone, const FrequencyGrid& xgrid,
                        double nu, const TubeGridOptions& opts);

// Holomorphic-extension samples at the tube-grid heights, held spectrally
// on the (shared) band support; spatial slices are materialized on demand.
struct TubeFunction {
    TubeGrid tgrid;
    std::vector<std::uint32_t> support;  // flat frequency indices, sorted
    std::vector<std::vector<cd>> spec;   // [height][support position]
    GridFunction boundary;               // provenance, when built by extension
    bool has_boundary = false;
};

// Fourier-Laplace extension at a single height: spectrum damped by
// exp(-<y,w>). Throws if y is outside the cone or more than 1e-10 of the
// spectral mass sits outside the closed cone.
GridFunction extend(const ConeDescriptor& cone, const GridFunction& f, const Vec& y);

// sharp_projection followed by extension at every tube-grid height.
TubeFunction extend_full(const ConeDescriptor& cone, const GridFunction& f,
                         const Partition& partition, const TubeGrid& tgrid);

TubeFunction zero_tube_function(const TubeGrid& tgrid);

// Materializes F(. + i y_k) as a grid function.
GridFunction height_slice(const TubeFunction& F, std::size_t k);

// Inverse of extend at a stored height: multiplies the slice spectrum by
// exp(+<y,w>), zeroing frequencies where the factor exceeds the cap.
// Throws if the zeroed spectral mass exceeds 1e-6 of the total.
GridFunction restrict_height(const ConeDescriptor& cone, const TubeFunction& F,
                             std::size_t k, double amplification_cap);

// Mixed norm (int_Omega (int_V |F|^p dx)^{q/p} Delta^{nu-n/R} dy)^{1/q}
// using the stored height weights. params.nu must match the tube grid.
double bergman_norm(const ConeDescriptor& cone, const TubeFunction& F,
                    const ParamSet& params);

// Principal-branch power; throws std::domain_error when the base lies on
// the negative real axis within 1e-12 relative.
cd principal_power(cd base, double exponent);

// B(z,w) = c * Delta((z - conj(w))/i)^{-2n/R}.
cd bergman_kernel(const ConeDescriptor& cone, const CVec& z, const CVec& w,
                  double c);

// Evaluates the extension off-grid from the boundary spectrum.
cd evaluate_at(const ConeDescriptor& cone, const TubeFunction& F, const CVec& z);

// Calibrates the kernel constant by enforcing the reproducing property
// numerically at z0 for the given test function (tube grid must carry
// nu = n/R so its weights are plain Lebesgue).
double calibrate_kernel_constant(const ConeDescriptor& cone,
                                 const TubeFunction& F, const CVec& z0);

// Quadrature of F(w) B(z,w) over the truncated tube.
cd kernel_reproduce(const ConeDescriptor& cone, const TubeFunction& F,
                    const CVec& z, double c);

// Coifman-Rochberg atom (B(z,xi)^2/B(xi,xi))^{(1+r)/p} (B(z,xi)/B(xi,xi))^{theta/p}.
// condition_ok (optional) reports the validity inequality on theta.
cd cr_atom(const ConeDescriptor& cone, const CVec& z, const CVec& xi, double r,
           double theta, double p, double c, bool* condition_ok = nullptr);

// CSV per height: x-coordinates, Re F, Im F.
void write_tube_csv(std::ostream& os, const TubeFunction& F, std::size_t k);

} // namespace coneatoms
