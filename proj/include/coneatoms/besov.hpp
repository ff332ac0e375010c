#pragma once

#include "coneatoms/atoms.hpp"
#include "coneatoms/cone.hpp"
#include "coneatoms/grid.hpp"
#include "coneatoms/spectral.hpp"
#include "coneatoms/tube.hpp"

#include <string>
#include <vector>

namespace coneatoms {

struct IndexReport {
    double q_tilde = 0.0;  // infinity() when the defining condition fails
    double q_index = 0.0;
    bool embedding_ok = false;   // q < q_tilde
    bool isomorphism_ok = false; // nu > n/R - 1 and q < q_index
    bool atomic_ok = false;
    bool rank2_extended_flag = false; // rank-2 cone, q_index extension in use

    std::string to_json() const; // infinities serialized as "inf"
};

// q~_{nu,p} = (nu + n/R - 1)/(n/(R p') - 1) when n/R > p', else infinity.
double qtilde_index(const ConeDescriptor& cone, const ParamSet& params);

// q_{nu,p} = min(p,p') (nu + n/R - 1)/(n/R - 1) when n > R, else infinity.
double q_index(const ConeDescriptor& cone, const ParamSet& params);

IndexReport index_gate(const ConeDescriptor& cone, const ParamSet& params);

// (sum_j Delta(x_j)^{-nu} |f * psi_j|_p^q)^{1/q}; windows with negligible
// spectral mass are skipped.
double besov_norm(const ConeDescriptor& cone, const GridFunction& f,
                  const Partition& partition, const ParamSet& params);

// b^{p,q}_nu norm of atom coefficients, cell-by-cell closed form with the
// determinant frozen at the cell center; weighted l^p when p = q.
double sequence_norm(const std::vector<cd>& coeffs, const AtomSystem& system,
                     const ParamSet& params);

} // namespace coneatoms
