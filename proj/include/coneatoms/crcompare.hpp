#pragma once

#include "coneatoms/cone.hpp"

#include <iosfwd>
#include <vector>

namespace coneatoms {

struct DomainConstants {
    double eps = 0.5;   // eps_D = R/(2n)
    double gamma = 0.0; // gamma_D = 1/2 - eps_D
};

struct RangeReport {
    double p = 1.0;
    double r_ours = 0.0;
    double r_cr = 0.0;
    double nu_ours = 0.0;
    double nu_cr = 0.0;
    bool dominates = false; // r_ours <= r_cr
};

DomainConstants constants(const ConeDescriptor& cone);

// nu = 2 n r / R + n / R and its inverse.
double r_to_nu(const ConeDescriptor& cone, double r);
double nu_to_r(const ConeDescriptor& cone, double nu);

// r > max{-eps, -3/2 + p(1 - eps) + eps - p/2}.
double our_threshold(const ConeDescriptor& cone, double p);

// Coifman-Rochberg range at theta = 0: r > max{-eps + gamma, -3/2 + p(1 - eps)}.
double cr_threshold(const ConeDescriptor& cone, double p);

std::vector<RangeReport> compare(const ConeDescriptor& cone,
                                 const std::vector<double>& p_values);

// CSV: "p,r_ours,r_cr,nu_ours,nu_cr,dominates".
void write_compare_csv(std::ostream& os, const std::vector<RangeReport>& reports);

} // namespace coneatoms
