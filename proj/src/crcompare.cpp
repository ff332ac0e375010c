#include "coneatoms/crcompare.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace coneatoms {

DomainConstants constants(const ConeDescriptor& cone) {
    DomainConstants c;
    c.eps = 0.5 * cone.R / cone.n;
    c.gamma = 0.5 - c.eps;
    return c;
}

double r_to_nu(const ConeDescriptor& cone, double r) {
    return 2.0 * cone.n * r / cone.R + static_cast<double>(cone.n) / cone.R;
}

double nu_to_r(const ConeDescriptor& cone, double nu) {
    return (nu - static_cast<double>(cone.n) / cone.R) * cone.R / (2.0 * cone.n);
}

double our_threshold(const ConeDescriptor& cone, double p) {
    if (p < 1.0) throw std::invalid_argument("p < 1");
    const double eps = constants(cone).eps;
    return std::max(-eps, -1.5 + p * (1.0 - eps) + eps - 0.5 * p);
}

double cr_threshold(const ConeDescriptor& cone, double p) {
    if (p < 1.0) throw std::invalid_argument("p < 1");
    const DomainConstants c = constants(cone);
    return std::max(-c.eps + c.gamma, -1.5 + p * (1.0 - c.eps));
}

std::vector<RangeReport> compare(const ConeDescriptor& cone,
                                 const std::vector<double>& p_values) {
    std::vector<RangeReport> out;
    out.reserve(p_values.size());
    for (double p : p_values) {
        RangeReport r;
        r.p = p;
        r.r_ours = our_threshold(cone, p);
        r.r_cr = cr_threshold(cone, p);
        r.nu_ours = r_to_nu(cone, r.r_ours);
        r.nu_cr = r_to_nu(cone, r.r_cr);
        r.dominates = r.r_ours <= r.r_cr;
        out.push_back(r);
    }
    return out;
}

void write_compare_csv(std::ostream& os, const std::vector<RangeReport>& reports) {
    os << "p,r_ours,r_cr,nu_ours,nu_cr,dominates\n";
    char buf[160];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d\n",
                      r.p, r.r_ours, r.r_cr, r.nu_ours, r.nu_cr,
                      r.dominates ? 1 : 0);
        os << buf;
    }
}

} // namespace coneatoms
