#include "coneatoms/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace coneatoms {

namespace {

void check_region(const ConeDescriptor& cone, const Region& region,
                  double margin) {
    if (!(region.det_min > 0.0) || !(region.det_max > region.det_min) ||
        !(region.radius_max > 0.0))
        throw std::invalid_argument("invalid region bounds");
    double tau_lo = std::log(region.det_min) + margin * std::sqrt((double)cone.R);
    double tau_hi = std::log(region.det_max) - margin * std::sqrt((double)cone.R);
    double rmax = region.radius_max - margin;
    if (tau_lo > tau_hi || rmax <= 0.0)
        throw std::invalid_argument("region empty after margin");
    // every tau in range must admit |tau|/sqrt(R) <= rmax somewhere
    double best = std::min(std::abs(tau_lo), std::abs(tau_hi));
    if (tau_lo <= 0.0 && tau_hi >= 0.0) best = 0.0;
    if (best / std::sqrt((double)cone.R) > rmax)
        throw std::invalid_argument("region empty: determinant band outside radius cap");
}

Vec random_orientation(const ConeDescriptor& cone, Rng& rng) {
    switch (cone.kind) {
        case ConeKind::halfline:
            return Vec();
        case ConeKind::lorentz: {
            int d = cone.m - 1;
            Vec u(d);
            double nrm = 0.0;
            do {
                for (int k = 0; k < d; ++k) u(k) = rng.normal();
                nrm = u.norm();
            } while (nrm < 1e-12);
            return u / nrm;
        }
        case ConeKind::spd: {
            int r = cone.m;
            Mat G(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) G(i, j) = rng.normal();
            Eigen::HouseholderQR<Mat> qr(G);
            Mat Q = qr.householderQ();
            Vec flat(r * r);
            Eigen::Map<Mat>(flat.data(), r, r) = Q;
            return flat;
        }
    }
    return Vec();
}

} // namespace

Vec sample_region_point(const ConeDescriptor& cone, const Region& region,
                        double margin, Rng& rng) {
    const int R = cone.R;
    const double sqR = std::sqrt((double)R);
    double tau_lo = std::log(region.det_min) + margin * sqR;
    double tau_hi = std::log(region.det_max) - margin * sqR;
    double rmax = region.radius_max - margin;

    // log-uniform determinant stratification; retry until the radius cap
    // leaves room for the traceless part
    double tau, rad2;
    do {
        tau = rng.uniform(tau_lo, tau_hi);
        rad2 = rmax * rmax - tau * tau / R;
    } while (rad2 < 0.0);

    std::vector<double> logeig(R, tau / R);
    if (R > 1) {
        // uniform draw in the traceless ball of radius sqrt(rad2)
        Vec g(R);
        double nrm = 0.0;
        do {
            for (int k = 0; k < R; ++k) g(k) = rng.normal();
            g.array() -= g.mean();
            nrm = g.norm();
        } while (nrm < 1e-12);
        double rho = std::sqrt(rad2) * std::pow(rng.uniform(), 1.0 / (R - 1));
        for (int k = 0; k < R; ++k) logeig[k] += rho * g(k) / nrm;
    }

    std::vector<double> eigs(R);
    for (int k = 0; k < R; ++k) eigs[k] = std::exp(logeig[k]);
    return point_from_spectrum(cone, eigs, random_orientation(cone, rng));
}

ConeLattice build_lattice(const ConeDescriptor& cone, double delta,
                          double lambda, const Region& region,
                          std::uint64_t seed) {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (!(lambda >= 2.0)) throw std::invalid_argument("lambda must be >= 2");
    check_region(cone, region, 0.0);

    ConeLattice lat;
    lat.delta = delta;
    lat.lambda = lambda;
    lat.region = region;

    Rng rng(seed);
    const std::size_t hard_cap = 2000000;
    std::size_t rejects = 0;
    std::size_t draws = 0;
    while (draws < hard_cap) {
        ++draws;
        Vec cand = sample_region_point(cone, region, 0.0, rng);
        bool ok = true;
        for (const Vec& p : lat.points) {
            if (distance(cone, p, cand) < 2.0 * delta) {
                ok = false;
                break;
            }
        }
        if (ok) {
            lat.points.push_back(std::move(cand));
            rejects = 0;
        } else if (++rejects >= std::max<std::size_t>(300 * lat.points.size(), 3000)) {
            break;
        }
    }
    if (lat.points.empty())
        throw std::runtime_error("build_lattice: failed to place any point");

    lat.verified_packing = verify_packing(cone, lat);
    return lat;
}

double verify_packing(const ConeDescriptor& cone, const ConeLattice& lattice) {
    const auto& pts = lattice.points;
    if (pts.size() < 2) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, distance(cone, pts[i], pts[j]));
    return best;
}

CoverageReport verify_covering(const ConeDescriptor& cone,
                               const ConeLattice& lattice, int probes,
                               std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("probes must be >= 1");
    CoverageReport rep;
    rep.probes = probes;
    if (lattice.points.empty()) return rep;

    double margin = lattice.lambda * lattice.delta;
    check_region(cone, lattice.region, margin);

    Rng rng(seed);
    int hits = 0;
    for (int k = 0; k < probes; ++k) {
        Vec probe = sample_region_point(cone, lattice.region, margin, rng);
        double nearest = std::numeric_limits<double>::infinity();
        for (const Vec& p : lattice.points)
            nearest = std::min(nearest, distance(cone, p, probe));
        rep.max_gap = std::max(rep.max_gap, nearest);
        if (nearest <= margin) ++hits;
    }
    rep.fraction = static_cast<double>(hits) / probes;
    return rep;
}

void write_lattice_csv(std::ostream& os, const ConeDescriptor& cone,
                       const ConeLattice& lattice) {
    os << "j";
    for (int d = 0; d < cone.n; ++d) os << ",x" << d;
    os << ",det\n";
    char buf[64];
    for (std::size_t j = 0; j < lattice.points.size(); ++j) {
        os << j;
        for (int d = 0; d < cone.n; ++d) {
            std::snprintf(buf, sizeof buf, ",%.17g", lattice.points[j](d));
            os << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g",
                      det(cone, lattice.points[j]));
        os << buf << "\n";
    }
}

} // namespace coneatoms
