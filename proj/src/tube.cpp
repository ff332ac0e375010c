#include "coneatoms/tube.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace coneatoms {

namespace {

// log-radial nodes with trapezoid weights in s = log t; returns pairs
// (t, t ds) including the Lebesgue dt factor.
std::vector<std::pair<double, double>> radial_nodes(const TubeGridOptions& o) {
    if (o.n_t < 2 || !(o.t_min > 0.0) || !(o.t_max > o.t_min))
        throw std::invalid_argument("bad radial quadrature parameters");
    std::vector<std::pair<double, double>> out(o.n_t);
    double s0 = std::log(o.t_min), s1 = std::log(o.t_max);
    double ds = (s1 - s0) / (o.n_t - 1);
    for (int k = 0; k < o.n_t; ++k) {
        double t = std::exp(s0 + k * ds);
        double w = t * ds * ((k == 0 || k == o.n_t - 1) ? 0.5 : 1.0);
        out[k] = {t, w};
    }
    return out;
}

void push_lorentz3_nodes(const TubeGridOptions& o, double exponent,
                         std::vector<Vec>& heights,
                         std::vector<double>& weights,
                         bool to_spd /* map to the spd(2) cone */) {
    // hyperbolic polar coordinates: y = t (cosh a, sinh a cos b, sinh a sin b),
    // dy = t^2 sinh a dt da db
    auto rad = radial_nodes(o);
    double da = o.alpha_max / o.n_alpha;
    double db = 2.0 * M_PI / o.n_omega;
    for (const auto& [t, wt] : rad) {
        for (int ia = 0; ia < o.n_alpha; ++ia) {
            double a = (ia + 0.5) * da;
            for (int ib = 0; ib < o.n_omega; ++ib) {
                double b = ib * db;
                Vec y(3);
                y(0) = t * std::cosh(a);
                y(1) = t * std::sinh(a) * std::cos(b);
                y(2) = t * std::sinh(a) * std::sin(b);
                double leb = t * t * std::sinh(a) * wt * da * db;
                double w = std::pow(t * t, exponent) * leb;
                if (to_spd) {
                    // linear isomorphism onto packed 2x2 symmetric matrices
                    Vec u(3);
                    u(0) = y(0) + y(1);
                    u(1) = y(0) - y(1);
                    u(2) = std::sqrt(2.0) * y(2);
                    heights.push_back(u);
                    weights.push_back(2.0 * std::sqrt(2.0) * w);
                } else {
                    heights.push_back(y);
                    weights.push_back(w);
                }
            }
        }
    }
}

} // namespace

TubeGrid make_tube_grid(const ConeDescriptor& cone, const FrequencyGrid& xgrid,
                        double nu, const TubeGridOptions& opts) {
    if (cone.n != xgrid.dims)
        throw std::invalid_argument("cone/grid dimension mismatch");
    TubeGrid tg;
    tg.xgrid = xgrid;
    tg.nu = nu;
    const double exponent = nu - static_cast<double>(cone.n) / cone.R;

    switch (cone.kind) {
        case ConeKind::halfline: {
            for (const auto& [t, wt] : radial_nodes(opts)) {
                Vec y(1);
                y(0) = t;
                tg.heights.push_back(y);
                tg.weights.push_back(std::pow(t, exponent) * wt);
            }
            break;
        }
        case ConeKind::lorentz: {
            if (cone.m != 3)
                throw std::invalid_argument(
                    "tube grid supports lorentz:3 (grid is at most 3-d)");
            push_lorentz3_nodes(opts, exponent, tg.heights, tg.weights, false);
            break;
        }
        case ConeKind::spd: {
            if (cone.m != 2)
                throw std::invalid_argument(
                    "tube grid supports spd:2 (grid is at most 3-d)");
            // Delta and the invariant distance agree through the lorentz(3)
            // isomorphism, so reuse its polar rule.
            push_lorentz3_nodes(opts, exponent, tg.heights, tg.weights, true);
            break;
        }
    }

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < tg.heights.size(); ++k) {
        double tr = cone.e.dot(tg.heights[k]);
        if (tr < best) {
            best = tr;
            tg.min_height = k;
        }
    }
    return tg;
}

GridFunction extend(const ConeDescriptor& cone, const GridFunction& f, const Vec& y) {
    if (!contains(cone, y)) throw std::domain_error("extend: height outside cone");
    if (cone.n != f.grid.dims)
        throw std::invalid_argument("cone/grid dimension mismatch");
    double inside = 0.0, outside = 0.0;
    std::vector<cd> spec(f.grid.size(), cd(0.0, 0.0));
    for (std::size_t i = 0; i < spec.size(); ++i) {
        cd v = f.spectrum[i];
        if (v == cd(0.0, 0.0)) continue;
        Vec w = f.grid.freq_point(i);
        if (contains(cone, w)) {
            inside += std::norm(v);
            spec[i] = v * std::exp(-y.dot(w));
        } else {
            outside += std::norm(v);
        }
    }
    if (inside + outside > 0.0 && outside > 1e-10 * (inside + outside))
        throw std::domain_error("extend: spectrum leaks outside the closed cone");
    return from_spectrum(f.grid, std::move(spec));
}

TubeFunction extend_full(const ConeDescriptor& cone, const GridFunction& f,
                         const Partition& partition, const TubeGrid& tgrid) {
    if (!f.grid.compatible(tgrid.xgrid) || !f.grid.compatible(partition.grid))
        throw std::invalid_argument("grid mismatch");
    GridFunction proj = sharp_projection(f, partition);

    TubeFunction F;
    F.tgrid = tgrid;
    for (std::size_t i = 0; i < proj.spectrum.size(); ++i)
        if (proj.spectrum[i] != cd(0.0, 0.0))
            F.support.push_back(static_cast<std::uint32_t>(i));

    const std::size_t K = tgrid.heights.size();
    const std::size_t S = F.support.size();
    std::vector<Vec> ws(S);
    for (std::size_t s = 0; s < S; ++s) ws[s] = proj.grid.freq_point(F.support[s]);
    F.spec.resize(K);
    for (std::size_t k = 0; k < K; ++k) {
        F.spec[k].resize(S);
        const Vec& y = tgrid.heights[k];
        for (std::size_t s = 0; s < S; ++s)
            F.spec[k][s] =
                proj.spectrum[F.support[s]] * std::exp(-y.dot(ws[s]));
    }
    F.boundary = std::move(proj);
    F.has_boundary = true;
    return F;
}

TubeFunction zero_tube_function(const TubeGrid& tgrid) {
    TubeFunction F;
    F.tgrid = tgrid;
    F.spec.resize(tgrid.heights.size());
    F.boundary = zero_function(tgrid.xgrid);
    F.has_boundary = true;
    return F;
}

GridFunction height_slice(const TubeFunction& F, std::size_t k) {
    std::vector<cd> spec(F.tgrid.xgrid.size(), cd(0.0, 0.0));
    for (std::size_t s = 0; s < F.support.size(); ++s)
        spec[F.support[s]] = F.spec[k][s];
    return from_spectrum(F.tgrid.xgrid, std::move(spec));
}

GridFunction restrict_height(const ConeDescriptor& cone, const TubeFunction& F,
                             std::size_t k, double amplification_cap) {
    if (k >= F.tgrid.heights.size())
        throw std::invalid_argument("restrict: no such height");
    const Vec& y = F.tgrid.heights[k];
    std::vector<cd> spec(F.tgrid.xgrid.size(), cd(0.0, 0.0));
    double kept = 0.0, dropped = 0.0;
    for (std::size_t s = 0; s < F.support.size(); ++s) {
        cd v = F.spec[k][s];
        if (v == cd(0.0, 0.0)) continue;
        Vec w = F.tgrid.xgrid.freq_point(F.support[s]);
        double amp = std::exp(y.dot(w));
        if (amp <= amplification_cap) {
            spec[F.support[s]] = v * amp;
            kept += std::norm(v * amp);
        } else {
            dropped += std::norm(v * amp);
        }
    }
    if (kept + dropped > 0.0 && dropped > 1e-6 * (kept + dropped))
        throw std::domain_error(
            "restrict: amplification cap exceeded on too much spectral mass");
    return from_spectrum(F.tgrid.xgrid, std::move(spec));
}

double bergman_norm(const ConeDescriptor& cone, const TubeFunction& F,
                    const ParamSet& params) {
    (void)cone;
    if (std::abs(params.nu - F.tgrid.nu) > 1e-12)
        throw std::invalid_argument("bergman_norm: tube grid built for another nu");
    double outer = 0.0;
    for (std::size_t k = 0; k < F.tgrid.heights.size(); ++k) {
        GridFunction slice = height_slice(F, k);
        double inner = std::pow(lp_norm(slice, params.p), params.p);
        if (!std::isfinite(inner))
            throw std::domain_error("bergman_norm: non-finite samples");
        outer += F.tgrid.weights[k] * std::pow(inner, params.q / params.p);
    }
    return std::pow(outer, 1.0 / params.q);
}

cd principal_power(cd base, double exponent) {
    double mag = std::abs(base);
    if (mag == 0.0) throw std::domain_error("principal_power: zero base");
    if (base.real() < 0.0 && std::abs(base.imag()) <= 1e-12 * mag)
        throw std::domain_error("principal_power: branch ambiguity");
    return std::pow(base, exponent);
}

cd bergman_kernel(const ConeDescriptor& cone, const CVec& z, const CVec& w,
                  double c) {
    Vec imz = z.imag(), imw = w.imag();
    if (!contains(cone, imz) || !contains(cone, imw))
        throw std::domain_error("bergman_kernel: imaginary part outside cone");
    CVec arg = (z - w.conjugate()) / cd(0.0, 1.0);
    cd d = det_complex(cone, arg);
    return c * principal_power(d, -2.0 * cone.n / cone.R);
}

cd evaluate_at(const ConeDescriptor& cone, const TubeFunction& F, const CVec& z) {
    if (!F.has_boundary)
        throw std::invalid_argument("evaluate_at: no boundary spectrum stored");
    Vec imz = z.imag();
    if (!contains(cone, imz)) throw std::domain_error("evaluate_at: z outside tube");
    const FrequencyGrid& g = F.tgrid.xgrid;
    cd acc(0.0, 0.0);
    for (std::uint32_t flat : F.support) {
        Vec w = g.freq_point(flat);
        cd zw(0.0, 0.0);
        for (int d = 0; d < g.dims; ++d) zw += z(d) * w(d);
        acc += F.boundary.spectrum[flat] * std::exp(cd(0.0, 1.0) * zw);
    }
    double amp = std::pow(g.dw() / std::sqrt(2.0 * M_PI), g.dims);
    return acc * amp;
}

namespace {

cd kernel_integral(const ConeDescriptor& cone, const TubeFunction& F,
                   const CVec& z) {
    const FrequencyGrid& g = F.tgrid.xgrid;
    const double cell = std::pow(g.dx(), g.dims);
    const double expo = -2.0 * cone.n / cone.R;
    cd acc(0.0, 0.0);
    for (std::size_t k = 0; k < F.tgrid.heights.size(); ++k) {
        GridFunction slice = height_slice(F, k);
        const Vec& y = F.tgrid.heights[k];
        cd inner(0.0, 0.0);
        for (std::size_t i = 0; i < slice.spatial.size(); ++i) {
            cd v = slice.spatial[i];
            if (v == cd(0.0, 0.0)) continue;
            Vec x = g.space_point(i);
            CVec arg(g.dims);
            for (int d = 0; d < g.dims; ++d)
                arg(d) = (z(d) - cd(x(d), -y(d))) / cd(0.0, 1.0);
            inner += v * principal_power(det_complex(cone, arg), expo);
        }
        acc += F.tgrid.weights[k] * inner * cell;
    }
    return acc;
}

} // namespace

double calibrate_kernel_constant(const ConeDescriptor& cone,
                                 const TubeFunction& F, const CVec& z0) {
    if (std::abs(F.tgrid.nu - static_cast<double>(cone.n) / cone.R) > 1e-12)
        throw std::invalid_argument("calibration needs nu = n/R (Lebesgue weights)");
    cd target = evaluate_at(cone, F, z0);
    cd integral = kernel_integral(cone, F, z0);
    cd c = target / integral;
    return c.real();
}

cd kernel_reproduce(const ConeDescriptor& cone, const TubeFunction& F,
                    const CVec& z, double c) {
    return c * kernel_integral(cone, F, z);
}

cd cr_atom(const ConeDescriptor& cone, const CVec& z, const CVec& xi, double r,
           double theta, double p, double c, bool* condition_ok) {
    double eps = 0.5 * cone.R / cone.n;
    double gamma = 0.5 - eps;
    if (condition_ok)
        *condition_ok = theta > p * (1.0 - eps) + eps + gamma - 2.0 - r;
    cd bzx = bergman_kernel(cone, z, xi, c);
    cd bxx = bergman_kernel(cone, xi, xi, c);
    cd value = principal_power(bzx * bzx / bxx, (1.0 + r) / p);
    if (theta != 0.0) value *= principal_power(bzx / bxx, theta / p);
    return value;
}

void write_tube_csv(std::ostream& os, const TubeFunction& F, std::size_t k) {
    GridFunction slice = height_slice(F, k);
    const FrequencyGrid& g = F.tgrid.xgrid;
    for (int d = 0; d < g.dims; ++d) os << "x" << d << ",";
    os << "re,im\n";
    char buf[96];
    for (std::size_t i = 0; i < slice.spatial.size(); ++i) {
        Vec x = g.space_point(i);
        for (int d = 0; d < g.dims; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g,", x(d));
            os << buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", slice.spatial[i].real(),
                      slice.spatial[i].imag());
        os << buf << "\n";
    }
}

} // namespace coneatoms
