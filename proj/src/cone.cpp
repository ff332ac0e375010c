#include "coneatoms/cone.hpp"

#include "coneatoms/rng.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace coneatoms {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr std::uint64_t kPhiSeed = 20240601;
constexpr int kPhiSamples = 1000000;

// log of the multivariate gamma function Gamma_r(a).
double lgamma_multi(int r, double a) {
    double s = 0.25 * r * (r - 1) * std::log(M_PI);
    for (int j = 1; j <= r; ++j) s += std::lgamma(a - 0.5 * (j - 1));
    return s;
}

// Monte Carlo value of phi(e) = int_Omega exp(-<e,y>) dy for the Lorentz
// cone in R^m. Proposal: y1 ~ Exp(1/2), y' uniform in the ball of radius
// y1 in R^{m-1}.
double phi_e_lorentz(int m) {
    Rng rng(kPhiSeed);
    const int d = m - 1;
    const double cball =
        std::exp(0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d + 1.0));
    double acc = 0.0;
    for (int i = 0; i < kPhiSamples; ++i) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        double y1 = -2.0 * std::log(u);
        acc += 2.0 * cball * std::pow(y1, d) * std::exp(-0.5 * y1);
    }
    return acc / kPhiSamples;
}

// Monte Carlo value of phi(e) = int_SPD exp(-tr Y) dY in the sqrt(2)
// packed coordinates. Proposal: Wishart(I, r+2) via Bartlett.
double phi_e_spd(int r) {
    Rng rng(kPhiSeed + 1);
    const int df = r + 2;
    const double logZ =
        0.5 * df * r * std::log(2.0) + lgamma_multi(r, 0.5 * df);
    const double coord = std::exp(0.25 * r * (r - 1) * std::log(2.0));
    double acc = 0.0;
    Mat B(r, r);
    for (int i = 0; i < kPhiSamples; ++i) {
        B.setZero();
        for (int a = 0; a < r; ++a) {
            double chi2 = 0.0;
            for (int k = 0; k < df - a; ++k) {
                double g = rng.normal();
                chi2 += g * g;
            }
            B(a, a) = std::sqrt(chi2);
            for (int b = 0; b < a; ++b) B(a, b) = rng.normal();
        }
        double logdetY = 0.0;
        for (int a = 0; a < r; ++a) logdetY += 2.0 * std::log(B(a, a));
        double trY = B.squaredNorm();
        acc += std::exp(logZ - 0.5 * logdetY - 0.5 * trY);
    }
    return coord * acc / kPhiSamples;
}

double phi_e_cached(ConeKind kind, int m) {
    static std::map<std::pair<int, int>, double> cache;
    static std::mutex mu;
    if (kind == ConeKind::halfline) return 1.0;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double v = (kind == ConeKind::lorentz) ? phi_e_lorentz(m) : phi_e_spd(m);
    cache[key] = v;
    return v;
}

void check_dim(const ConeDescriptor& cone, const Eigen::Index len) {
    if (len != cone.n)
        throw std::invalid_argument("cone point has wrong dimension");
}

} // namespace

std::string ConeDescriptor::name() const {
    switch (kind) {
        case ConeKind::halfline: return "halfline";
        case ConeKind::lorentz: return "lorentz:" + std::to_string(m);
        case ConeKind::spd: return "spd:" + std::to_string(m);
    }
    return "?";
}

ConeDescriptor make_halfline() {
    ConeDescriptor c;
    c.kind = ConeKind::halfline;
    c.m = 1;
    c.n = 1;
    c.R = 1;
    c.e = Vec::Ones(1);
    c.phi_e = 1.0;
    return c;
}

ConeDescriptor make_lorentz(int m) {
    if (m < 2) throw std::invalid_argument("lorentz cone needs m >= 2");
    ConeDescriptor c;
    c.kind = ConeKind::lorentz;
    c.m = m;
    c.n = m;
    c.R = 2;
    c.e = Vec::Zero(m);
    c.e(0) = 1.0;
    c.phi_e = phi_e_cached(c.kind, m);
    return c;
}

ConeDescriptor make_spd(int r) {
    if (r < 1) throw std::invalid_argument("spd cone needs r >= 1");
    ConeDescriptor c;
    c.kind = ConeKind::spd;
    c.m = r;
    c.n = r * (r + 1) / 2;
    c.R = r;
    Mat I = Mat::Identity(r, r);
    c.e = Vec::Zero(c.n);
    c.phi_e = 1.0; // set after packing below
    c.e = spd_pack(c, I);
    c.phi_e = (r == 1) ? 1.0 : phi_e_cached(c.kind, r);
    return c;
}

ConeDescriptor parse_cone(const std::string& s) {
    if (s == "halfline") return make_halfline();
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        std::string head = s.substr(0, colon);
        int arg = 0;
        try {
            arg = std::stoi(s.substr(colon + 1));
        } catch (...) {
            throw std::invalid_argument("bad cone spec: " + s);
        }
        if (head == "lorentz") return make_lorentz(arg);
        if (head == "spd") return make_spd(arg);
    }
    throw std::invalid_argument("bad cone spec: " + s);
}

Mat spd_unpack(const ConeDescriptor& cone, const Vec& x) {
    int r = cone.m;
    Mat X(r, r);
    int idx = 0;
    for (int i = 0; i < r; ++i) X(i, i) = x(idx++);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            X(i, j) = X(j, i) = x(idx++) / kSqrt2;
        }
    return X;
}

Vec spd_pack(const ConeDescriptor& cone, const Mat& X) {
    int r = cone.m;
    Vec x(cone.n);
    int idx = 0;
    for (int i = 0; i < r; ++i) x(idx++) = X(i, i);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) x(idx++) = kSqrt2 * X(i, j);
    return x;
}

bool contains(const ConeDescriptor& cone, const Vec& x) {
    check_dim(cone, x.size());
    switch (cone.kind) {
        case ConeKind::halfline:
            return x(0) > 0.0;
        case ConeKind::lorentz:
            return x(0) > x.tail(cone.m - 1).norm();
        case ConeKind::spd: {
            Mat X = spd_unpack(cone, x);
            for (int k = 1; k <= cone.m; ++k) {
                if (X.topLeftCorner(k, k).determinant() <= 0.0) return false;
            }
            return true;
        }
    }
    return false;
}

double det(const ConeDescriptor& cone, const Vec& x) {
    check_dim(cone, x.size());
    switch (cone.kind) {
        case ConeKind::halfline:
            return x(0);
        case ConeKind::lorentz:
            return x(0) * x(0) - x.tail(cone.m - 1).squaredNorm();
        case ConeKind::spd:
            return spd_unpack(cone, x).determinant();
    }
    return 0.0;
}

std::complex<double> det_complex(const ConeDescriptor& cone, const CVec& z) {
    if (z.size() != cone.n)
        throw std::invalid_argument("cone point has wrong dimension");
    switch (cone.kind) {
        case ConeKind::halfline:
            return z(0);
        case ConeKind::lorentz: {
            std::complex<double> s = z(0) * z(0);
            for (int k = 1; k < cone.m; ++k) s -= z(k) * z(k);
            return s;
        }
        case ConeKind::spd: {
            int r = cone.m;
            Eigen::MatrixXcd Z(r, r);
            int idx = 0;
            for (int i = 0; i < r; ++i) Z(i, i) = z(idx++);
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    Z(i, j) = Z(j, i) = z(idx++) / kSqrt2;
                }
            return Z.determinant();
        }
    }
    return 0.0;
}

double characteristic(const ConeDescriptor& cone, const Vec& x) {
    if (!contains(cone, x))
        throw std::domain_error("characteristic: point outside the cone");
    return cone.phi_e *
           std::pow(det(cone, x), -static_cast<double>(cone.n) / cone.R);
}

GroupElement factorize(const ConeDescriptor& cone, const Vec& y) {
    if (!contains(cone, y))
        throw std::domain_error("factorize: point outside the cone");
    GroupElement h;
    h.kind = cone.kind;
    switch (cone.kind) {
        case ConeKind::halfline:
            h.scale = y(0);
            h.abs_det = y(0);
            break;
        case ConeKind::lorentz: {
            int d = cone.m - 1;
            double t = std::sqrt(det(cone, y));
            double c = std::max(1.0, y(0) / t);
            h.scale = t;
            h.rapidity = std::acosh(c);
            double nrm = y.tail(d).norm();
            h.boost_dir = (nrm > 0.0) ? Vec(y.tail(d) / nrm) : [&] {
                Vec u = Vec::Zero(d);
                u(0) = 1.0;
                return u;
            }();
            h.abs_det = std::pow(t, cone.m);
            break;
        }
        case ConeKind::spd: {
            Mat Y = spd_unpack(cone, y);
            Eigen::LLT<Mat> llt(Y);
            if (llt.info() != Eigen::Success)
                throw std::domain_error("factorize: Cholesky failed");
            h.lower = llt.matrixL();
            h.abs_det =
                std::pow(h.lower.diagonal().prod(), cone.m + 1);
            break;
        }
    }
    return h;
}

namespace {

Vec lorentz_boost(int m, double rapidity, const Vec& u, const Vec& x) {
    double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    Vec out(m);
    double xp = u.dot(x.tail(m - 1));
    out(0) = x(0) * ch + xp * sh;
    out.tail(m - 1) = x.tail(m - 1) + ((x(0) * sh + xp * (ch - 1.0))) * u;
    return out;
}

} // namespace

Vec act(const ConeDescriptor& cone, const GroupElement& h, const Vec& x) {
    check_dim(cone, x.size());
    switch (cone.kind) {
        case ConeKind::halfline:
            return h.scale * x;
        case ConeKind::lorentz:
            return h.scale * lorentz_boost(cone.m, h.rapidity, h.boost_dir, x);
        case ConeKind::spd: {
            Mat X = spd_unpack(cone, x);
            return spd_pack(cone, h.lower * X * h.lower.transpose());
        }
    }
    return x;
}

Vec act_inverse(const ConeDescriptor& cone, const GroupElement& h, const Vec& x) {
    check_dim(cone, x.size());
    switch (cone.kind) {
        case ConeKind::halfline:
            return x / h.scale;
        case ConeKind::lorentz:
            return lorentz_boost(cone.m, -h.rapidity, h.boost_dir,
                                 Vec(x / h.scale));
        case ConeKind::spd: {
            Mat X = spd_unpack(cone, x);
            Mat A = h.lower.triangularView<Eigen::Lower>().solve(X);
            Mat B = h.lower.triangularView<Eigen::Lower>()
                        .solve(Mat(A.transpose()));
            return spd_pack(cone, B);
        }
    }
    return x;
}

Vec act_transpose(const ConeDescriptor& cone, const GroupElement& h, const Vec& x) {
    check_dim(cone, x.size());
    switch (cone.kind) {
        case ConeKind::halfline:
        case ConeKind::lorentz:
            return act(cone, h, x); // the linear action is symmetric
        case ConeKind::spd: {
            Mat X = spd_unpack(cone, x);
            return spd_pack(cone, h.lower.transpose() * X * h.lower);
        }
    }
    return x;
}

GroupElement identity_element(const ConeDescriptor& cone) {
    GroupElement h;
    h.kind = cone.kind;
    h.scale = 1.0;
    h.rapidity = 0.0;
    if (cone.kind == ConeKind::lorentz) {
        h.boost_dir = Vec::Zero(cone.m - 1);
        h.boost_dir(0) = 1.0;
    }
    if (cone.kind == ConeKind::spd) h.lower = Mat::Identity(cone.m, cone.m);
    h.abs_det = 1.0;
    return h;
}

std::vector<double> jordan_eigenvalues(const ConeDescriptor& cone, const Vec& x) {
    check_dim(cone, x.size());
    switch (cone.kind) {
        case ConeKind::halfline:
            return {x(0)};
        case ConeKind::lorentz: {
            double nrm = x.tail(cone.m - 1).norm();
            return {x(0) + nrm, x(0) - nrm};
        }
        case ConeKind::spd: {
            Eigen::SelfAdjointEigenSolver<Mat> es(spd_unpack(cone, x),
                                                  Eigen::EigenvaluesOnly);
            std::vector<double> out(cone.R);
            for (int k = 0; k < cone.R; ++k) out[k] = es.eigenvalues()(k);
            return out;
        }
    }
    return {};
}

Vec point_from_spectrum(const ConeDescriptor& cone,
                        const std::vector<double>& eigs, const Vec& orientation) {
    if (static_cast<int>(eigs.size()) != cone.R)
        throw std::invalid_argument("point_from_spectrum: need R eigenvalues");
    switch (cone.kind) {
        case ConeKind::halfline: {
            Vec y(1);
            y(0) = eigs[0];
            return y;
        }
        case ConeKind::lorentz: {
            Vec y(cone.m);
            y(0) = 0.5 * (eigs[0] + eigs[1]);
            y.tail(cone.m - 1) = 0.5 * (eigs[0] - eigs[1]) * orientation;
            return y;
        }
        case ConeKind::spd: {
            int r = cone.m;
            Mat Q = Eigen::Map<const Mat>(orientation.data(), r, r);
            Vec lam(r);
            for (int k = 0; k < r; ++k) lam(k) = eigs[k];
            return spd_pack(cone, Q * lam.asDiagonal() * Q.transpose());
        }
    }
    return Vec();
}

double distance_from_e(const ConeDescriptor& cone, const Vec& y) {
    double s = 0.0;
    for (double lam : jordan_eigenvalues(cone, y)) {
        if (lam <= 0.0) return std::numeric_limits<double>::infinity();
        double l = std::log(lam);
        s += l * l;
    }
    return std::sqrt(s);
}

double distance(const ConeDescriptor& cone, const Vec& x, const Vec& y) {
    if (!contains(cone, x) || !contains(cone, y))
        throw std::domain_error("distance: point outside the cone");
    switch (cone.kind) {
        case ConeKind::halfline: {
            return std::abs(std::log(y(0) / x(0)));
        }
        case ConeKind::spd: {
            if (cone.m == 2) {
                // closed form for the 2x2 pencil
                const double sq2 = 1.4142135623730951;
                double x11 = x(0), x22 = x(1), x12 = x(2) / sq2;
                double y11 = y(0), y22 = y(1), y12 = y(2) / sq2;
                double dX = x11 * x22 - x12 * x12;
                double dY = y11 * y22 - y12 * y12;
                double tr = (x22 * y11 - 2.0 * x12 * y12 + x11 * y22) / dX;
                double q = dY / dX;
                double disc = std::max(0.0, tr * tr - 4.0 * q);
                double l1 = 0.5 * (tr + std::sqrt(disc));
                double l2 = q / l1;
                double a = std::log(l1), b = std::log(l2);
                return std::sqrt(a * a + b * b);
            }
            Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(
                spd_unpack(cone, y), spd_unpack(cone, x), Eigen::EigenvaluesOnly);
            double s = 0.0;
            for (int k = 0; k < cone.m; ++k) {
                double l = std::log(es.eigenvalues()(k));
                s += l * l;
            }
            return std::sqrt(s);
        }
        case ConeKind::lorentz: {
            GroupElement h = factorize(cone, x);
            return distance_from_e(cone, act_inverse(cone, h, y));
        }
    }
    return 0.0;
}

} // namespace coneatoms
