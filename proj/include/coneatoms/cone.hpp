#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>
#include <vector>

namespace coneatoms {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;

enum class ConeKind { halfline, lorentz, spd };

// A concrete symmetric cone: positive half-line, Lorentz cone in R^m, or
// positive-definite r x r matrices. SPD points are packed into R^n
// (n = r(r+1)/2) with off-diagonal entries scaled by sqrt(2) so that the
// Euclidean dot product of coordinates equals tr(XY); the cone is then
// self-dual in the coordinate inner product.
struct ConeDescriptor {
    ConeKind kind;
    int m = 0;      // lorentz: ambient dimension; spd: matrix size r
    int n = 1;      // dim V
    int R = 1;      // rank
    Vec e;          // identity point, Delta(e) = 1
    double phi_e;   // characteristic function at e

    std::string name() const;
};

ConeDescriptor make_halfline();
ConeDescriptor make_lorentz(int m);
ConeDescriptor make_spd(int r);

// Parses "halfline", "lorentz:3", "spd:2". Throws std::invalid_argument.
ConeDescriptor parse_cone(const std::string& s);

// Element of the solvable group acting simply transitively on the cone.
// halfline: positive scaling. spd: X -> L X L^T with L lower triangular,
// positive diagonal. lorentz: dilation-then-boost, x -> t * B(alpha,u) x.
struct GroupElement {
    ConeKind kind;
    double scale = 1.0;   // halfline t, lorentz dilation t
    double rapidity = 0.0; // lorentz boost parameter
    Vec boost_dir;        // lorentz: unit vector in R^{m-1}
    Mat lower;            // spd: L
    double abs_det = 1.0; // |Det_V| of the linear action on V
};

// SPD packing helpers.
Mat spd_unpack(const ConeDescriptor& cone, const Vec& x);
Vec spd_pack(const ConeDescriptor& cone, const Mat& X);

bool contains(const ConeDescriptor& cone, const Vec& x);
double det(const ConeDescriptor& cone, const Vec& x);

// Holomorphic extension of the determinant polynomial.
std::complex<double> det_complex(const ConeDescriptor& cone, const CVec& z);

// phi(x) = phi(e) * Delta(x)^{-n/R}; throws std::domain_error off the cone.
double characteristic(const ConeDescriptor& cone, const Vec& x);

GroupElement factorize(const ConeDescriptor& cone, const Vec& y);
Vec act(const ConeDescriptor& cone, const GroupElement& h, const Vec& x);
Vec act_inverse(const ConeDescriptor& cone, const GroupElement& h, const Vec& x);
// Adjoint of the linear action with respect to the coordinate dot product.
Vec act_transpose(const ConeDescriptor& cone, const GroupElement& h, const Vec& x);

GroupElement identity_element(const ConeDescriptor& cone);

// Jordan eigenvalues of a point (R values; positive iff the point is in
// the open cone).
std::vector<double> jordan_eigenvalues(const ConeDescriptor& cone, const Vec& x);

// Builds the point with given Jordan eigenvalues in a frame determined by
// the orientation parameters (halfline: none; lorentz: unit direction in
// R^{m-1}; spd: orthogonal Q packed column-major). Used by samplers.
Vec point_from_spectrum(const ConeDescriptor& cone, const std::vector<double>& eigs,
                        const Vec& orientation);

// Geodesic distance of the invariant metric, sqrt(sum log^2 lambda_k) over
// the eigenvalues of the quotient of y by x.
double distance(const ConeDescriptor& cone, const Vec& x, const Vec& y);

// Distance from the identity point (cheaper path, used in hot loops).
double distance_from_e(const ConeDescriptor& cone, const Vec& y);

} // namespace coneatoms
