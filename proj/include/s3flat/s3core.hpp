#pragma once

#include <Eigen/Core>

#include "s3flat/errors.hpp"

namespace s3flat {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Point of the 3-sphere as a unit quaternion, component order (w, x, y, z).
/// The complex identification used throughout is (z, w) = (w + ix, y + iz).
using S3Point = Vec4;

/// General element of the ambient 4-space (tangent vectors, unnormalized
/// normals).
using AmbientVector = Vec4;

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kUnitPreTol = 1e-9;

bool is_unit(const Vec4& q, double tol = kUnitPreTol);

/// Scale q back onto the unit sphere. Throws DomainError on a (near-)zero
/// vector.
S3Point renormalize(const Vec4& q);

/// Hamilton product without renormalization; bilinear, safe for jets.
Vec4 quat_mul_raw(const Vec4& a, const Vec4& b);

/// Hamilton product of two unit quaternions, renormalized to suppress drift.
S3Point quat_mul(const S3Point& p, const S3Point& q);

S3Point quat_conj(const S3Point& q);

/// Generalized cross product: the unique vector d with <d, x> = det[x; a; b; c]
/// for every x.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

/// One-parameter helicoidal group: rotation by alpha*t in coordinates (w, x)
/// composed with rotation by beta*t in coordinates (y, z).
struct HelicoidalMotion {
    double alpha = 0.0;
    double beta = 0.0;

    Mat4 matrix(double t) const;
    /// d/dt of matrix(t).
    Mat4 velocity(double t) const;
    /// d^2/dt^2 of matrix(t).
    Mat4 acceleration(double t) const;

    Vec4 apply(double t, const Vec4& p) const { return matrix(t) * p; }
};

/// The orthonormal Hopf frame at q: e1 vertical (tangent to the fibers),
/// e2 and e3 horizontal. In the complex identification,
/// e1 = i(z,w), e2 = i(-conj(w), conj(z)), e3 = (-conj(w), conj(z)).
struct HopfFrame {
    Vec4 e1, e2, e3;
};

Vec4 hopf_e1(const S3Point& q);
Vec4 hopf_e2(const S3Point& q);
Vec4 hopf_e3(const S3Point& q);
HopfFrame hopf_frame(const S3Point& q);

/// Hopf map S^3 -> S^2, constant along the fibers of e1; returns the
/// (i, j, k) components of conj(q) * i * q.
Vec3 hopf_map(const S3Point& q);

/// Berger metric <X,Y> + (eps^2 - 1)<X,e1><Y,e1> at q. X and Y must be
/// tangent (orthogonal to q within 1e-9).
double berger_inner(double eps, const S3Point& q, const AmbientVector& X,
                    const AmbientVector& Y);

/// Stereographic projection from a pole P: the components of q orthogonal to
/// P, divided by 1 - <P,q>, expressed in a fixed orthonormal basis of the
/// orthogonal complement of P. The basis is built by Gram-Schmidt on the
/// standard basis with P's largest-|component| axis dropped, in increasing
/// index order.
class StereographicProjection {
public:
    explicit StereographicProjection(const S3Point& pole);

    const S3Point& pole() const { return pole_; }
    const Eigen::Matrix<double, 4, 3>& basis() const { return basis_; }

    /// Throws PoleProximity when 1 - <P,q> < 1e-8.
    Vec3 project(const S3Point& q) const;
    S3Point unproject(const Vec3& y) const;

private:
    S3Point pole_;
    Eigen::Matrix<double, 4, 3> basis_;
};

} // namespace s3flat
