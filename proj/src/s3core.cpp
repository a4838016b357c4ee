#include "s3flat/s3core.hpp"

#include <cmath>

namespace s3flat {

bool is_unit(const Vec4& q, double tol) {
    return std::abs(q.squaredNorm() - 1.0) <= 2.0 * tol;
}

S3Point renormalize(const Vec4& q) {
    const double n = q.norm();
    if (n < 1e-14) {
        throw DomainError("renormalize: vector too close to zero");
    }
    return q / n;
}

Vec4 quat_mul_raw(const Vec4& a, const Vec4& b) {
    return Vec4(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
                a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
                a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
                a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
}

S3Point quat_mul(const S3Point& p, const S3Point& q) {
    if (!is_unit(p) || !is_unit(q)) {
        throw PreconditionViolation("quat_mul: inputs must be unit quaternions");
    }
    return renormalize(quat_mul_raw(p, q));
}

S3Point quat_conj(const S3Point& q) { return Vec4(q[0], -q[1], -q[2], -q[3]); }

namespace {

double det3(double a00, double a01, double a02, double a10, double a11,
            double a12, double a20, double a21, double a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}

} // namespace

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
    Vec4 d;
    d[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
    d[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
    d[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
    d[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
    return d;
}

Mat4 HelicoidalMotion::matrix(double t) const {
    const double ca = std::cos(alpha * t), sa = std::sin(alpha * t);
    const double cb = std::cos(beta * t), sb = std::sin(beta * t);
    Mat4 m = Mat4::Zero();
    m(0, 0) = ca;
    m(0, 1) = -sa;
    m(1, 0) = sa;
    m(1, 1) = ca;
    m(2, 2) = cb;
    m(2, 3) = -sb;
    m(3, 2) = sb;
    m(3, 3) = cb;
    return m;
}

Mat4 HelicoidalMotion::velocity(double t) const {
    const double ca = std::cos(alpha * t), sa = std::sin(alpha * t);
    const double cb = std::cos(beta * t), sb = std::sin(beta * t);
    Mat4 m = Mat4::Zero();
    m(0, 0) = -alpha * sa;
    m(0, 1) = -alpha * ca;
    m(1, 0) = alpha * ca;
    m(1, 1) = -alpha * sa;
    m(2, 2) = -beta * sb;
    m(2, 3) = -beta * cb;
    m(3, 2) = beta * cb;
    m(3, 3) = -beta * sb;
    return m;
}

Mat4 HelicoidalMotion::acceleration(double t) const {
    const double a2 = alpha * alpha, b2 = beta * beta;
    const double ca = std::cos(alpha * t), sa = std::sin(alpha * t);
    const double cb = std::cos(beta * t), sb = std::sin(beta * t);
    Mat4 m = Mat4::Zero();
    m(0, 0) = -a2 * ca;
    m(0, 1) = a2 * sa;
    m(1, 0) = -a2 * sa;
    m(1, 1) = -a2 * ca;
    m(2, 2) = -b2 * cb;
    m(2, 3) = b2 * sb;
    m(3, 2) = -b2 * sb;
    m(3, 3) = -b2 * cb;
    return m;
}

Vec4 hopf_e1(const S3Point& q) { return Vec4(-q[1], q[0], -q[3], q[2]); }

Vec4 hopf_e2(const S3Point& q) { return Vec4(-q[3], -q[2], q[1], q[0]); }

Vec4 hopf_e3(const S3Point& q) { return Vec4(-q[2], q[3], q[0], -q[1]); }

HopfFrame hopf_frame(const S3Point& q) {
    return HopfFrame{hopf_e1(q), hopf_e2(q), hopf_e3(q)};
}

Vec3 hopf_map(const S3Point& q) {
    // conj(q) * i * q; the real part cancels, the image lies in span{i,j,k}.
    const Vec4 h = quat_mul_raw(quat_mul_raw(quat_conj(q), Vec4(0, 1, 0, 0)), q);
    return Vec3(h[1], h[2], h[3]);
}

double berger_inner(double eps, const S3Point& q, const AmbientVector& X,
                    const AmbientVector& Y) {
    if (std::abs(X.dot(q)) > kUnitPreTol || std::abs(Y.dot(q)) > kUnitPreTol) {
        throw PreconditionViolation("berger_inner: arguments must be tangent at q");
    }
    const Vec4 e1 = hopf_e1(q);
    return X.dot(Y) + (eps * eps - 1.0) * X.dot(e1) * Y.dot(e1);
}

StereographicProjection::StereographicProjection(const S3Point& pole)
    : pole_(renormalize(pole)) {
    int drop = 0;
    for (int i = 1; i < 4; ++i) {
        if (std::abs(pole_[i]) > std::abs(pole_[drop])) drop = i;
    }
    int col = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == drop) continue;
        Vec4 v = Vec4::Zero();
        v[i] = 1.0;
        v -= v.dot(pole_) * pole_;
        for (int j = 0; j < col; ++j) {
            v -= v.dot(basis_.col(j)) * basis_.col(j);
        }
        basis_.col(col++) = v.normalized();
    }
}

Vec3 StereographicProjection::project(const S3Point& q) const {
    const double denom = 1.0 - pole_.dot(q);
    if (denom < 1e-8) {
        throw PoleProximity("stereographic: point too close to the pole");
    }
    return basis_.transpose() * q / denom;
}

S3Point StereographicProjection::unproject(const Vec3& y) const {
    const double r2 = y.squaredNorm();
    const Vec4 lifted = (r2 - 1.0) * pole_ + 2.0 * (basis_ * y);
    return lifted / (1.0 + r2);
}

} // namespace s3flat
