#include "s3flat/curves.hpp"

#include <cmath>

namespace s3flat {

CurveS3 CurveS3::from_points(std::function<Vec4(double)> eval, std::string tag,
                             double fd_step) {
    auto jet = [eval = std::move(eval), fd_step](double t) {
        return CurveJet{eval(t), fd_d1(eval, t, fd_step), fd_d2(eval, t, fd_step),
                        fd_d3(eval, t, fd_step)};
    };
    return CurveS3(jet, std::move(tag));
}

CurveS3 base_curve(double r) {
    if (r <= 1.0) {
        throw DomainError("base_curve: requires r > 1");
    }
    const double c = 1.0 / std::sqrt(1.0 + r * r);
    auto jet = [r, c](double u) {
        const double cu = std::cos(u / r), su = std::sin(u / r);
        const double cru = std::cos(r * u), sru = std::sin(r * u);
        const double r2 = r * r, r3 = r2 * r;
        CurveJet j;
        j.p = c * Vec4(r * cu, r * su, cru, sru);
        j.d1 = c * Vec4(-su, cu, -r * sru, r * cru);
        j.d2 = c * Vec4(-cu / r, -su / r, -r2 * cru, -r2 * sru);
        j.d3 = c * Vec4(su / r2, -cu / r2, r3 * sru, -r3 * cru);
        return j;
    };
    return CurveS3(jet, "base_curve(" + std::to_string(r) + ")");
}

FrenetData frenet(const CurveS3& c, double t) {
    const CurveJet j = c.jet(t);
    const Vec4& p = j.p;
    const Vec4& d1 = j.d1;
    const Vec4& d2 = j.d2;
    const Vec4& d3 = j.d3;

    // Covariant normal: project the acceleration orthogonally to the position
    // and the tangent.
    const Vec4 P = d2 - d2.dot(p) * p - d2.dot(d1) * d1;
    const double kappa = P.norm();
    if (kappa < 1e-8) {
        throw DegenerateFrame("frenet: curvature vanishes (geodesic)");
    }
    const Vec4 N = P / kappa;
    const Vec4 B = cross4(p, d1, N).normalized();

    // P' by the product rule, with T = d1 and T' = d2.
    const Vec4 Pd = d3 - (d3.dot(p) + d2.dot(d1)) * p - d2.dot(p) * d1 -
                    (d3.dot(d1) + d2.dot(d2)) * d1 - d2.dot(d1) * d2;
    const double tau = Pd.dot(B) / kappa;
    return FrenetData{kappa, tau};
}

namespace {

CurveJet left_translate(const Vec4& g, const CurveJet& j) {
    return CurveJet{quat_mul_raw(g, j.p), quat_mul_raw(g, j.d1),
                    quat_mul_raw(g, j.d2), quat_mul_raw(g, j.d3)};
}

CurveJet right_translate(const CurveJet& j, const Vec4& g) {
    return CurveJet{quat_mul_raw(j.p, g), quat_mul_raw(j.d1, g),
                    quat_mul_raw(j.d2, g), quat_mul_raw(j.d3, g)};
}

Vec4 swap_yz(const Vec4& v) { return Vec4(v[0], v[1], v[3], v[2]); }

CurveJet swap_yz(const CurveJet& j) {
    return CurveJet{swap_yz(j.p), swap_yz(j.d1), swap_yz(j.d2), swap_yz(j.d3)};
}

} // namespace

CurveS3 curve_ca(double a) {
    if (a <= 1.0) {
        throw DomainError("curve_ca: requires a > 1");
    }
    const Vec4 ga = Vec4(a, 0, -1, 0) / std::sqrt(1.0 + a * a);
    CurveS3 gamma = base_curve(a);
    auto jet = [ga, gamma](double u) { return left_translate(ga, gamma.jet(u)); };
    return CurveS3(jet, "curve_ca(" + std::to_string(a) + ")");
}

CurveS3 curve_cb(double b) {
    if (b <= 1.0) {
        throw DomainError("curve_cb: requires b > 1");
    }
    const Vec4 gb = Vec4(b, 0, 0, -1) / std::sqrt(1.0 + b * b);
    CurveS3 gamma = base_curve(b);
    auto jet = [gb, gamma](double v) {
        return right_translate(swap_yz(gamma.jet(v)), gb);
    };
    return CurveS3(jet, "curve_cb(" + std::to_string(b) + ")");
}

ProfileCurve ProfileCurve::from_functions(std::function<double(double)> phi,
                                          std::function<double(double)> theta,
                                          double fd_step) {
    ProfileCurve pc;
    pc.phi = [phi = std::move(phi), fd_step](double s) { return fd_jet3(phi, s, fd_step); };
    pc.theta = [theta = std::move(theta), fd_step](double s) {
        return fd_jet3(theta, s, fd_step);
    };
    return pc;
}

CurveJet profile_point_jet(const ProfileCurve& profile, double s) {
    const Jet3 ph = profile.phi(s);
    const Jet3 th = profile.theta(s);
    const Jet3 x1 = cos(ph) * cos(th);
    const Jet3 x2 = cos(ph) * sin(th);
    const Jet3 x3 = sin(ph);
    CurveJet j;
    j.p = Vec4(x1.f, x2.f, x3.f, 0.0);
    j.d1 = Vec4(x1.d1, x2.d1, x3.d1, 0.0);
    j.d2 = Vec4(x1.d2, x2.d2, x3.d2, 0.0);
    j.d3 = Vec4(x1.d3, x2.d3, x3.d3, 0.0);
    return j;
}

CurveS3 profile_curve(const ProfileCurve& profile, double s_min, double s_max) {
    const int kSamples = 33;
    for (int i = 0; i < kSamples; ++i) {
        const double s = s_min + (s_max - s_min) * i / (kSamples - 1);
        const Jet3 ph = profile.phi(s);
        const Jet3 th = profile.theta(s);
        const double cphi = std::cos(ph.f);
        const double arc = ph.d1 * ph.d1 + th.d1 * th.d1 * cphi * cphi;
        if (std::abs(arc - 1.0) > 1e-6) {
            throw ArcLengthViolation("profile_curve: (phi')^2 + (theta')^2 cos^2 phi != 1");
        }
        if (std::sin(ph.f) <= 0.0) {
            throw HemisphereViolation("profile_curve: requires sin phi > 0");
        }
    }
    auto jet = [profile](double s) { return profile_point_jet(profile, s); };
    return CurveS3(jet, "profile_curve");
}

} // namespace s3flat
