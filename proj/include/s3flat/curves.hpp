#pragma once

#include <functional>
#include <string>

#include "s3flat/numeric.hpp"
#include "s3flat/s3core.hpp"

namespace s3flat {

/// Position and derivatives to order 3 of a curve in the ambient 4-space.
struct CurveJet {
    Vec4 p, d1, d2, d3;
};

/// Immutable curve on S^3 with an order-3 jet evaluator. Curves built by this
/// module carry closed-form jets; externally supplied point evaluators fall
/// back to central differences (step 1e-3, one Richardson level).
class CurveS3 {
public:
    using JetFn = std::function<CurveJet(double)>;

    CurveS3(JetFn jet, std::string tag) : jet_(std::move(jet)), tag_(std::move(tag)) {}

    static CurveS3 from_points(std::function<Vec4(double)> eval, std::string tag,
                               double fd_step = 1e-3);

    Vec4 point(double t) const { return jet_(t).p; }
    CurveJet jet(double t) const { return jet_(t); }
    const std::string& tag() const { return tag_; }

private:
    JetFn jet_;
    std::string tag_;
};

/// Curvature and torsion per unit arc length. The torsion sign follows the
/// binormal cross4(position, tangent, normal); for the construction curves
/// below only tau^2 = 1 and the relative sign are geometric content.
struct FrenetData {
    double kappa = 0.0;
    double tau = 0.0;
};

/// gamma_r(u) = (r cos(u/r), r sin(u/r), cos(ru), sin(ru)) / sqrt(1+r^2),
/// arc length, constant curvature (r^2-1)/r, torsion of unit magnitude.
CurveS3 base_curve(double r);

/// Frenet data in S^3: kappa from the covariant derivative of the tangent,
/// tau from the Frenet-Serret relation on the order-3 jet.
/// Throws DegenerateFrame when kappa < 1e-8.
FrenetData frenet(const CurveS3& c, double t);

/// The two Bianchi-Spivak input curves: rigid motions of base curves with
/// c(0) = (1,0,0,0) and transversal initial tangents.
CurveS3 curve_ca(double a);
CurveS3 curve_cb(double b);

/// Profile data (phi, theta) as order-3 scalar jets in the arc length s.
struct ProfileCurve {
    std::function<Jet3(double)> phi;
    std::function<Jet3(double)> theta;

    /// Plain callables; derivatives by finite differences.
    static ProfileCurve from_functions(std::function<double(double)> phi,
                                       std::function<double(double)> theta,
                                       double fd_step = 1e-3);
};

/// gamma(s) = (cos phi cos theta, cos phi sin theta, sin phi, 0). Validates
/// (phi')^2 + (theta')^2 cos^2 phi = 1 within 1e-6 and sin phi > 0 on 33
/// samples of [s_min, s_max]; throws ArcLengthViolation / HemisphereViolation.
CurveS3 profile_curve(const ProfileCurve& profile, double s_min, double s_max);

/// The profile point and its jet without validation (shared with the
/// helicoidal patch construction).
CurveJet profile_point_jet(const ProfileCurve& profile, double s);

} // namespace s3flat
