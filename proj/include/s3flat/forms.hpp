#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "s3flat/s3core.hpp"

namespace s3flat {

/// Raw order-2 jet of an immersion (u,v) -> S^3.
struct PatchJet {
    Vec4 f, fu, fv, fuu, fuv, fvv;
};

/// Immersed parameter patch. `value` is always present; `analytic` carries a
/// closed-form jet when the construction provides one, otherwise jets fall
/// back to central differences. `normal_sign` fixes the orientation of the
/// cross-product normal per construction (see the construct module).
struct SurfacePatch {
    std::function<Vec4(double, double)> value;
    std::function<PatchJet(double, double)> analytic;
    double umin = -3.14159265358979323846, umax = 3.14159265358979323846;
    double vmin = -3.14159265358979323846, vmax = 3.14159265358979323846;
    std::string tag;
    double normal_sign = 1.0;

    bool has_analytic_jet() const { return static_cast<bool>(analytic); }
};

/// Order-2 jet plus the unit normal (tangent to S^3, orthogonal to f_u, f_v).
struct JetSample {
    Vec4 f, fu, fv, fuu, fuv, fvv;
    Vec4 normal;
};

struct FormCoefficients {
    double E = 0, F = 0, G = 0; // first fundamental form
    double e = 0, f = 0, g = 0; // second fundamental form
    double K_ext = 0;           // (eg - f^2) / (EG - F^2)
};

/// Least-squares plane fit of the unwrapped angle function.
struct AngleFit {
    double lambda1 = 0, lambda2 = 0, lambda3 = 0;
    double rms_residual = 0;
};

struct GridSpec {
    double umin, umax, vmin, vmax;
    int nu = 21, nv = 21;

    static GridSpec from_patch(const SurfacePatch& p, int nu = 21, int nv = 21) {
        return GridSpec{p.umin, p.umax, p.vmin, p.vmax, nu, nv};
    }
    double u(int i) const {
        return nu > 1 ? umin + (umax - umin) * i / (nu - 1) : umin;
    }
    double v(int j) const {
        return nv > 1 ? vmin + (vmax - vmin) * j / (nv - 1) : vmin;
    }
};

/// Jet at (u, v): closed form when the patch has one, otherwise central
/// differences with step h and one Richardson level. The normal is
/// normal_sign * cross4(f, f_u, f_v), normalized.
/// Throws DegenerateImmersion when |f_u ^ f_v ^ f| < 1e-10.
JetSample jet(const SurfacePatch& p, double u, double v, double h = 1e-3);

/// E,F,G from the tangent vectors; e,f,g against the unit normal (valid in
/// S^3 since N is orthogonal to f, so the ambient Hessian equals the
/// covariant one in the N-component); K_ext = (eg - f^2)/(EG - F^2).
FormCoefficients fundamental_forms(const JetSample& j);
FormCoefficients fundamental_forms(const SurfacePatch& p, double u, double v,
                                   double h = 1e-3);

/// First/second-form evaluator abstraction: lets the angle-function machinery
/// run on manufactured metrics as well as immersed patches.
using FormField = std::function<FormCoefficients(double, double)>;

FormField form_field(const SurfacePatch& p, double h = 1e-3);

/// Intrinsic (Gauss) curvature from E,F,G and their parameter derivatives,
/// evaluated by finite differences of the first-form coefficients
/// (step h_form, one Richardson level).
double intrinsic_curvature_from_first_form(const FormField& ff, double u,
                                           double v, double h_form = 5e-3);
double intrinsic_curvature(const SurfacePatch& p, double u, double v,
                           double h_form = 5e-3);

/// <N, E1(f)>: cosine of the angle between the normal and the Hopf field.
double hopf_angle(const SurfacePatch& p, double u, double v);

/// Angle function of an asymptotic Tschebycheff patch, principal value
/// atan2(f, F). Preconditions |E-1|, |G-1|, |e|, |g| < 1e-6; otherwise
/// NotAsymptotic.
double extract_angle(const SurfacePatch& p, double u, double v);
double extract_angle(const FormCoefficients& c);

/// Unwrapped angle samples along a path, continued from the principal value
/// at the first point (nearest-multiple-of-2pi continuation).
std::vector<double> extract_angle_path(
    const SurfacePatch& p, const std::vector<std::pair<double, double>>& path);

/// Least-squares fit omega ~ lambda1 u + lambda2 v + lambda3 over the grid,
/// with row-then-column unwrapping from the grid seed (first point).
AngleFit fit_linear_angle(const SurfacePatch& p, const GridSpec& grid);
AngleFit fit_linear_angle(const FormField& ff, const GridSpec& grid);

} // namespace s3flat
