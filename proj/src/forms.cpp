#include "s3flat/forms.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "s3flat/numeric.hpp"

namespace s3flat {

namespace {

PatchJet fd_patch_jet(const SurfacePatch& p, double u, double v, double h) {
    const auto& f = p.value;
    PatchJet j;
    j.f = f(u, v);
    auto along_u = [&](double uu) { return f(uu, v); };
    auto along_v = [&](double vv) { return f(u, vv); };
    j.fu = fd_d1(along_u, u, h);
    j.fv = fd_d1(along_v, v, h);
    j.fuu = fd_d2(along_u, u, h);
    j.fvv = fd_d2(along_v, v, h);
    j.fuv = fd_mixed(f, u, v, h);
    return j;
}

} // namespace

JetSample jet(const SurfacePatch& p, double u, double v, double h) {
    const PatchJet raw = p.has_analytic_jet() ? p.analytic(u, v) : fd_patch_jet(p, u, v, h);
    const Vec4 n = cross4(raw.f, raw.fu, raw.fv);
    const double nn = n.norm();
    if (nn < 1e-10) {
        throw DegenerateImmersion("jet: f_u ^ f_v ^ f vanishes");
    }
    JetSample s;
    s.f = raw.f;
    s.fu = raw.fu;
    s.fv = raw.fv;
    s.fuu = raw.fuu;
    s.fuv = raw.fuv;
    s.fvv = raw.fvv;
    s.normal = p.normal_sign * n / nn;
    return s;
}

FormCoefficients fundamental_forms(const JetSample& j) {
    FormCoefficients c;
    c.E = j.fu.dot(j.fu);
    c.F = j.fu.dot(j.fv);
    c.G = j.fv.dot(j.fv);
    c.e = j.fuu.dot(j.normal);
    c.f = j.fuv.dot(j.normal);
    c.g = j.fvv.dot(j.normal);
    const double W = c.E * c.G - c.F * c.F;
    if (W < 1e-14) {
        throw DegenerateImmersion("fundamental_forms: EG - F^2 not positive");
    }
    c.K_ext = (c.e * c.g - c.f * c.f) / W;
    return c;
}

FormCoefficients fundamental_forms(const SurfacePatch& p, double u, double v,
                                   double h) {
    return fundamental_forms(jet(p, u, v, h));
}

FormField form_field(const SurfacePatch& p, double h) {
    return [p, h](double u, double v) { return fundamental_forms(p, u, v, h); };
}

double intrinsic_curvature_from_first_form(const FormField& ff, double u,
                                           double v, double h) {
    auto Ef = [&](double uu, double vv) { return ff(uu, vv).E; };
    auto Ff = [&](double uu, double vv) { return ff(uu, vv).F; };
    auto Gf = [&](double uu, double vv) { return ff(uu, vv).G; };

    auto du = [&](auto& fn, double uu, double vv) {
        return fd_d1([&](double x) { return fn(x, vv); }, uu, h);
    };
    auto dv = [&](auto& fn, double uu, double vv) {
        return fd_d1([&](double x) { return fn(uu, x); }, vv, h);
    };

    const FormCoefficients c0 = ff(u, v);
    const double E = c0.E, F = c0.F, G = c0.G;
    const double Eu = du(Ef, u, v), Ev = dv(Ef, u, v);
    const double Fu = du(Ff, u, v), Fv = dv(Ff, u, v);
    const double Gu = du(Gf, u, v), Gv = dv(Gf, u, v);
    const double Evv = fd_d2([&](double x) { return Ef(u, x); }, v, h);
    const double Guu = fd_d2([&](double x) { return Gf(x, v); }, u, h);
    const double Fuv = fd_mixed(Ff, u, v, h);

    const double W = E * G - F * F;
    const double num = E * (Ev * Gv - 2.0 * Fu * Gv + Gu * Gu) +
                       G * (Eu * Gu - 2.0 * Eu * Fv + Ev * Ev) +
                       F * (Eu * Gv - Ev * Gu - 2.0 * Ev * Fv + 4.0 * Fu * Fv -
                            2.0 * Fu * Gu) -
                       2.0 * W * (Evv - 2.0 * Fuv + Guu);
    return num / (4.0 * W * W);
}

double intrinsic_curvature(const SurfacePatch& p, double u, double v,
                           double h) {
    return intrinsic_curvature_from_first_form(form_field(p), u, v, h);
}

double hopf_angle(const SurfacePatch& p, double u, double v) {
    const JetSample j = jet(p, u, v);
    return j.normal.dot(hopf_e1(j.f));
}

double extract_angle(const FormCoefficients& c) {
    const double tol = 1e-6;
    if (std::abs(c.E - 1.0) > tol || std::abs(c.G - 1.0) > tol ||
        std::abs(c.e) > tol || std::abs(c.g) > tol) {
        throw NotAsymptotic("extract_angle: patch is not asymptotic Tschebycheff");
    }
    return std::atan2(c.f, c.F);
}

double extract_angle(const SurfacePatch& p, double u, double v) {
    return extract_angle(fundamental_forms(p, u, v));
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double continue_branch(double principal, double previous) {
    return principal + kTwoPi * std::round((previous - principal) / kTwoPi);
}

AngleFit fit_core(const std::function<double(double, double)>& principal_angle,
                  const GridSpec& grid) {
    // Unwrap row 0 along u from the seed, then each column along v.
    Eigen::MatrixXd w(grid.nu, grid.nv);
    w(0, 0) = principal_angle(grid.u(0), grid.v(0));
    for (int i = 1; i < grid.nu; ++i) {
        w(i, 0) = continue_branch(principal_angle(grid.u(i), grid.v(0)), w(i - 1, 0));
    }
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 1; j < grid.nv; ++j) {
            w(i, j) = continue_branch(principal_angle(grid.u(i), grid.v(j)), w(i, j - 1));
        }
    }

    const int n = grid.nu * grid.nv;
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd b(n);
    int row = 0;
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            A(row, 0) = grid.u(i);
            A(row, 1) = grid.v(j);
            A(row, 2) = 1.0;
            b(row) = w(i, j);
            ++row;
        }
    }
    const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
    const double rms = std::sqrt((A * sol - b).squaredNorm() / n);
    return AngleFit{sol[0], sol[1], sol[2], rms};
}

} // namespace

std::vector<double> extract_angle_path(
    const SurfacePatch& p, const std::vector<std::pair<double, double>>& path) {
    std::vector<double> out;
    out.reserve(path.size());
    for (const auto& [u, v] : path) {
        const double principal = extract_angle(p, u, v);
        out.push_back(out.empty() ? principal : continue_branch(principal, out.back()));
    }
    return out;
}

AngleFit fit_linear_angle(const SurfacePatch& p, const GridSpec& grid) {
    return fit_core(
        [&](double u, double v) { return extract_angle(p, u, v); }, grid);
}

AngleFit fit_linear_angle(const FormField& ff, const GridSpec& grid) {
    return fit_core(
        [&](double u, double v) { return extract_angle(ff(u, v)); }, grid);
}

} // namespace s3flat
