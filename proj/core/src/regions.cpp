#include "ricci/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ricci {

const char* surface_name(SurfaceId s) {
    switch (s) {
        case SurfaceId::Pi1: return "Pi1";
        case SurfaceId::Pi2: return "Pi2";
        case SurfaceId::Pi3: return "Pi3";
        case SurfaceId::Gamma1: return "Gamma1";
        case SurfaceId::Gamma2: return "Gamma2";
        case SurfaceId::GammaMinus1: return "GammaMinus1";
        case SurfaceId::GammaMinus2: return "GammaMinus2";
    }
    return "?";
}

namespace {

// Which piece of the cone r_k = 0 does x sit on? The upper component has
// x3 >= (n-2)*x_other + |...| > (n-2)*x_other, the lower one the opposite.
SurfaceId classify_r1_zero(const SpaceParams& sp, const MetricPoint& x) {
    if (sp.n == 3) {
        // r1 = 0 degenerates into x3 = x2 + x1 (Pi3) and x3 = x2 - x1.
        return (x.x3 >= x.x2) ? SurfaceId::Pi3 : SurfaceId::GammaMinus1;
    }
    return (x.x3 > (sp.n - 2) * x.x2) ? SurfaceId::Gamma1 : SurfaceId::GammaMinus1;
}

SurfaceId classify_r2_zero(const SpaceParams& sp, const MetricPoint& x) {
    if (sp.n == 3) {
        return (x.x3 >= x.x1) ? SurfaceId::Pi3 : SurfaceId::GammaMinus2;
    }
    return (x.x3 > (sp.n - 2) * x.x1) ? SurfaceId::Gamma2 : SurfaceId::GammaMinus2;
}

SurfaceId classify_r3_zero(const MetricPoint& x) {
    // r3 factors as (x3-x1+x2)(x3+x1-x2); the first factor vanishing is Pi1.
    return (std::abs(x.x3 - x.x1 + x.x2) <= std::abs(x.x3 + x.x1 - x.x2)) ? SurfaceId::Pi1
                                                                          : SurfaceId::Pi2;
}

double quadric1(const SpaceParams& sp, const MetricPoint& x) {
    return x.x1 * x.x1 - x.x2 * x.x2 - x.x3 * x.x3 + 2.0 * (sp.n - 2) * x.x2 * x.x3;
}

double quadric2(const SpaceParams& sp, const MetricPoint& x) {
    return x.x2 * x.x2 - x.x1 * x.x1 - x.x3 * x.x3 + 2.0 * (sp.n - 2) * x.x1 * x.x3;
}

}  // namespace

RegionClass r_plus_membership(const SpaceParams& sp, const MetricPoint& x, double eps) {
    const ScaledRicci sr = scaled_ricci(sp, x);
    const double gmin = std::min({sr.s[0], sr.s[1], sr.s[2]});

    if (gmin > eps) return {RegionClass::Kind::Inside, {}};

    RegionClass rc;
    rc.kind = RegionClass::Kind::Boundary;
    if (std::abs(sr.s[0]) <= eps) rc.surfaces.push_back(classify_r1_zero(sp, x));
    if (std::abs(sr.s[1]) <= eps) rc.surfaces.push_back(classify_r2_zero(sp, x));
    if (std::abs(sr.s[2]) <= eps) rc.surfaces.push_back(classify_r3_zero(x));
    if (rc.surfaces.empty() || gmin < -eps) {
        rc.kind = RegionClass::Kind::Outside;
        rc.surfaces.clear();
    }
    return rc;
}

StructuralConstants structural_constants(const SpaceParams& sp, double c) {
    if (!(c > 0.0)) throw std::domain_error("structural_constants: c must be > 0");
    const double n = sp.n;
    StructuralConstants sc;
    sc.nu_tilde = 1.0 / (2.0 * n - 4.0);
    sc.l = n - 2.0 - std::sqrt((n - 1.0) * (n - 3.0));
    sc.kappa = 2.0 * (n - 2.0) / (n - 1.0);
    sc.t_tilde = sc.nu_tilde;
    sc.tau1 = std::pow(2.0, 2.0 - n) * c;
    sc.tau2 = std::pow((2.0 * n - 4.0) / c, 1.0 / (3.0 - 2.0 * n));
    sc.p_bar = std::pow(c / (2.0 * n - 4.0), 1.0 / (2.0 * n - 3.0));
    return sc;
}

MetricPoint gamma_point(const SpaceParams& sp, int branch, double nu, double t) {
    if (branch != 1 && branch != 2) throw std::invalid_argument("gamma_point: branch must be 1 or 2");
    const double nu_tilde = 1.0 / (2.0 * sp.n - 4.0);
    if (!(nu > 0.0) || nu > nu_tilde)
        throw std::domain_error("gamma_point: nu must lie in (0, 1/(2n-4)]");
    if (!(t > 0.0)) throw std::domain_error("gamma_point: t must be > 0");
    const double mu = std::sqrt(nu * nu - 2.0 * (sp.n - 2) * nu + 1.0);
    return (branch == 1) ? MetricPoint{mu * t, nu * t, t} : MetricPoint{nu * t, mu * t, t};
}

double surface_residual(const SpaceParams& sp, SurfaceId surface, const MetricPoint& x) {
    require_positive(x);
    const double scale = x.x1 + x.x2 + x.x3;
    switch (surface) {
        case SurfaceId::Pi1: return (-x.x1 + x.x2 + x.x3) / scale;
        case SurfaceId::Pi2: return (x.x1 - x.x2 + x.x3) / scale;
        case SurfaceId::Pi3: return (x.x1 + x.x2 - x.x3) / scale;
        case SurfaceId::Gamma1:
        case SurfaceId::GammaMinus1: return quadric1(sp, x) / (scale * scale);
        case SurfaceId::Gamma2:
        case SurfaceId::GammaMinus2: return quadric2(sp, x) / (scale * scale);
    }
    throw std::invalid_argument("surface_residual: unknown surface");
}

Vec3 boundary_normal(const SpaceParams& sp, SurfaceId surface, const MetricPoint& x, double tol) {
    if (surface == SurfaceId::Pi3 && sp.n != 3)
        throw std::domain_error("boundary_normal: Pi3 exists only for n = 3");
    if (std::abs(surface_residual(sp, surface, x)) > tol)
        throw std::domain_error(std::string("boundary_normal: point is not on ") +
                                surface_name(surface));
    const double m = static_cast<double>(sp.n - 2);
    switch (surface) {
        case SurfaceId::Pi1: return {-1.0, 1.0, 1.0};
        case SurfaceId::Pi2: return {1.0, -1.0, 1.0};
        case SurfaceId::Pi3: return {1.0, 1.0, -1.0};
        case SurfaceId::Gamma1:
        case SurfaceId::GammaMinus1:
            return {2.0 * x.x1, 2.0 * m * x.x3 - 2.0 * x.x2, 2.0 * m * x.x2 - 2.0 * x.x3};
        case SurfaceId::Gamma2:
        case SurfaceId::GammaMinus2:
            return {2.0 * m * x.x3 - 2.0 * x.x1, 2.0 * x.x2, 2.0 * m * x.x1 - 2.0 * x.x3};
    }
    throw std::invalid_argument("boundary_normal: unknown surface");
}

double inward_flux(const SpaceParams& sp, SurfaceId surface, const MetricPoint& x, double tol) {
    const Vec3 nrm = boundary_normal(sp, surface, x, tol);
    const FlowVector f = vector_field(sp, x);
    return dot(f.as_vec(), nrm);
}

MetricPoint pi_curve(const SpaceParams& sp, double c, double t) {
    if (!(c > 0.0)) throw std::domain_error("pi_curve: c must be > 0");
    if (!(t > 0.0) || t == 1.0) throw std::domain_error("pi_curve: t must lie in (0,inf)\\{1}");
    const double d = 2.0 * sp.n - 3.0;
    const double x1 = std::pow(c, 1.0 / d) * std::pow(t, (2.0 - sp.n) / d) *
                      std::pow(std::abs(t - 1.0), 1.0 / (3.0 - 2.0 * sp.n));
    return {x1, t * x1, std::abs(t - 1.0) * x1};
}

MetricPoint gamma_curve(const SpaceParams& sp, double c, int branch, double t) {
    if (!(c > 0.0)) throw std::domain_error("gamma_curve: c must be > 0");
    if (branch != 1 && branch != 2) throw std::invalid_argument("gamma_curve: branch must be 1 or 2");
    const double t_tilde = 1.0 / (2.0 * sp.n - 4.0);
    if (!(t > 0.0) || t > t_tilde) throw std::domain_error("gamma_curve: t must lie in (0, 1/(2n-4)]");
    const double d = 2.0 * sp.n - 3.0;
    const double psi = std::sqrt(t * t - 2.0 * (sp.n - 2) * t + 1.0);
    const double x3 = std::pow(c, 1.0 / d) * std::pow(t * psi, -(sp.n - 2.0) / d);
    const double xa = psi * x3, xb = t * x3;
    return (branch == 1) ? MetricPoint{xa, xb, x3} : MetricPoint{xb, xa, x3};
}

MetricPoint i_curve(const SpaceParams& sp, double c, int which, double tau) {
    if (!(c > 0.0)) throw std::domain_error("i_curve: c must be > 0");
    if (!(tau > 0.0)) throw std::domain_error("i_curve: tau must be > 0");
    const double e = 1.0 / (sp.n - 2.0);
    switch (which) {
        case 1: return {std::pow(c, e) * std::pow(tau, (1.0 - sp.n) * e), tau, tau};
        case 2: return {tau, std::pow(c, e) * std::pow(tau, (1.0 - sp.n) * e), tau};
        case 3: return {tau, tau, c * std::pow(tau, 4.0 - 2.0 * sp.n)};
    }
    throw std::invalid_argument("i_curve: which must be 1, 2 or 3");
}

Vec3 i_curve_tangent(const SpaceParams& sp, double c, int which, double tau) {
    const double e = 1.0 / (sp.n - 2.0);
    const double a = std::pow(c, e) * std::pow(tau, (1.0 - sp.n) * e);
    const double da = (1.0 - sp.n) * e * a / tau;
    switch (which) {
        case 1: return {da, 1.0, 1.0};
        case 2: return {1.0, da, 1.0};
        case 3: return {1.0, 1.0, (4.0 - 2.0 * sp.n) * c * std::pow(tau, 3.0 - 2.0 * sp.n)};
    }
    throw std::invalid_argument("i_curve_tangent: which must be 1, 2 or 3");
}

double i_curve_entry_threshold(const SpaceParams& sp, double c, int which) {
    if (!(c > 0.0)) throw std::domain_error("i_curve_entry_threshold: c must be > 0");
    const double d = 2.0 * sp.n - 3.0;
    switch (which) {
        case 1:
        case 2:
            // I1/I2 cross the r3 = 0 plane where the first coordinate equals
            // the sum of the others; solving gives tau = (2^(2-n) c)^(1/(2n-3)).
            return std::pow(std::pow(2.0, 2.0 - sp.n) * c, 1.0 / d);
        case 3: return std::pow(c / (2.0 * sp.n - 4.0), 1.0 / d);
    }
    throw std::invalid_argument("i_curve_entry_threshold: which must be 1, 2 or 3");
}

double sigma_residual(const SpaceParams& sp, double c, const MetricPoint& x) {
    if (!(c > 0.0)) throw std::domain_error("sigma_residual: c must be > 0");
    return volume(sp, x) - c;
}

}  // namespace ricci
