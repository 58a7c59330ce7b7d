#include "ricci/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ricci {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

SpaceParams::SpaceParams(int n_) : n(n_), d1(n_ - 2), d2(n_ - 2), d3(1), d(2 * n_ - 3) {
    if (n_ < 3) throw std::invalid_argument("SpaceParams: n must be >= 3, got " + std::to_string(n_));
}

void require_positive(const MetricPoint& x) {
    if (!(x.x1 > 0.0) || !(x.x2 > 0.0) || !(x.x3 > 0.0) || !std::isfinite(x.x1) ||
        !std::isfinite(x.x2) || !std::isfinite(x.x3)) {
        throw std::domain_error("metric point must have finite, strictly positive coordinates");
    }
}

ScaledRicci scaled_ricci(const SpaceParams& sp, const MetricPoint& x) {
    require_positive(x);
    const double x1 = x.x1, x2 = x.x2, x3 = x.x3;
    const double m = static_cast<double>(sp.n - 2);

    const double q1 = x1 * x1 - x2 * x2 - x3 * x3 + 2.0 * m * x2 * x3;
    const double q2 = x2 * x2 - x1 * x1 - x3 * x3 + 2.0 * m * x1 * x3;
    const double fa = x3 - x1 + x2;
    const double fb = x3 + x1 - x2;
    const double q3 = fa * fb;

    ScaledRicci out;
    out.s[0] = q1 / (4.0 * m * x2 * x3);
    out.s[1] = q2 / (4.0 * m * x1 * x3);
    out.s[2] = q3 / (4.0 * x1 * x2);

    // Roundoff bound: a few ulps of the largest term feeding each numerator.
    const double t12 = x1 * x1 + x2 * x2 + x3 * x3 + 2.0 * m * x2 * x3;
    const double t21 = x1 * x1 + x2 * x2 + x3 * x3 + 2.0 * m * x1 * x3;
    const double sum = x1 + x2 + x3;
    out.noise[0] = 8.0 * kEps * t12 / (4.0 * m * x2 * x3);
    out.noise[1] = 8.0 * kEps * t21 / (4.0 * m * x1 * x3);
    out.noise[2] = 8.0 * kEps * sum * (std::abs(fa) + std::abs(fb) + kEps * sum) / (4.0 * x1 * x2);
    return out;
}

Vec3 principal_ricci(const SpaceParams& sp, const MetricPoint& x) {
    const ScaledRicci sr = scaled_ricci(sp, x);
    return {sr.s[0] / x.x1, sr.s[1] / x.x2, sr.s[2] / x.x3};
}

double scalar_curvature(const SpaceParams& sp, const MetricPoint& x) {
    const Vec3 r = principal_ricci(sp, x);
    return sp.d1 * r[0] + sp.d2 * r[1] + sp.d3 * r[2];
}

double volume(const SpaceParams& sp, const MetricPoint& x) {
    require_positive(x);
    const double e = static_cast<double>(sp.n - 2);
    return std::pow(x.x1, e) * std::pow(x.x2, e) * x.x3;
}

double log_volume(const SpaceParams& sp, const MetricPoint& x) {
    require_positive(x);
    const double e = static_cast<double>(sp.n - 2);
    return e * (std::log(x.x1) + std::log(x.x2)) + std::log(x.x3);
}

CurvatureData curvature(const SpaceParams& sp, const MetricPoint& x) {
    const Vec3 r = principal_ricci(sp, x);
    CurvatureData cd;
    cd.r1 = r[0];
    cd.r2 = r[1];
    cd.r3 = r[2];
    cd.S = sp.d1 * r[0] + sp.d2 * r[1] + sp.d3 * r[2];
    cd.vol = volume(sp, x);
    return cd;
}

EinsteinPoint einstein_point(const SpaceParams& sp, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::domain_error("einstein_point: c must be > 0");
    EinsteinPoint ep;
    ep.kappa = 2.0 * (sp.n - 2) / static_cast<double>(sp.n - 1);
    ep.q0 = std::pow(c / ep.kappa, 1.0 / static_cast<double>(sp.d));
    ep.x0 = {ep.q0, ep.q0, ep.kappa * ep.q0};
    return ep;
}

double scal_conic_residual(const SpaceParams& sp, const MetricPoint& x) {
    require_positive(x);
    const double d12 = x.x1 - x.x2;
    return x.x3 * x.x3 - (2.0 * sp.n - 4.0) * (x.x1 + x.x2) * x.x3 + d12 * d12;
}

}  // namespace ricci
