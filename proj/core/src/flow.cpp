#include "ricci/flow.hpp"

#include <cmath>
#include <stdexcept>

namespace ricci {

std::vector<double> reduced_flow_general(std::span<const int> dims, std::span<const double> ricci,
                                         std::span<const double> x) {
    const std::size_t k = dims.size();
    if (k == 0) throw std::invalid_argument("reduced_flow_general: k must be >= 1");
    if (ricci.size() != k || x.size() != k)
        throw std::invalid_argument("reduced_flow_general: dims, ricci, x must have equal length");

    double dsum = 0.0, drsum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        if (dims[i] <= 0) throw std::invalid_argument("reduced_flow_general: dims must be positive");
        if (!(x[i] > 0.0)) throw std::domain_error("reduced_flow_general: x must be strictly positive");
        dsum += dims[i];
        drsum += dims[i] * ricci[i];
    }
    const double mean = drsum / dsum;

    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = -2.0 * x[i] * (ricci[i] - mean);
    return out;
}

FlowVector vector_field(const SpaceParams& sp, const MetricPoint& x) {
    const Vec3 r = principal_ricci(sp, x);
    const double mean = (sp.d1 * r[0] + sp.d2 * r[1] + sp.d3 * r[2]) / sp.d;
    return {-2.0 * x.x1 * (r[0] - mean), -2.0 * x.x2 * (r[1] - mean), -2.0 * x.x3 * (r[2] - mean)};
}

Mat3 ricci_partials(const SpaceParams& sp, const MetricPoint& x) {
    require_positive(x);
    const double x1 = x.x1, x2 = x.x2, x3 = x.x3;
    const double m = static_cast<double>(sp.n - 2);

    // r_i = Q_i / D_i with D_i proportional to x1*x2*x3, so
    //   dr_i/dx_j = (dQ_i/dx_j)/D_i - r_i/x_j.
    const double D12 = 4.0 * m * x1 * x2 * x3;
    const double D3 = 4.0 * x1 * x2 * x3;

    const Vec3 r = principal_ricci(sp, x);
    const Vec3 inv = {1.0 / x1, 1.0 / x2, 1.0 / x3};

    const Vec3 dq1 = {2.0 * x1, -2.0 * x2 + 2.0 * m * x3, -2.0 * x3 + 2.0 * m * x2};
    const Vec3 dq2 = {-2.0 * x1 + 2.0 * m * x3, 2.0 * x2, -2.0 * x3 + 2.0 * m * x1};
    const Vec3 dq3 = {-2.0 * (x1 - x2), 2.0 * (x1 - x2), 2.0 * x3};

    Mat3 dr;
    for (int j = 0; j < 3; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        dr(0, j) = dq1[ju] / D12 - r[0] * inv[ju];
        dr(1, j) = dq2[ju] / D12 - r[1] * inv[ju];
        dr(2, j) = dq3[ju] / D3 - r[2] * inv[ju];
    }
    return dr;
}

Mat3 jacobian(const SpaceParams& sp, const MetricPoint& x) {
    const Vec3 r = principal_ricci(sp, x);
    const double mean = (sp.d1 * r[0] + sp.d2 * r[1] + sp.d3 * r[2]) / sp.d;
    const Mat3 dr = ricci_partials(sp, x);
    const Vec3 xv = {x.x1, x.x2, x.x3};

    Mat3 J;
    for (int i = 0; i < 3; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        for (int j = 0; j < 3; ++j) {
            const double dmean =
                (sp.d1 * dr(0, j) + sp.d2 * dr(1, j) + sp.d3 * dr(2, j)) / sp.d;
            double v = -2.0 * xv[iu] * (dr(i, j) - dmean);
            if (i == j) v += -2.0 * (r[iu] - mean);
            J(i, j) = v;
        }
    }
    return J;
}

EquilibriumReport equilibrium_spectrum(const SpaceParams& sp, double q) {
    if (!(q > 0.0)) throw std::domain_error("equilibrium_spectrum: q must be > 0");
    const double n = sp.n;
    const double m2 = (n - 2.0) * (n - 2.0);
    const double kappa = 2.0 * (n - 2.0) / (n - 1.0);

    EquilibriumReport rep;
    rep.q = q;
    rep.lambda1 = (n * n - 5.0 * n + 5.0) / (m2 * q);
    rep.lambda2 = -1.0 / q;
    rep.lambda3 = 0.0;
    rep.center = {1.0, 1.0, kappa};
    if (sp.n == 3) {
        rep.stable_primary = {-1.0, 1.0, 0.0};
        rep.stable_secondary = Vec3{-1.0, 0.0, 1.0};
        rep.unstable = std::nullopt;
        rep.classification = Stability::StableNode;
    } else {
        rep.stable_primary = {1.0, 1.0, -4.0 * m2 / (n - 1.0)};
        rep.stable_secondary = std::nullopt;
        rep.unstable = Vec3{-1.0, 1.0, 0.0};
        rep.classification = Stability::Saddle;
    }
    return rep;
}

CharPoly char_poly_at_equilibrium(const SpaceParams& sp, double q) {
    if (!(q > 0.0)) throw std::domain_error("char_poly_at_equilibrium: q must be > 0");
    const double n = sp.n;
    const double m2 = (n - 2.0) * (n - 2.0);
    return {(n - 1.0) / (q * m2), -(n * n - 5.0 * n + 5.0) / (q * q * m2)};
}

std::array<double, 3> CharPoly::roots() const {
    const double disc = b * b - 4.0 * c;
    const double s = std::sqrt(std::max(0.0, disc));
    return {0.0, (-b - s) / 2.0, (-b + s) / 2.0};
}

std::array<double, 2> planar_field(const SpaceParams& sp, double x1, double x2) {
    if (!(x1 > 0.0) || !(x2 > 0.0))
        throw std::domain_error("planar_field: coordinates must be strictly positive");
    const MetricPoint x{x1, x2, std::pow(x1 * x2, 2.0 - sp.n)};
    const FlowVector f = vector_field(sp, x);
    return {f.f1, f.f2};
}

PlanarReport planar_equilibrium_data(const SpaceParams& sp, double q) {
    if (!(q > 0.0)) throw std::domain_error("planar_equilibrium_data: q must be > 0");
    const double n = sp.n;
    const double m2 = (n - 2.0) * (n - 2.0);
    PlanarReport rep;
    rep.delta = -(n * n - 5.0 * n + 5.0) / (m2 * q * q);
    rep.rho = -(n - 1.0) / (m2 * q);
    // (2n-3)^2 (n-3)^2 / (n-2)^4 / q^2; equals rho^2 - 4*delta and is
    // exactly zero at n = 3.
    rep.sigma = (2.0 * n - 3.0) * (2.0 * n - 3.0) * (n - 3.0) * (n - 3.0) / (m2 * m2 * q * q);
    rep.classification = (sp.n == 3) ? Stability::StableNode : Stability::Saddle;
    return rep;
}

}  // namespace ricci
