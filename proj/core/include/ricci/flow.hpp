#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ricci/geometry.hpp"
#include "ricci/linalg.hpp"

namespace ricci {

/// Time derivatives (dx1/dt, dx2/dt, dx3/dt) of the reduced flow.
struct FlowVector {
    double f1, f2, f3;

    Vec3 as_vec() const { return {f1, f2, f3}; }
};

enum class Stability { StableNode, Saddle };

/// Linearization data at the equilibrium ray point (q, q, kappa*q).
/// Eigenvectors are kept in the integer form they take naturally;
/// callers normalize if they need unit vectors.
struct EquilibriumReport {
    double q;
    double lambda1, lambda2, lambda3;  // lambda3 == 0 always
    Vec3 stable_primary;               // E^s; first spanning vector when n == 3
    std::optional<Vec3> stable_secondary;  // second spanning vector, n == 3 only
    std::optional<Vec3> unstable;          // E^u, n >= 4 only
    Vec3 center;                           // (1, 1, kappa)
    Stability classification;
};

/// Trace/determinant data of the planar reduction at its equilibrium.
struct PlanarReport {
    double delta;  // det of the planar Jacobian
    double rho;    // trace
    double sigma;  // rho^2 - 4*delta
    Stability classification;
};

/// Coefficients of the characteristic cubic lambda^3 + b*lambda^2 + c*lambda
/// of the Jacobian at the equilibrium; the constant term vanishes.
struct CharPoly {
    double b;
    double c;

    /// Roots {0, r_minus, r_plus} of lambda*(lambda^2 + b*lambda + c).
    std::array<double, 3> roots() const;
};

/// Generic reduced flow on a k-module space:
///   dx_i/dt = -2 x_i (r_i - sum(d_j r_j) / sum(d_j)).
std::vector<double> reduced_flow_general(std::span<const int> dims, std::span<const double> ricci,
                                         std::span<const double> x);

/// The Stiefel flow field, obtained by feeding the closed-form principal
/// Ricci curvatures into the generic reduced flow. Degree-0 homogeneous.
FlowVector vector_field(const SpaceParams& sp, const MetricPoint& x);

/// Partial derivatives dr_i/dx_j (row i, column j).
Mat3 ricci_partials(const SpaceParams& sp, const MetricPoint& x);

/// Analytic Jacobian df_i/dx_j of vector_field. Satisfies J(x)*x = 0.
Mat3 jacobian(const SpaceParams& sp, const MetricPoint& x);

EquilibriumReport equilibrium_spectrum(const SpaceParams& sp, double q);

CharPoly char_poly_at_equilibrium(const SpaceParams& sp, double q);

/// Planar restriction of the field to the unit-volume leaf:
/// (f1, f2) evaluated at (x1, x2, (x1*x2)^(2-n)); fixes c = 1.
std::array<double, 2> planar_field(const SpaceParams& sp, double x1, double x2);

PlanarReport planar_equilibrium_data(const SpaceParams& sp, double q);

}  // namespace ricci
