#pragma once

#include <array>

#include "ricci/linalg.hpp"

namespace ricci {

/// Structure constants of SO(n)/SO(n-2): isotropy module dimensions
/// d1 = d2 = n-2, d3 = 1, total d = 2n-3.
struct SpaceParams {
    int n;
    int d1, d2, d3;
    int d;

    explicit SpaceParams(int n_);
};

/// A diagonal invariant metric, parameterized by three positive scalars.
struct MetricPoint {
    double x1, x2, x3;
};

/// Principal Ricci curvatures, scalar curvature and volume at a point.
struct CurvatureData {
    double r1, r2, r3;
    double S;
    double vol;
};

/// The unique invariant Einstein metric on the volume leaf Vol = c:
/// x0 = (q0, q0, kappa*q0) with kappa = 2(n-2)/(n-1), q0 = (c/kappa)^(1/(2n-3)).
struct EinsteinPoint {
    double kappa;
    double q0;
    MetricPoint x0;
};

/// Throws std::domain_error unless all coordinates are finite and > 0.
void require_positive(const MetricPoint& x);

/// Principal Ricci curvatures (r1, r2, r3). Evaluated through the factored
/// quadric numerators Q_i, which keeps the values well conditioned even at
/// extreme coordinate ratios:
///   4(n-2) x1 x2 x3 * r1 = x1^2 - x2^2 - x3^2 + 2(n-2) x2 x3
///   4(n-2) x1 x2 x3 * r2 = x2^2 - x1^2 - x3^2 + 2(n-2) x1 x3
///   4      x1 x2 x3 * r3 = (x3 - x1 + x2)(x3 + x1 - x2)
Vec3 principal_ricci(const SpaceParams& sp, const MetricPoint& x);

/// Scalar curvature S = d1*r1 + d2*r2 + d3*r3.
double scalar_curvature(const SpaceParams& sp, const MetricPoint& x);

/// Volume functional Vol = x1^(n-2) x2^(n-2) x3.
double volume(const SpaceParams& sp, const MetricPoint& x);

/// log(Vol); safe where Vol itself would overflow a double.
double log_volume(const SpaceParams& sp, const MetricPoint& x);

CurvatureData curvature(const SpaceParams& sp, const MetricPoint& x);

EinsteinPoint einstein_point(const SpaceParams& sp, double c);

/// The conic x3^2 - (2n-4)(x1+x2) x3 + (x1-x2)^2, which equals
/// -4 x1 x2 x3 * S identically (its zero set is the S = 0 locus).
double scal_conic_residual(const SpaceParams& sp, const MetricPoint& x);

/// Scale-free positivity observables s_i = x_i * r_i together with a
/// first-order bound on their floating-point evaluation noise. The signs
/// of s decide membership in the positive-Ricci cone; the noise bounds
/// tell when those signs stop being trustworthy in double precision.
struct ScaledRicci {
    Vec3 s;      // (x1*r1, x2*r2, x3*r3)
    Vec3 noise;  // absolute roundoff bound per component
};

ScaledRicci scaled_ricci(const SpaceParams& sp, const MetricPoint& x);

}  // namespace ricci
