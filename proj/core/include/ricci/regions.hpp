#pragma once

#include <vector>

#include "ricci/flow.hpp"
#include "ricci/geometry.hpp"

namespace ricci {

/// Boundary pieces of the positive-Ricci cone. Pi3 only exists for n = 3,
/// where it carries both r1 = 0 and r2 = 0. GammaMinus1/2 are the lower
/// cone components; they never bound the cone but are representable for
/// diagnostics.
enum class SurfaceId { Pi1, Pi2, Pi3, Gamma1, Gamma2, GammaMinus1, GammaMinus2 };

const char* surface_name(SurfaceId s);

struct RegionClass {
    enum class Kind { Inside, Outside, Boundary };
    Kind kind;
    std::vector<SurfaceId> surfaces;  // which boundary pieces, when kind == Boundary
};

/// Distinguished constants of the boundary geometry on the leaf Vol = c.
struct StructuralConstants {
    double nu_tilde;  // 1/(2n-4), parameter bound of the trimmed cones
    double l;         // n-2 - sqrt((n-1)(n-3)), smallest root of nu^2-2(n-2)nu+1
    double kappa;     // 2(n-2)/(n-1)
    double t_tilde;   // 1/(2n-4), parameter of the gamma-curve endpoint
    double tau1;      // 2^(2-n) c
    double tau2;      // ((2n-4)/c)^(1/(3-2n)), entry parameter of I3
    double p_bar;     // (c/(2n-4))^(1/(2n-3)), the gamma1/gamma2 meeting point scale
};

/// Classify a point against the positive-Ricci cone. The test runs on the
/// scale-free observables x_i r_i with tolerance eps (default 1e-9).
RegionClass r_plus_membership(const SpaceParams& sp, const MetricPoint& x, double eps = 1e-9);

StructuralConstants structural_constants(const SpaceParams& sp, double c);

/// Point of the trimmed cone piece: branch 1 is (mu t, nu t, t) on r1 = 0,
/// branch 2 swaps the first two coordinates; mu = sqrt(nu^2-2(n-2)nu+1).
/// Requires 0 < nu <= nu_tilde and t > 0.
MetricPoint gamma_point(const SpaceParams& sp, int branch, double nu, double t);

/// Inward normal of the named boundary surface at x (x must lie on it):
/// plane normals are constant, cone normals are quadric gradients.
Vec3 boundary_normal(const SpaceParams& sp, SurfaceId surface, const MetricPoint& x,
                     double tol = 1e-7);

/// Scale-free residual of x against the named surface; ~0 on the surface.
double surface_residual(const SpaceParams& sp, SurfaceId surface, const MetricPoint& x);

/// Inner product of the flow field with boundary_normal at x.
double inward_flux(const SpaceParams& sp, SurfaceId surface, const MetricPoint& x,
                   double tol = 1e-7);

/// The r3 = 0 curves on the leaf Vol = c: t in (0,1) gives the branch on
/// -x1+x2+x3 = 0, t in (1,inf) the branch on x1-x2+x3 = 0.
MetricPoint pi_curve(const SpaceParams& sp, double c, double t);

/// The r_branch = 0 curves on the leaf, parameter t in (0, t_tilde].
MetricPoint gamma_curve(const SpaceParams& sp, double c, int branch, double t);

/// The distinguished curves I1, I2, I3 on the leaf (which = 1, 2, 3).
MetricPoint i_curve(const SpaceParams& sp, double c, int which, double tau);

/// Tangent vector d/dtau of i_curve at parameter tau.
Vec3 i_curve_tangent(const SpaceParams& sp, double c, int which, double tau);

/// Parameter value above which i_curve(which, tau) lies inside the
/// positive-Ricci cone: (2^(2-n) c)^(1/(2n-3)) for I1/I2, tau2 for I3.
double i_curve_entry_threshold(const SpaceParams& sp, double c, int which);

/// Vol(x) - c.
double sigma_residual(const SpaceParams& sp, double c, const MetricPoint& x);

}  // namespace ricci
