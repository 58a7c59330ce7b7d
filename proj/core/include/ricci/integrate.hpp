#pragma once

#include <optional>
#include <vector>

#include "ricci/geometry.hpp"

namespace ricci {

struct IntegratorConfig {
    double rtol = 1e-9;
    double atol = 1e-12;
    double t_max = 100.0;
    long max_steps = 2'000'000;
    double event_time_tol = 1e-10;

    // Guards. The flow for n >= 4 generically escapes to infinity along the
    // unstable manifold after entering the positive-Ricci cone; these convert
    // the resulting coordinate degeneration into a typed halt.
    double x_floor = 1e-300;
    double x_ceil = 1e30;  // additionally capped so Vol stays finite in doubles
    double safety = 0.8;
};

enum class EventKind { EnterRPlus, ExitRPlus, BlowupGuard };

const char* event_kind_name(EventKind k);

struct EventRecord {
    EventKind kind;
    double t;
    MetricPoint x;
    double g;  // value of the crossing observable min_i(x_i r_i) at the event
};

struct TrajectorySample {
    double t;
    MetricPoint x;
    CurvatureData curv;
};

enum class StopReason { ReachedTMax, MaxSteps, BlowupGuard };

struct Trajectory {
    std::vector<TrajectorySample> samples;
};

struct IntegrationResult {
    Trajectory trajectory;
    std::vector<EventRecord> events;
    StopReason stop;
    double t_end;
};

/// Integrate the reduced flow from x0 with an embedded Dormand-Prince 5(4)
/// pair under PI step control. Crossings of the scale-free observable
/// g(x) = min_i(x_i r_i) are localized by bisection to event_time_tol and
/// recorded as EnterRPlus / ExitRPlus events; positivity loss or coordinate
/// degeneration halts with a BlowupGuard event.
IntegrationResult integrate(const SpaceParams& sp, const MetricPoint& x0,
                            const IntegratorConfig& cfg);

/// First EnterRPlus event time from a start outside the positive-Ricci cone;
/// nullopt when t_max is exhausted without entering.
std::optional<double> entry_time(const SpaceParams& sp, const MetricPoint& x0,
                                 const IntegratorConfig& cfg);

enum class ManifoldDirection { Stable, Unstable };

/// Trace a separatrix of the equilibrium on the unit-volume leaf: the
/// stable one backward in time from x0 + side*epsilon*E^s, the unstable one
/// forward from x0 + side*epsilon*E^u. Sample times are the integration
/// clock of the traced direction. epsilon <= 0 selects the default 1e-6*q0.
Trajectory trace_separatrix(const SpaceParams& sp, ManifoldDirection direction, int side,
                            double epsilon, const IntegratorConfig& cfg);

/// Max over samples of |Vol(x) - c| / c, evaluated in log space so that it
/// stays meaningful where Vol overflows a double.
double conservation_report(const Trajectory& traj, const SpaceParams& sp, double c);

}  // namespace ricci
