#include "ricci/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ricci/flow.hpp"

namespace ricci {

const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::EnterRPlus: return "EnterRPlus";
        case EventKind::ExitRPlus: return "ExitRPlus";
        case EventKind::BlowupGuard: return "BlowupGuard";
    }
    return "?";
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;

bool positive_finite(const Vec3& y) {
    return y[0] > 0.0 && y[1] > 0.0 && y[2] > 0.0 && std::isfinite(y[0]) && std::isfinite(y[1]) &&
           std::isfinite(y[2]);
}

struct Observable {
    double g;      // min_i x_i r_i
    double noise;  // roundoff bound of the minimizing component
    int sign;      // +1 / -1 when |g| clears the noise floor, else 0
};

Observable observe(const SpaceParams& sp, const Vec3& y) {
    const ScaledRicci sr = scaled_ricci(sp, {y[0], y[1], y[2]});
    std::size_t k = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (sr.s[i] < sr.s[k]) k = i;
    Observable ob;
    ob.g = sr.s[k];
    ob.noise = sr.noise[k];
    ob.sign = (std::abs(ob.g) > ob.noise) ? (ob.g > 0.0 ? 1 : -1) : 0;
    return ob;
}

class Dopri5 {
  public:
    Dopri5(const SpaceParams& sp, double time_sign) : sp_(sp), sign_(time_sign) {}

    Vec3 field(const Vec3& y) const {
        const FlowVector f = vector_field(sp_, {y[0], y[1], y[2]});
        return {sign_ * f.f1, sign_ * f.f2, sign_ * f.f3};
    }

    /// One explicit step of size h from (y, k1). Fills y_out and, when
    /// requested, the embedded error estimate and the FSAL stage k7.
    bool step(const Vec3& y, const Vec3& k1, double h, Vec3& y_out, Vec3* err_out, Vec3* k7_out) const {
        Vec3 t;
        auto at = [&](double a1, double a2 = 0, double a3 = 0, double a4 = 0, double a5 = 0,
                      double a6 = 0) {
            for (std::size_t i = 0; i < 3; ++i)
                t[i] = y[i] + h * (a1 * k_[0][i] + a2 * k_[1][i] + a3 * k_[2][i] + a4 * k_[3][i] +
                                   a5 * k_[4][i] + a6 * k_[5][i]);
            return positive_finite(t);
        };
        k_[0] = k1;
        if (!at(A21)) return false;
        k_[1] = field(t);
        if (!at(A31, A32)) return false;
        k_[2] = field(t);
        if (!at(A41, A42, A43)) return false;
        k_[3] = field(t);
        if (!at(A51, A52, A53, A54)) return false;
        k_[4] = field(t);
        if (!at(A61, A62, A63, A64, A65)) return false;
        k_[5] = field(t);
        for (std::size_t i = 0; i < 3; ++i)
            y_out[i] = y[i] + h * (B1 * k_[0][i] + B3 * k_[2][i] + B4 * k_[3][i] + B5 * k_[4][i] +
                                   B6 * k_[5][i]);
        if (!positive_finite(y_out)) return false;
        if (k7_out || err_out) {
            const Vec3 k7 = field(y_out);
            if (k7_out) *k7_out = k7;
            if (err_out)
                for (std::size_t i = 0; i < 3; ++i)
                    (*err_out)[i] = h * (E1 * k_[0][i] + E3 * k_[2][i] + E4 * k_[3][i] +
                                         E5 * k_[4][i] + E6 * k_[5][i] + E7 * k7[i]);
        }
        return true;
    }

  private:
    const SpaceParams& sp_;
    double sign_;
    mutable std::array<Vec3, 6> k_;
};

double initial_step(const Dopri5& rk, const Vec3& y0, const Vec3& f0, double rtol, double atol,
                    double t_span) {
    auto scnorm = [&](const Vec3& v, const Vec3& ref) {
        double m = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            m = std::max(m, std::abs(v[i]) / (atol + rtol * std::abs(ref[i])));
        return m;
    };
    const double d0 = scnorm(y0, y0), d1 = scnorm(f0, y0);
    double h0 = (d1 > 1e-10) ? 0.01 * d0 / d1 : 1e-6;
    h0 = std::min(h0, t_span);
    Vec3 y1;
    if (!rk.step(y0, f0, h0, y1, nullptr, nullptr)) return h0 * 1e-3;
    const Vec3 f1 = rk.field(y1);
    const double d2 = scnorm(f1 - f0, y0) / h0;
    const double dm = std::max(d1, d2);
    const double h1 = (dm > 1e-15) ? std::pow(0.01 / dm, 0.2) : std::max(1e-6, h0 * 1e-3);
    return std::min({100.0 * h0, h1, t_span});
}

struct EventScan {
    const SpaceParams& sp;
    const Dopri5& rk;
    const IntegratorConfig& cfg;
    std::vector<EventRecord>& events;

    /// Localize a sign change of g inside the step (t0, t0+h) by bisection,
    /// re-taking a single RK step of partial size from the step start.
    void localize(double t0, const Vec3& y0, const Vec3& k1, double h, bool to_inside) {
        double lo = 0.0, hi = 1.0;
        Vec3 best_y = y0;
        double best_g = std::numeric_limits<double>::infinity();
        double best_th = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            Vec3 ym;
            if (!rk.step(y0, k1, mid * h, ym, nullptr, nullptr)) {
                hi = mid;  // partial step left the positive cone; shrink
                continue;
            }
            const Observable ob = observe(sp, ym);
            if (std::abs(ob.g) < std::abs(best_g)) {
                best_g = ob.g;
                best_y = ym;
                best_th = mid;
            }
            const bool inside = ob.g > 0.0;
            if (inside == to_inside) hi = mid;
            else lo = mid;
            if (h * (hi - lo) <= cfg.event_time_tol && std::abs(best_g) <= 1e-9) break;
        }
        events.push_back({to_inside ? EventKind::EnterRPlus : EventKind::ExitRPlus,
                          t0 + best_th * h, {best_y[0], best_y[1], best_y[2]}, best_g});
    }
};

IntegrationResult integrate_impl(const SpaceParams& sp, const MetricPoint& x0,
                                 const IntegratorConfig& cfg, double time_sign) {
    require_positive(x0);
    if (!(cfg.rtol > 0) || !(cfg.atol > 0) || !(cfg.t_max > 0) || !(cfg.event_time_tol > 0) ||
        cfg.max_steps <= 0)
        throw std::invalid_argument("integrate: tolerances, t_max and max_steps must be positive");

    // Keep Vol representable: x^(2n-3) must stay below double overflow.
    const double ceil_eff = std::min(cfg.x_ceil, std::pow(10.0, 280.0 / sp.d));

    const Dopri5 rk(sp, time_sign);
    IntegrationResult res;
    res.stop = StopReason::ReachedTMax;

    double t = 0.0;
    Vec3 y = {x0.x1, x0.x2, x0.x3};
    Vec3 k1 = rk.field(y);
    res.trajectory.samples.push_back({t, x0, curvature(sp, x0)});

    Observable ob = observe(sp, y);
    // A start pinned onto the boundary at double resolution counts as
    // outside, so that an immediate entrance is still recorded.
    int cur_sign = (ob.sign != 0) ? ob.sign : (ob.g > 0.0 ? 1 : -1);
    int uncertain_streak = 0;

    EventScan scan{sp, rk, cfg, res.events};

    double h = initial_step(rk, y, k1, cfg.rtol, cfg.atol, cfg.t_max);
    double errold = 1e-4;
    long steps = 0;

    while (t < cfg.t_max) {
        if (++steps > cfg.max_steps) {
            res.stop = StopReason::MaxSteps;
            break;
        }
        h = std::min(h, cfg.t_max - t);

        Vec3 y1, err, k7;
        if (!rk.step(y, k1, h, y1, &err, &k7)) {
            h *= 0.3;
            if (h < 1e-14 * std::max(1.0, std::abs(t))) {
                res.events.push_back(
                    {EventKind::BlowupGuard, t, {y[0], y[1], y[2]}, ob.g});
                res.stop = StopReason::BlowupGuard;
                break;
            }
            continue;
        }

        double en = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double sc = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
            en = std::max(en, std::abs(err[i]) / sc);
        }

        if (en > 1.0) {  // rejected
            h *= std::max(0.2, cfg.safety * std::pow(en, -0.2));
            if (h < 1e-14 * std::max(1.0, std::abs(t))) {
                res.events.push_back({EventKind::BlowupGuard, t, {y[0], y[1], y[2]}, ob.g});
                res.stop = StopReason::BlowupGuard;
                break;
            }
            continue;
        }

        const double t1 = t + h;
        const Observable ob1 = observe(sp, y1);

        if (ob1.sign != 0) {
            if (cur_sign != 0 && ob1.sign != cur_sign)
                scan.localize(t, y, k1, h, /*to_inside=*/ob1.sign > 0);
            cur_sign = ob1.sign;
            uncertain_streak = 0;
        } else if (++uncertain_streak > 50) {
            // The positivity observable has dropped below double-precision
            // resolution (degenerating metric); stop honestly.
            res.events.push_back({EventKind::BlowupGuard, t1, {y1[0], y1[1], y1[2]}, ob1.g});
            res.trajectory.samples.push_back(
                {t1, {y1[0], y1[1], y1[2]}, curvature(sp, {y1[0], y1[1], y1[2]})});
            res.stop = StopReason::BlowupGuard;
            break;
        }

        t = t1;
        y = y1;
        k1 = k7;  // FSAL
        ob = ob1;
        res.trajectory.samples.push_back(
            {t, {y[0], y[1], y[2]}, curvature(sp, {y[0], y[1], y[2]})});

        if (y[0] < cfg.x_floor || y[1] < cfg.x_floor || y[2] < cfg.x_floor || y[0] > ceil_eff ||
            y[1] > ceil_eff || y[2] > ceil_eff) {
            res.events.push_back({EventKind::BlowupGuard, t, {y[0], y[1], y[2]}, ob.g});
            res.stop = StopReason::BlowupGuard;
            break;
        }

        const double fac = (en > 0.0) ? cfg.safety * std::pow(en, -0.17) * std::pow(errold, 0.04)
                                      : 5.0;
        errold = std::max(en, 1e-10);
        h *= std::min(5.0, std::max(0.2, fac));
    }

    res.t_end = t;
    return res;
}

}  // namespace

IntegrationResult integrate(const SpaceParams& sp, const MetricPoint& x0,
                            const IntegratorConfig& cfg) {
    return integrate_impl(sp, x0, cfg, +1.0);
}

std::optional<double> entry_time(const SpaceParams& sp, const MetricPoint& x0,
                                 const IntegratorConfig& cfg) {
    const Observable ob0 = observe(sp, {x0.x1, x0.x2, x0.x3});
    if (ob0.sign > 0)
        throw std::domain_error("entry_time: start already lies inside the positive-Ricci cone");
    const IntegrationResult res = integrate_impl(sp, x0, cfg, +1.0);
    for (const auto& ev : res.events)
        if (ev.kind == EventKind::EnterRPlus) return ev.t;
    return std::nullopt;
}

Trajectory trace_separatrix(const SpaceParams& sp, ManifoldDirection direction, int side,
                            double epsilon, const IntegratorConfig& cfg) {
    if (side != 1 && side != -1)
        throw std::invalid_argument("trace_separatrix: side must be +1 or -1");
    if (direction == ManifoldDirection::Unstable && sp.n == 3)
        throw std::domain_error("trace_separatrix: no unstable separatrix for n = 3");

    const EinsteinPoint ep = einstein_point(sp, 1.0);
    if (epsilon <= 0.0) epsilon = 1e-6 * ep.q0;
    const EquilibriumReport spec = equilibrium_spectrum(sp, ep.q0);

    const Vec3 dir_vec =
        (direction == ManifoldDirection::Stable) ? spec.stable_primary : *spec.unstable;
    const MetricPoint start{ep.x0.x1 + side * epsilon * dir_vec[0],
                            ep.x0.x2 + side * epsilon * dir_vec[1],
                            ep.x0.x3 + side * epsilon * dir_vec[2]};
    const double time_sign = (direction == ManifoldDirection::Stable) ? -1.0 : +1.0;
    return integrate_impl(sp, start, cfg, time_sign).trajectory;
}

double conservation_report(const Trajectory& traj, const SpaceParams& sp, double c) {
    if (traj.samples.empty()) throw std::invalid_argument("conservation_report: empty trajectory");
    if (!(c > 0.0)) throw std::domain_error("conservation_report: c must be > 0");
    const double logc = std::log(c);
    double worst = 0.0;
    for (const auto& s : traj.samples)
        worst = std::max(worst, std::abs(std::expm1(log_volume(sp, s.x) - logc)));
    return worst;
}

}  // namespace ricci
