#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "massgate/controller.hpp"
#include "massgate/errors.hpp"
#include "massgate/field.hpp"
#include "massgate/oracle.hpp"
#include "massgate/quadrature.hpp"
#include "massgate/stepper.hpp"

namespace massgate {

/// Uniform time grid, dt = horizon / N.
struct FixedGrid {
    friend bool operator==(const FixedGrid&, const FixedGrid&) = default;
};

/// Stage-wise time grid that lands the discrete mass exactly on the thresholds:
/// dt0 = M / (2 alpha N0) for the first N0 steps, then dt = (M - m) / (2 alpha Nstage)
/// for every later stage of Nstage steps.
struct AdaptiveGrid {
    int first_stage_steps = 10;  // N0
    int stage_steps = 5;  // Nstage

    friend bool operator==(const AdaptiveGrid&, const AdaptiveGrid&) = default;
};

using TimeGridMode = std::variant<FixedGrid, AdaptiveGrid>;

struct RunConfig {
    ControlConfig control;
    GridSpec grid;
    QuadratureKind quad = QuadratureKind::Trapezoid;
    TimeGridMode mode = FixedGrid{};
    int snapshot_stride = 0;  // 0 disables field snapshots

    bool adaptive() const noexcept { return std::holds_alternative<AdaptiveGrid>(mode); }

    void validate() const {
        control.validate();
        grid.validate();
        if (snapshot_stride < 0) throw ConfigError("snapshot_stride", "must be >= 0");
        if (const auto* a = std::get_if<AdaptiveGrid>(&mode)) {
            if (a->first_stage_steps < 1) throw ConfigError("N0", "must be >= 1");
            if (a->stage_steps < 1) throw ConfigError("Nstage", "must be >= 1");
            if (quad != QuadratureKind::RiemannInterior) {
                throw ConfigError("quadrature", "adaptive mode requires the interior Riemann quadrature");
            }
        }
    }

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct MassSample {
    double time = 0.0;
    double mass = 0.0;
    FluxSign flux = FluxSign::Inflow;  // flux applied during the step that produced this sample

    friend bool operator==(const MassSample&, const MassSample&) = default;
};

struct Trajectory {
    std::vector<MassSample> samples;
    std::vector<FieldState> snapshots;
    std::vector<SwitchEvent> events;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

namespace detail {

inline bool reached_horizon(double time, double horizon) {
    return time >= horizon - 1e-12 * std::max(1.0, horizon);
}

// Shared stepping loop. `next_time(n)` and `grid_for(n)` describe step n >= 1.
template <typename NextTime, typename GridFor>
Trajectory simulate(const RunConfig& run, long long max_steps, NextTime next_time, GridFor grid_for) {
    Trajectory traj;
    SwitchController controller;
    FieldState state = FieldState::zero(run.grid);
    FluxSign flux = FluxSign::Inflow;

    for (long long n = 1; n <= max_steps; ++n) {
        const GridSpec g = grid_for(n);
        state = step(state, flux, g, run.control.alpha);
        state.time = next_time(n);

        const double mu = mass(state, g, run.quad);
        if (!std::isfinite(mu)) throw SolverFailure("non-finite mass at t=" + std::to_string(state.time));
        traj.samples.push_back(MassSample{state.time, mu, flux});
        if (run.snapshot_stride > 0 && n % run.snapshot_stride == 0) traj.snapshots.push_back(state);

        flux = controller.observe(mu, state.time, run.control);
        if (reached_horizon(state.time, run.control.horizon)) break;
    }
    traj.events = controller.events();
    return traj;
}

}  // namespace detail

/// N steps of dt = T/N from the zero field; the mass after each step drives the controller.
inline Trajectory run_fixed_grid(const RunConfig& run) {
    if (run.adaptive()) throw std::invalid_argument("run_fixed_grid needs FixedGrid mode");
    run.validate();
    const GridSpec grid = run.grid;
    return detail::simulate(
        run, grid.steps, [&](long long n) { return static_cast<double>(n) * grid.dt; },
        [&](long long) { return grid; });
}

/// Step sizes of the adaptive schedule: first stage, later stages.
inline std::pair<double, double> adaptive_steps(const ControlConfig& cfg, const AdaptiveGrid& mode) {
    return {cfg.upper / (2.0 * cfg.alpha * mode.first_stage_steps),
            (cfg.upper - cfg.lower) / (2.0 * cfg.alpha * mode.stage_steps)};
}

inline Trajectory run_adaptive_grid(const RunConfig& run) {
    const auto* mode = std::get_if<AdaptiveGrid>(&run.mode);
    if (mode == nullptr) throw std::invalid_argument("run_adaptive_grid needs AdaptiveGrid mode");
    run.validate();

    const auto [dt0, dt] = adaptive_steps(run.control, *mode);
    const long long n0 = mode->first_stage_steps;
    const long long ns = mode->stage_steps;
    const double first_stage_end = static_cast<double>(n0) * dt0;
    const double stage_length = static_cast<double>(ns) * dt;

    // Time of step n, computed from the stage index to avoid accumulating drift.
    auto time_of = [=](long long n) {
        if (n <= n0) return static_cast<double>(n) * dt0;
        const long long after = n - n0;
        const long long stage = (after - 1) / ns;
        const long long within = after - stage * ns;
        return first_stage_end + static_cast<double>(stage) * stage_length + static_cast<double>(within) * dt;
    };
    const GridSpec first = run.grid.with_dt(dt0);
    const GridSpec later = run.grid.with_dt(dt);

    const double h = run.control.horizon;
    long long max_steps = n0;
    if (!detail::reached_horizon(first_stage_end, h)) {
        max_steps += static_cast<long long>(std::ceil((h - first_stage_end) / dt)) + 1;
    }
    return detail::simulate(run, max_steps, time_of, [&](long long n) { return n <= n0 ? first : later; });
}

inline Trajectory run(const RunConfig& cfg) {
    return cfg.adaptive() ? run_adaptive_grid(cfg) : run_fixed_grid(cfg);
}

/// Largest step size used by the run; the switch-time error bound is k times this.
inline double bound_step(const RunConfig& run) {
    if (const auto* a = std::get_if<AdaptiveGrid>(&run.mode)) {
        const auto [dt0, dt] = adaptive_steps(run.control, *a);
        return std::max(dt0, dt);
    }
    return run.grid.dt;
}

struct SwitchError {
    int index = 0;
    double numeric = 0.0;  // T_k
    double exact = 0.0;  // t_k
    double error = 0.0;  // T_k - t_k
    double bound = 0.0;  // k * dt
    bool within_bound = false;  // 0 <= T_k - t_k < k * dt
};

struct ErrorReport {
    std::vector<SwitchError> switches;
    double max_abs_error = 0.0;
    std::optional<double> mean_spacing;  // mean of T_k - T_{k-1}, k >= 2
    bool all_within_bound = true;
};

/// Slack on the lower end of the error bound; switch times are sums of step sizes.
inline constexpr double kTimeSlack = 1e-9;

inline ErrorReport compare_with_oracle(const Trajectory& traj, const RunConfig& run) {
    const double dt = bound_step(run);
    const double slack = kTimeSlack * std::max(1.0, run.control.horizon);
    ErrorReport report;
    for (const SwitchEvent& ev : traj.events) {
        const int k = ev.index;
        const double exact = exact_switch_time(k, run.control);
        const double bound = k * dt;
        if (exact > run.control.horizon + bound + slack) {
            throw OracleMismatch("numeric switch " + std::to_string(k) + " at t=" + std::to_string(ev.time) +
                                 " has no exact counterpart within the horizon (t_k=" + std::to_string(exact) + ")");
        }
        SwitchError e{k, ev.time, exact, ev.time - exact, bound, false};
        e.within_bound = e.error > -slack && e.error < bound;
        report.max_abs_error = std::max(report.max_abs_error, std::abs(e.error));
        report.all_within_bound = report.all_within_bound && e.within_bound;
        report.switches.push_back(e);
    }
    if (traj.events.size() >= 2) {
        report.mean_spacing = (traj.events.back().time - traj.events.front().time) /
                              static_cast<double>(traj.events.size() - 1);
    }
    return report;
}

}  // namespace massgate
