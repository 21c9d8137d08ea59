#pragma once

#include <algorithm>
#include <future>
#include <string>
#include <vector>

#include "massgate/output.hpp"
#include "massgate/runner.hpp"

namespace massgate {

/// Same fixed-grid configuration run with both mass quadratures.
struct QuadratureComparison {
    RunConfig riemann_config;
    RunConfig trapezoid_config;
    Trajectory riemann;
    Trajectory trapezoid;
    ErrorReport riemann_report;
    ErrorReport trapezoid_report;
};

inline QuadratureComparison compare_quadratures(const RunConfig& base) {
    QuadratureComparison c;
    c.riemann_config = base;
    c.riemann_config.mode = FixedGrid{};
    c.riemann_config.quad = QuadratureKind::RiemannInterior;
    c.trapezoid_config = c.riemann_config;
    c.trapezoid_config.quad = QuadratureKind::Trapezoid;

    c.riemann = run_fixed_grid(c.riemann_config);
    c.trapezoid = run_fixed_grid(c.trapezoid_config);
    c.riemann_report = compare_with_oracle(c.riemann, c.riemann_config);
    c.trapezoid_report = compare_with_oracle(c.trapezoid, c.trapezoid_config);
    return c;
}

/// Side-by-side switch table; a missing event in one mode leaves its cells empty.
inline std::string comparison_csv(const QuadratureComparison& c) {
    std::string out = "k,t_k,T_k_riemann,T_k_trapezoid,err_riemann,err_trapezoid,within_bound_riemann,"
                      "within_bound_trapezoid\n";
    const auto& r = c.riemann_report.switches;
    const auto& t = c.trapezoid_report.switches;
    const std::size_t rows = std::max(r.size(), t.size());
    for (std::size_t i = 0; i < rows; ++i) {
        const int k = static_cast<int>(i) + 1;
        out += std::to_string(k) + ',' + format_fixed(exact_switch_time(k, c.riemann_config.control)) + ',';
        out += (i < r.size() ? format_fixed(r[i].numeric) : "") + ',';
        out += (i < t.size() ? format_fixed(t[i].numeric) : "") + ',';
        out += (i < r.size() ? format_fixed(r[i].error) : "") + ',';
        out += (i < t.size() ? format_fixed(t[i].error) : "") + ',';
        out += std::string(i < r.size() ? (r[i].within_bound ? "true" : "false") : "") + ',';
        out += std::string(i < t.size() ? (t[i].within_bound ? "true" : "false") : "") + '\n';
    }
    return out;
}

/// One row of a refinement study over the number of time steps.
struct SweepRow {
    int steps = 0;
    double dt = 0.0;
    std::size_t events = 0;
    double max_abs_error = 0.0;
    bool all_within_bound = true;
};

/// Runs the fixed-grid configuration once per entry of `step_counts`, in parallel.
/// Rows come back in the order of `step_counts`.
inline std::vector<SweepRow> sweep_time_steps(const RunConfig& base, const std::vector<int>& step_counts) {
    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(step_counts.size());
    for (int n : step_counts) {
        RunConfig cfg = base;
        cfg.mode = FixedGrid{};
        cfg.grid = GridSpec::uniform(base.grid.cells, n, base.control.horizon);
        jobs.push_back(std::async(std::launch::async, [cfg] {
            const Trajectory traj = run_fixed_grid(cfg);
            const ErrorReport rep = compare_with_oracle(traj, cfg);
            return SweepRow{cfg.grid.steps, cfg.grid.dt, traj.events.size(), rep.max_abs_error, rep.all_within_bound};
        }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (auto& job : jobs) rows.push_back(job.get());
    return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "N,dt,events,max_abs_error,all_within_bound\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.steps) + ',' + format_exact(r.dt) + ',' + std::to_string(r.events) + ',' +
               format_exact(r.max_abs_error) + ',' + (r.all_within_bound ? "true" : "false") + '\n';
    }
    return out;
}

}  // namespace massgate
