// massgate: simulate diffusion with bang-bang mass-threshold boundary control.
//
//   massgate run     --config cfg.json --out dir [--set key=value ...]
//   massgate oracle  --config cfg.json
//   massgate compare --config cfg.json --out dir
//   massgate sweep   --config cfg.json --n-list 200,400,800 --out dir

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "massgate/massgate.hpp"

namespace {

using namespace massgate;

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("massgate");
    logger->set_pattern("massgate: %l: %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("MASSGATE_LOG")) {
        const std::string level = env;
        if (level == "error") spdlog::set_level(spdlog::level::err);
        else if (level == "info") spdlog::set_level(spdlog::level::info);
        else if (level == "debug") spdlog::set_level(spdlog::level::debug);
        else spdlog::warn("ignoring MASSGATE_LOG={} (expected error, info or debug)", level);
    }
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON in ") + path + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("<root>", "configuration must be a JSON object");
    for (const auto& o : overrides) apply_override(doc, o);
    RunConfig run = config_from_json(doc);
    spdlog::debug("config: {}", to_json(run).dump());
    return run;
}

void log_report(const ErrorReport& report) {
    for (const SwitchError& e : report.switches) {
        spdlog::info("switch {}: T_k={:.10f} t_k={:.10f} err={:.3e} within_bound={}", e.index, e.numeric, e.exact,
                     e.error, e.within_bound);
    }
}

int cmd_run(const RunConfig& cfg, const std::string& out) {
    spdlog::info("running {} grid, {} quadrature", cfg.adaptive() ? "adaptive" : "fixed", to_string(cfg.quad));
    const Trajectory traj = run(cfg);
    const ErrorReport report = compare_with_oracle(traj, cfg);
    log_report(report);
    emit_outputs(traj, report, out);
    write_file(std::filesystem::path(out) / "config.json", serialize_config(cfg) + '\n');
    std::cout << switches_csv(report);
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    std::cout << "k,t_k,mass\n";
    for (int k = 1;; ++k) {
        const double t = exact_switch_time(k, cfg.control);
        if (t > cfg.control.horizon) break;
        std::cout << k << ',' << format_fixed(t) << ',' << format_fixed(exact_mass(t, cfg.control)) << '\n';
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, const std::string& out) {
    const QuadratureComparison c = compare_quadratures(cfg);
    const std::filesystem::path dir(out);
    emit_outputs(c.riemann, c.riemann_report, dir / "riemann");
    emit_outputs(c.trapezoid, c.trapezoid_report, dir / "trapezoid");
    const std::string table = comparison_csv(c);
    write_file(dir / "compare.csv", table);
    const nlohmann::json doc = {{"config", to_json(cfg)},
                                {"riemann", to_json(c.riemann_report)},
                                {"trapezoid", to_json(c.trapezoid_report)}};
    write_file(dir / "compare.json", doc.dump(2) + '\n');
    if (!c.trapezoid_report.all_within_bound) {
        spdlog::info("trapezoid quadrature violates the switch-time error bound (reported, not an error)");
    }
    std::cout << table;
    return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::vector<int>& steps, const std::string& out) {
    const auto rows = sweep_time_steps(cfg, steps);
    const std::string table = sweep_csv(rows);
    ensure_directory(out);
    write_file(std::filesystem::path(out) / "sweep.csv", table);
    std::cout << table;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    configure_logging();

    CLI::App app{"Diffusion with bang-bang boundary control driven by total-mass thresholds"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
    std::vector<int> step_counts;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--set", overrides, "override a config key (key=value), repeatable");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "simulate one configuration and write switches/mass/snapshots");
    add_common(run_cmd);
    run_cmd->add_option("--out", out_dir, "output directory")->required();

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "print the exact switching times up to the horizon");
    add_common(oracle_cmd);

    CLI::App* compare_cmd = app.add_subcommand("compare", "run both quadratures side by side");
    add_common(compare_cmd);
    compare_cmd->add_option("--out", out_dir, "output directory")->required();

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "refinement study over the number of time steps");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--n-list", step_counts, "comma-separated step counts")->required()->delimiter(',');
    sweep_cmd->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const RunConfig cfg = load_config(config_path, overrides);
        if (run_cmd->parsed()) return cmd_run(cfg, out_dir);
        if (oracle_cmd->parsed()) return cmd_oracle(cfg);
        if (compare_cmd->parsed()) return cmd_compare(cfg, out_dir);
        if (sweep_cmd->parsed()) return cmd_sweep(cfg, step_counts, out_dir);
    } catch (const ConfigError& e) {
        spdlog::error("{}", e.what());
        return 2;
    } catch (const IoError& e) {
        spdlog::error("{}", e.what());
        return 3;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return 1;
    }
    return 1;
}
