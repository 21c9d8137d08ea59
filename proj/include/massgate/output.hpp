#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "massgate/errors.hpp"
#include "massgate/runner.hpp"

namespace massgate {

inline constexpr const char* kSwitchesHeader = "k,T_k,t_k,err,bound,within_bound";
inline constexpr const char* kMassHeader = "time,mass,flux";
inline constexpr const char* kSnapshotsHeader = "time,x,u";

/// Ten digits after the decimal point, e.g. 1.9500000000.
inline std::string format_fixed(double v) {
    if (std::abs(v) < 5e-11) v = 0.0;  // no "-0.0000000000"
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.10f", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

/// Shortest text that parses back to the same double.
inline std::string format_exact(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw IoError("failed to format number");
    return std::string(buf, end);
}

inline std::string switches_csv(const ErrorReport& report) {
    std::string out = std::string(kSwitchesHeader) + '\n';
    for (const SwitchError& e : report.switches) {
        out += std::to_string(e.index) + ',' + format_fixed(e.numeric) + ',' + format_fixed(e.exact) + ',' +
               format_fixed(e.error) + ',' + format_exact(e.bound) + ',' + (e.within_bound ? "true" : "false") + '\n';
    }
    return out;
}

inline std::string mass_csv(const Trajectory& traj) {
    std::string out = std::string(kMassHeader) + '\n';
    for (const MassSample& s : traj.samples) {
        out += format_exact(s.time) + ',' + format_exact(s.mass) + ',' + std::to_string(static_cast<int>(s.flux)) + '\n';
    }
    return out;
}

/// Long format: one row per (snapshot, node).
inline std::string snapshots_csv(const Trajectory& traj) {
    std::string out = std::string(kSnapshotsHeader) + '\n';
    for (const FieldState& snap : traj.snapshots) {
        const std::size_t cells = snap.values.size() - 1;
        const std::string t = format_exact(snap.time);
        for (std::size_t j = 0; j < snap.values.size(); ++j) {
            const double x = static_cast<double>(j) / static_cast<double>(cells);
            out += t + ',' + format_exact(x) + ',' + format_exact(snap.values[j]) + '\n';
        }
    }
    return out;
}

inline nlohmann::json to_json(const ErrorReport& report) {
    nlohmann::json switches = nlohmann::json::array();
    for (const SwitchError& e : report.switches) {
        switches.push_back({{"k", e.index},
                            {"T_k", e.numeric},
                            {"t_k", e.exact},
                            {"err", e.error},
                            {"bound", e.bound},
                            {"within_bound", e.within_bound}});
    }
    nlohmann::json doc = {{"switches", switches},
                          {"summary",
                           {{"event_count", report.switches.size()},
                            {"max_abs_error", report.max_abs_error},
                            {"mean_spacing", nullptr},
                            {"all_within_bound", report.all_within_bound}}}};
    if (report.mean_spacing) doc["summary"]["mean_spacing"] = *report.mean_spacing;
    return doc;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

inline void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() + (ec ? ": " + ec.message() : ""));
    }
}

/// Writes switches.csv, mass.csv, snapshots.csv and report.json into `dir`.
inline std::vector<std::filesystem::path> emit_outputs(const Trajectory& traj, const ErrorReport& report,
                                                       const std::filesystem::path& dir) {
    ensure_directory(dir);
    std::vector<std::filesystem::path> written = {dir / "switches.csv", dir / "mass.csv", dir / "snapshots.csv",
                                                  dir / "report.json"};
    write_file(written[0], switches_csv(report));
    write_file(written[1], mass_csv(traj));
    write_file(written[2], snapshots_csv(traj));
    write_file(written[3], to_json(report).dump(2) + '\n');
    return written;
}

}  // namespace massgate
