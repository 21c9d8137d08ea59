#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "massgate/errors.hpp"
#include "massgate/runner.hpp"

namespace massgate {

// Flat JSON run configuration:
//   m, M, alpha, horizon, J       required
//   N                             required in fixed mode
//   N0, Nstage                    required in adaptive mode
//   quadrature  "riemann" | "trapezoid"   (default "trapezoid")
//   mode        "fixed" | "adaptive"      (default "fixed")
//   snapshot_stride               (default 0)
//   tie_tolerance                 (default 1e-10)

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ConfigError(key, "missing required key");
    return *it;
}

inline double number(const nlohmann::json& v, const char* key) {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    return v.get<double>();
}

inline int integer(const nlohmann::json& v, const char* key) {
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (d == static_cast<double>(static_cast<int>(d))) return static_cast<int>(d);
    }
    throw ConfigError(key, "expected an integer");
}

inline std::string text(const nlohmann::json& v, const char* key) {
    if (!v.is_string()) throw ConfigError(key, "expected a string");
    return v.get<std::string>();
}

}  // namespace detail

inline QuadratureKind parse_quadrature(std::string_view name) {
    if (name == "riemann") return QuadratureKind::RiemannInterior;
    if (name == "trapezoid") return QuadratureKind::Trapezoid;
    throw ConfigError("quadrature", "expected \"riemann\" or \"trapezoid\", got \"" + std::string(name) + "\"");
}

inline const char* to_string(QuadratureKind q) {
    return q == QuadratureKind::RiemannInterior ? "riemann" : "trapezoid";
}

inline RunConfig config_from_json(const nlohmann::json& doc) {
    using detail::integer;
    using detail::number;
    using detail::require;
    using detail::text;

    if (!doc.is_object()) throw ConfigError("<root>", "configuration must be a JSON object");
    static constexpr const char* known[] = {"m",          "M",    "alpha", "horizon", "J",
                                            "N",          "N0",   "Nstage", "quadrature", "mode",
                                            "snapshot_stride", "tie_tolerance"};
    for (const auto& [key, _] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw ConfigError(key, "unknown key");
    }

    RunConfig run;
    run.control.lower = number(require(doc, "m"), "m");
    run.control.upper = number(require(doc, "M"), "M");
    run.control.alpha = number(require(doc, "alpha"), "alpha");
    run.control.horizon = number(require(doc, "horizon"), "horizon");
    if (doc.contains("tie_tolerance")) run.control.tie_tolerance = number(doc["tie_tolerance"], "tie_tolerance");
    run.control.validate();

    if (doc.contains("quadrature")) run.quad = parse_quadrature(text(doc["quadrature"], "quadrature"));
    if (doc.contains("snapshot_stride")) run.snapshot_stride = integer(doc["snapshot_stride"], "snapshot_stride");

    const std::string mode = doc.contains("mode") ? text(doc["mode"], "mode") : "fixed";
    const int cells = integer(require(doc, "J"), "J");
    if (mode == "fixed") {
        run.mode = FixedGrid{};
        run.grid = GridSpec::uniform(cells, integer(require(doc, "N"), "N"), run.control.horizon);
    } else if (mode == "adaptive") {
        run.mode = AdaptiveGrid{integer(require(doc, "N0"), "N0"), integer(require(doc, "Nstage"), "Nstage")};
        // N only sets the nominal grid step; the adaptive schedule replaces it.
        const int steps = doc.contains("N") ? integer(doc["N"], "N") : 1;
        run.grid = GridSpec::uniform(cells, steps, run.control.horizon);
    } else {
        throw ConfigError("mode", "expected \"fixed\" or \"adaptive\", got \"" + mode + "\"");
    }
    run.validate();
    return run;
}

/// Parses and validates a configuration document. Throws ConfigError.
inline RunConfig parse_config(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

inline nlohmann::json to_json(const RunConfig& run) {
    nlohmann::json doc = {
        {"m", run.control.lower},
        {"M", run.control.upper},
        {"alpha", run.control.alpha},
        {"horizon", run.control.horizon},
        {"tie_tolerance", run.control.tie_tolerance},
        {"J", run.grid.cells},
        {"N", run.grid.steps},
        {"quadrature", to_string(run.quad)},
        {"snapshot_stride", run.snapshot_stride},
    };
    if (const auto* a = std::get_if<AdaptiveGrid>(&run.mode)) {
        doc["mode"] = "adaptive";
        doc["N0"] = a->first_stage_steps;
        doc["Nstage"] = a->stage_steps;
    } else {
        doc["mode"] = "fixed";
    }
    return doc;
}

inline std::string serialize_config(const RunConfig& run) { return to_json(run).dump(2); }

/// Applies a `key=value` override to a config document. The value is read as
/// JSON when it parses (numbers, quoted strings) and as a bare string otherwise.
inline void apply_override(nlohmann::json& doc, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ConfigError(std::string(assignment), "override must have the form key=value");
    }
    const std::string key(assignment.substr(0, eq));
    const std::string raw(assignment.substr(eq + 1));
    auto parsed = nlohmann::json::parse(raw, nullptr, /*allow_exceptions=*/false);
    doc[key] = parsed.is_discarded() ? nlohmann::json(raw) : parsed;
}

}  // namespace massgate
