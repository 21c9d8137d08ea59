#pragma once

#include <cmath>
#include <stdexcept>

#include "massgate/errors.hpp"

namespace massgate {

/// Thresholds and physical parameters of the controlled diffusion problem.
struct ControlConfig {
    double lower = 0.1;    // m: switch back to inflow once mass <= lower
    double upper = 0.2;    // M: switch to outflow once mass >= upper
    double alpha = 1.0;    // diffusivity
    double horizon = 1.0;  // final time T
    // Mass within this distance of a threshold counts as reaching it. Exact hits
    // produced by the discrete mass identity land a few ulps off in floating point.
    double tie_tolerance = 1e-10;

    /// Throws ConfigError naming the first violated key.
    void validate() const {
        if (!(lower > 0.0) || !std::isfinite(lower)) {
            throw ConfigError("m", "lower threshold must be positive and finite");
        }
        if (!(upper > lower) || !std::isfinite(upper)) {
            throw ConfigError("m", "lower threshold must be strictly below the upper threshold");
        }
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw ConfigError("alpha", "diffusivity must be positive and finite");
        }
        if (!(horizon > 0.0) || !std::isfinite(horizon)) {
            throw ConfigError("horizon", "horizon must be positive and finite");
        }
        if (!(tie_tolerance >= 0.0) || !(tie_tolerance < 0.5 * (upper - lower))) {
            throw ConfigError("tie_tolerance", "must be non-negative and below half the threshold gap");
        }
    }

    friend bool operator==(const ControlConfig&, const ControlConfig&) = default;
};

// Closed-form mass of u_t = alpha u_xx on [0, 1] with u(x, 0) = 0 and boundary
// flux of magnitude 1: mass grows at +2 alpha while the flux points in and falls
// at -2 alpha while it points out, so every switch after the first is one
// fixed spacing apart.

/// Time between consecutive switches, (M - m) / (2 alpha).
inline double switch_spacing(const ControlConfig& cfg) {
    return (cfg.upper - cfg.lower) / (2.0 * cfg.alpha);
}

/// Exact k-th switching time t_k = (k M - (k - 1) m) / (2 alpha), k >= 1.
inline double exact_switch_time(int k, const ControlConfig& cfg) {
    if (k < 1) {
        throw std::invalid_argument("switch index must be >= 1");
    }
    return (k * cfg.upper - (k - 1) * cfg.lower) / (2.0 * cfg.alpha);
}

/// Exact total mass at time t >= 0. Continuous; equals the threshold at each switch.
inline double exact_mass(double t, const ControlConfig& cfg) {
    if (t < 0.0) {
        throw std::invalid_argument("time must be non-negative");
    }
    const double rate = 2.0 * cfg.alpha;
    const double t1 = cfg.upper / rate;
    if (t <= t1) {
        return rate * t;
    }
    const double spacing = switch_spacing(cfg);
    const double since = t - t1;
    // Phase p = 0 is the first descent from M; even phases descend, odd ascend.
    const auto phase = static_cast<long long>(std::floor(since / spacing));
    const double into = since - static_cast<double>(phase) * spacing;
    if (phase % 2 == 0) {
        return cfg.upper - rate * into;
    }
    return cfg.lower + rate * into;
}

}  // namespace massgate
