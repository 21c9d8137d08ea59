#pragma once

#include <cstddef>
#include <vector>

#include "massgate/errors.hpp"

namespace massgate {

/// Bang-bang boundary flux. Inflow raises the total mass, outflow lowers it.
enum class FluxSign : int { Inflow = 1, Outflow = -1 };

constexpr double value(FluxSign s) noexcept { return static_cast<double>(static_cast<int>(s)); }

constexpr FluxSign flipped(FluxSign s) noexcept {
    return s == FluxSign::Inflow ? FluxSign::Outflow : FluxSign::Inflow;
}

/// Uniform discretization of [0, 1] x [0, T]: J cells of width dx = 1/J, time step dt.
struct GridSpec {
    int cells = 50;  // J
    int steps = 200;  // N, used by fixed-grid runs
    double dx = 1.0 / 50;
    double dt = 0.05;

    /// Fixed grid with dt = horizon / steps.
    static GridSpec uniform(int cells, int steps, double horizon) {
        if (cells < 2) throw ConfigError("J", "need at least 2 spatial cells");
        if (steps < 1) throw ConfigError("N", "need at least 1 time step");
        if (!(horizon > 0.0)) throw ConfigError("horizon", "horizon must be positive");
        return GridSpec{cells, steps, 1.0 / cells, horizon / steps};
    }

    /// Same spatial grid, different time step (used by the adaptive stages).
    GridSpec with_dt(double new_dt) const {
        GridSpec g = *this;
        g.dt = new_dt;
        return g;
    }

    std::size_t nodes() const noexcept { return static_cast<std::size_t>(cells) + 1; }
    double x(int j) const noexcept { return j * dx; }

    void validate() const {
        if (cells < 2) throw ConfigError("J", "need at least 2 spatial cells");
        if (steps < 1) throw ConfigError("N", "need at least 1 time step");
        if (!(dt > 0.0)) throw ConfigError("N", "time step must be positive");
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Concentration U_0..U_J at one time level.
struct FieldState {
    std::vector<double> values;
    double time = 0.0;

    static FieldState zero(const GridSpec& grid) { return FieldState{std::vector<double>(grid.nodes(), 0.0), 0.0}; }

    friend bool operator==(const FieldState&, const FieldState&) = default;
};

}  // namespace massgate
