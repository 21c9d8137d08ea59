#pragma once

#include <stdexcept>
#include <vector>

#include "massgate/field.hpp"
#include "massgate/oracle.hpp"

namespace massgate {

enum class Crossing { ReachedUpper, ReachedLower };

/// One detected threshold crossing, T_k in the numeric run.
struct SwitchEvent {
    int index = 0;
    double time = 0.0;
    double mass_at_switch = 0.0;
    Crossing direction = Crossing::ReachedUpper;

    friend bool operator==(const SwitchEvent&, const SwitchEvent&) = default;
};

/// Hysteresis relay on the total mass.
///
/// Starts with inflow. Inflow is held until mass >= M, outflow until mass <= m;
/// comparisons are inclusive up to cfg.tie_tolerance. A crossing observed after
/// step n changes the flux used from step n+1 on.
class SwitchController {
public:
    SwitchController() = default;

    /// Feed the mass observed at `time`; returns the flux for the next step.
    FluxSign observe(double mass, double time, const ControlConfig& cfg) {
        if (!events_.empty() ? !(time > events_.back().time) : time < 0.0) {
            throw std::invalid_argument("observations must advance in time");
        }
        if (phase_ == FluxSign::Inflow && mass >= cfg.upper - cfg.tie_tolerance) {
            record(mass, time, Crossing::ReachedUpper);
        } else if (phase_ == FluxSign::Outflow && mass <= cfg.lower + cfg.tie_tolerance) {
            record(mass, time, Crossing::ReachedLower);
        }
        return phase_;
    }

    FluxSign phase() const noexcept { return phase_; }
    int next_index() const noexcept { return static_cast<int>(events_.size()) + 1; }
    const std::vector<SwitchEvent>& events() const noexcept { return events_; }

    friend bool operator==(const SwitchController&, const SwitchController&) = default;

private:
    void record(double mass, double time, Crossing direction) {
        events_.push_back(SwitchEvent{next_index(), time, mass, direction});
        phase_ = flipped(phase_);
    }

    FluxSign phase_ = FluxSign::Inflow;
    std::vector<SwitchEvent> events_;
};

}  // namespace massgate
