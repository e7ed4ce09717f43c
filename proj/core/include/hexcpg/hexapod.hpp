#pragma once

#include <array>

#include "hexcpg/types.hpp"

namespace hexcpg {

/// Planar stand-in for the physical robot. Balance is static stability:
/// the body stays up iff the center of mass lies inside the support polygon
/// of the stance feet with at least stability_margin to spare.
struct HexapodModel {
    std::array<Vec2, kNumLegs> foot_positions{};
    Vec2 com{0.0, 0.0};
    double stability_margin = 0.05;
    double step_displacement = 1.0;
    /// Probability that a step's balance verdict is read inverted
    /// (sensor-noise knob; 0 disables the draw entirely).
    double balance_flip_prob = 0.0;

    void validate() const;  // throws ValidationError
};

/// Feet on a regular hexagon of circumradius 1 around the COM, numbered so
/// that {1,3,5} and {2,4,6} are the two alternating tripods.
HexapodModel canonical_hexapod();

/// True iff lifting legs_moved loses balance: the convex hull of the
/// remaining stance feet fails to contain the COM with the configured
/// margin. Lifting four or more legs always loses balance.
bool evaluate_balance(const HexapodModel& model, SpikeVector legs_moved);

/// Forward displacement of one step: zero when balance was lost (the moved
/// legs are taken back) or nothing moved, otherwise proportional progress
/// normalized so a full tripod step yields step_displacement.
double evaluate_motion(const HexapodModel& model, SpikeVector legs_moved,
                       bool balance_lost);

/// Everything observed and rewarded in one time step.
struct StepOutcome {
    SpikeVector legs_moved;
    bool balance_lost = false;
    double displacement = 0.0;
    int gyro_reward = 0;
    double visual_reward = 0.0;
    double total_reward = 0.0;
    int spike_count = 0;
    int weight_updates = 0;
};

}  // namespace hexcpg
