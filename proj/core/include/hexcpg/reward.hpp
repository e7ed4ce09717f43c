#pragma once

namespace hexcpg {

/// Reward levels and ramp horizon. The gyro levels keep the ordering
/// r_balanced > r_undershoot > 0 > r_overshoot; r_exactly3_lost covers the
/// case the three-way partition leaves open (balance lost with exactly
/// three legs moved).
struct RewardParams {
    int r_overshoot = -2;
    int r_undershoot = 2;
    int r_balanced = 5;
    int r_exactly3_lost = 0;
    double v_forward = 1.0;
    double v_still = -1.0;
    int t1 = 200;          // ramp horizon of the visual term
    double ramp_cap = 0.0; // ceiling on t/t1; 0 means uncapped

    void validate() const;  // throws ValidationError
};

/// Three-way gyro reward: balance kept pays r_balanced regardless of leg
/// count; losing balance pays by how far the moved-leg count is from three.
int gyro_reward(bool balance_lost, int num_legs_moved, const RewardParams& params);

/// Binary visual reward: v_forward for any positive displacement, v_still
/// otherwise.
double visual_reward(double displacement, const RewardParams& params);

/// Total reward at step t: gyro_r + visual_r * (t / t1). The ratio is a
/// real quotient; with ramp_cap > 0 it saturates at ramp_cap, otherwise the
/// ramp keeps steepening past t1.
double total_reward(int gyro_r, double visual_r, long t, const RewardParams& params);

}  // namespace hexcpg
