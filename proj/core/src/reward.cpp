#include "hexcpg/reward.hpp"

#include <cmath>

#include "hexcpg/errors.hpp"

namespace hexcpg {

void RewardParams::validate() const {
    if (!(r_balanced > r_undershoot && r_undershoot > 0 && 0 > r_overshoot)) {
        throw ValidationError(
            "reward levels must satisfy r_balanced > r_undershoot > 0 > r_overshoot");
    }
    if (t1 <= 0) {
        throw ValidationError("reward.t1 must be > 0");
    }
    if (!std::isfinite(v_forward) || !std::isfinite(v_still)) {
        throw ValidationError("reward.v_forward / v_still must be finite");
    }
    if (ramp_cap < 0.0 || !std::isfinite(ramp_cap)) {
        throw ValidationError("reward.ramp_cap must be finite and >= 0");
    }
}

int gyro_reward(bool balance_lost, int num_legs_moved, const RewardParams& params) {
    if (!balance_lost) {
        return params.r_balanced;
    }
    if (num_legs_moved > 3) {
        return params.r_overshoot;
    }
    if (num_legs_moved < 3) {
        return params.r_undershoot;
    }
    return params.r_exactly3_lost;
}

double visual_reward(double displacement, const RewardParams& params) {
    return displacement > 0.0 ? params.v_forward : params.v_still;
}

double total_reward(int gyro_r, double visual_r, long t, const RewardParams& params) {
    double ramp = static_cast<double>(t) / params.t1;
    if (params.ramp_cap > 0.0 && ramp > params.ramp_cap) {
        ramp = params.ramp_cap;
    }
    return gyro_r + visual_r * ramp;
}

}  // namespace hexcpg
