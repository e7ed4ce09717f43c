#include "hexcpg/plasticity.hpp"

#include <algorithm>
#include <cmath>

#include "hexcpg/errors.hpp"

namespace hexcpg {

void LearningParams::validate() const {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
        throw ValidationError("learning.theta must be finite and > 0");
    }
    if (!(w_min < w_max) || !std::isfinite(w_min) || !std::isfinite(w_max)) {
        throw ValidationError("learning.w_min must be < learning.w_max, both finite");
    }
    if (!(init_low <= init_high)) {
        throw ValidationError("learning.init_low must be <= learning.init_high");
    }
    if (init_low < w_min || init_high > w_max) {
        throw ValidationError("learning init range must lie within [w_min, w_max]");
    }
}

WeightSet init_weights(RngStream& rng, const LearningParams& params) {
    WeightSet w;
    for (int i = 0; i < kNumLegs; ++i) {
        w.w_in[i] = rng.uniform(params.init_low, params.init_high);
    }
    for (int i = 0; i < kNumLegs; ++i) {
        w.w_gyro[i] = rng.uniform(params.init_low, params.init_high);
    }
    for (int i = 0; i < kNumLegs; ++i) {
        for (int j = 0; j < kNumLegs; ++j) {
            w.w_cpg[i][j] = (i == j) ? 0.0 : rng.uniform(params.init_low, params.init_high);
        }
    }
    return w;
}

int update_weights(WeightSet& weights, SpikeVector s_post, SpikeVector s_pre_cpg,
                   bool s_in_prev, bool s_gyro_prev, double reward_total,
                   RngStream& rng, const LearningParams& params) {
    const auto bump = [&](double w) {
        const double eta = rng.uniform01();
        return std::clamp(w + params.theta * eta * reward_total, params.w_min,
                          params.w_max);
    };
    int updates = 0;
    for (int i = 0; i < kNumLegs; ++i) {
        if (!s_post[i]) {
            continue;
        }
        if (s_in_prev) {
            weights.w_in[i] = bump(weights.w_in[i]);
            ++updates;
        }
        if (s_gyro_prev) {
            weights.w_gyro[i] = bump(weights.w_gyro[i]);
            ++updates;
        }
        for (int j = 0; j < kNumLegs; ++j) {
            if (j == i || !s_pre_cpg[j]) {
                continue;  // no self-synapse; pre must have fired at t-1
            }
            weights.w_cpg[i][j] = bump(weights.w_cpg[i][j]);
            ++updates;
        }
    }
    return updates;
}

}  // namespace hexcpg
