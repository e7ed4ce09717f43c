#pragma once

#include "hexcpg/rng.hpp"
#include "hexcpg/snn.hpp"

namespace hexcpg {

struct LearningParams {
    double theta = 0.1;      // learning rate
    double w_min = -2.0;     // clamp bounds for every weight
    double w_max = 2.0;
    double init_low = 0.0;   // uniform initialization range [init_low, init_high)
    double init_high = 1.0;

    void validate() const;  // throws ValidationError
};

/// Draw a fresh WeightSet: w_in, w_gyro and the off-diagonal of w_cpg are
/// independent uniform[init_low, init_high) samples; the diagonal stays 0.
/// Draw order: w_in[0..5], w_gyro[0..5], then w_cpg row-major skipping the
/// diagonal (42 draws total).
WeightSet init_weights(RngStream& rng, const LearningParams& params);

/// Reward-modulated stochastic update. A synapse is eligible when its
/// post-neuron fired at t and its pre-source fired at t-1; the input and
/// gyro neurons are eligible pre-sources alongside the CPG peers. Every
/// eligible weight moves by theta * eta * reward_total with a fresh
/// eta ~ uniform[0,1) per synapse, then clamps to [w_min, w_max]. All other
/// weights are untouched. Returns the number of updated synapses.
///
/// Draw order: post-neurons in ascending index; per post-neuron the input
/// synapse, then the gyro synapse, then CPG pre-neurons in ascending index.
int update_weights(WeightSet& weights, SpikeVector s_post, SpikeVector s_pre_cpg,
                   bool s_in_prev, bool s_gyro_prev, double reward_total,
                   RngStream& rng, const LearningParams& params);

}  // namespace hexcpg
