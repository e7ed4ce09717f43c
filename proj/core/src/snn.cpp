#include "hexcpg/snn.hpp"

#include <cmath>

#include "hexcpg/errors.hpp"

namespace hexcpg {

void NeuronParams::validate() const {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) {
        throw ValidationError("neuron.alpha must be finite and > 1");
    }
    if (!(v_thresh > 0.0) || !std::isfinite(v_thresh)) {
        throw ValidationError("neuron.v_thresh must be finite and > 0");
    }
    if (refractory_period < 1) {
        throw ValidationError("neuron.refractory_period must be >= 1");
    }
    if (input_period < 1) {
        throw ValidationError("neuron.input_period must be >= 1");
    }
}

NetworkState initial_network_state() {
    NetworkState state;
    state.s_in = true;
    state.s_gyro = false;
    state.time = 0;
    return state;
}

double compute_input_current(const WeightSet& weights, const NetworkState& state,
                             int neuron_index) {
    double current = 0.0;
    if (state.s_in) {
        current += weights.w_in[neuron_index];
    }
    if (state.s_gyro) {
        current += weights.w_gyro[neuron_index];
    }
    for (int j = 0; j < kNumLegs; ++j) {
        if (state.s_cpg_prev[j]) {
            current += weights.w_cpg[neuron_index][j];
        }
    }
    return current;
}

NeuronStepResult step_neuron(const NeuronState& state, double current,
                             const NeuronParams& params) {
    NeuronStepResult result;
    const double v = state.voltage / params.alpha + current;
    if (state.refractory_remaining > 0) {
        result.state.voltage = v;
        result.state.refractory_remaining = state.refractory_remaining - 1;
        result.spiked = false;
    } else if (v > params.v_thresh) {
        result.state.voltage = 0.0;
        result.state.refractory_remaining = params.refractory_period - 1;
        result.spiked = true;
    } else {
        result.state.voltage = v;
        result.state.refractory_remaining = 0;
        result.spiked = false;
    }
    return result;
}

SpikeVector step_network(NetworkState& state, const WeightSet& weights,
                         const NeuronParams& params, bool gyro_fired) {
    const long t = state.time + 1;
    state.s_gyro = gyro_fired;
    state.s_in = (t % params.input_period) == 0;
    state.s_cpg_prev = state.s_cpg_curr;

    SpikeVector fired;
    for (int i = 0; i < kNumLegs; ++i) {
        const double current = compute_input_current(weights, state, i);
        const NeuronStepResult r = step_neuron(state.cpg[i], current, params);
        state.cpg[i] = r.state;
        fired[i] = r.spiked;
    }
    state.s_cpg_curr = fired;
    state.time = t;
    return fired;
}

}  // namespace hexcpg
