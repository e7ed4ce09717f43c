#pragma once

#include <array>
#include <cstdint>

#include "hexcpg/types.hpp"

namespace hexcpg {

/// Discrete LIF parameters. The membrane update is V[t+1] = V[t]/alpha + I,
/// a spike is issued on V > v_thresh and the voltage resets to zero.
struct NeuronParams {
    double alpha = 2.0;        // leak divisor, > 1
    double v_thresh = 1.0;     // spiking threshold, > 0
    int refractory_period = 2; // minimum inter-spike interval in steps
    int input_period = 1;      // input neuron fires every input_period steps

    void validate() const;  // throws ValidationError
};

struct NeuronState {
    double voltage = 0.0;
    int refractory_remaining = 0;
};

/// The three learned synaptic blocks. w_cpg[i][j] is the synapse from CPG
/// neuron j onto CPG neuron i; the diagonal is identically zero.
struct WeightSet {
    std::array<double, kNumLegs> w_in{};
    std::array<double, kNumLegs> w_gyro{};
    std::array<std::array<double, kNumLegs>, kNumLegs> w_cpg{};

    bool operator==(const WeightSet&) const = default;
};

/// Full network state between steps. s_cpg_prev holds the CPG spikes of
/// step t-1 (the ones driving current at step t), s_cpg_curr those of step t.
struct NetworkState {
    std::array<NeuronState, kNumLegs> cpg{};
    SpikeVector s_cpg_prev;
    SpikeVector s_cpg_curr;
    bool s_in = true;
    bool s_gyro = false;
    long time = 0;
};

/// State at time 0: all voltages zero, no CPG spikes, input spike set,
/// gyro silent.
NetworkState initial_network_state();

/// Injected current for one CPG neuron: each synapse contributes exactly
/// its weight when the pre-neuron spiked, zero otherwise. CPG recurrence
/// reads the previous step's spike vector.
double compute_input_current(const WeightSet& weights, const NetworkState& state,
                             int neuron_index);

struct NeuronStepResult {
    NeuronState state;
    bool spiked = false;
};

/// One membrane update. While refractory the voltage still integrates but
/// no spike can be issued; on a spike the voltage resets to zero and the
/// neuron is blocked for refractory_period - 1 further steps, giving a
/// minimum inter-spike interval of refractory_period.
NeuronStepResult step_neuron(const NeuronState& state, double current,
                             const NeuronParams& params);

/// Advance the whole network one step. gyro_fired reports whether balance
/// was lost on the previous step. Returns the new spike vector; each set
/// bit commands one leg to swing.
SpikeVector step_network(NetworkState& state, const WeightSet& weights,
                         const NeuronParams& params, bool gyro_fired);

}  // namespace hexcpg
