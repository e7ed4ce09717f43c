#include <iostream>

#include <doctest.h>

#include <cmath>
#include <vector>

#include "hexcpg/errors.hpp"
#include "hexcpg/plasticity.hpp"
#include "hexcpg/rng.hpp"
#include "hexcpg/snn.hpp"

using namespace hexcpg;

TEST_CASE("compute_input_current sums exactly the active synapses") {
    WeightSet w;
    NetworkState state = initial_network_state();

    SUBCASE("single active input synapse") {
        w.w_in[3] = 0.7;
        state.s_in = true;
        CHECK(compute_input_current(w, state, 3) == 0.7);
    }
    SUBCASE("no presynaptic activity") {
        state.s_in = false;
        CHECK(compute_input_current(w, state, 0) == 0.0);
    }
    SUBCASE("input + gyro + one recurrent spike") {
        w.w_in[1] = 0.5;
        w.w_gyro[1] = 0.3;
        w.w_cpg[1][2] = 0.4;
        state.s_in = true;
        state.s_gyro = true;
        state.s_cpg_prev[2] = true;
        CHECK(compute_input_current(w, state, 1) == doctest::Approx(1.2).epsilon(1e-15));
    }
    SUBCASE("linearity: doubling one active weight doubles its contribution") {
        w.w_in[0] = 0.25;
        w.w_cpg[0][4] = 0.5;
        state.s_in = true;
        state.s_cpg_prev[4] = true;
        const double before = compute_input_current(w, state, 0);
        w.w_cpg[0][4] = 1.0;
        const double after = compute_input_current(w, state, 0);
        CHECK(after - before == doctest::Approx(0.5).epsilon(1e-15));
    }
}

TEST_CASE("step_neuron follows the discrete membrane equation") {
    NeuronParams params;  // alpha 2, v_thresh 1, refractory 2

    SUBCASE("sub-threshold integration") {
        params.v_thresh = 10.0;
        NeuronState s{4.0, 0};
        const auto r = step_neuron(s, 1.0, params);
        CHECK(r.state.voltage == 3.0);
        CHECK_FALSE(r.spiked);
    }
    SUBCASE("rest is a fixed point") {
        NeuronState s{0.0, 0};
        const auto r = step_neuron(s, 0.0, params);
        CHECK(r.state.voltage == 0.0);
        CHECK_FALSE(r.spiked);
    }
    SUBCASE("threshold crossing spikes and resets") {
        params.v_thresh = 10.0;
        NeuronState s{9.0, 0};
        const auto r = step_neuron(s, 6.0, params);  // v' = 10.5 > 10
        CHECK(r.spiked);
        CHECK(r.state.voltage == 0.0);
        CHECK(r.state.refractory_remaining == params.refractory_period - 1);
    }
    SUBCASE("strict inequality at the threshold") {
        NeuronState s{0.0, 0};
        const auto r = step_neuron(s, params.v_thresh, params);  // v' == v_thresh
        CHECK_FALSE(r.spiked);
    }
    SUBCASE("refractory blocks the spike but the voltage still integrates") {
        NeuronState s{0.8, 1};
        const auto r = step_neuron(s, 100.0, params);
        CHECK_FALSE(r.spiked);
        CHECK(r.state.voltage == doctest::Approx(100.4));
        CHECK(r.state.refractory_remaining == 0);
    }
}

TEST_CASE("zero-input leak decay is geometric") {
    RngStream rng(12345);
    NeuronParams params;
    params.v_thresh = 1e18;  // never spike
    for (int trial = 0; trial < 1000; ++trial) {
        const double v0 = rng.uniform(-10.0, 10.0);
        const double alpha = rng.uniform(1.1, 5.0);
        params.alpha = alpha;
        NeuronState s{v0, 0};
        const int k = 1 + static_cast<int>(rng.next_u64() % 12);
        for (int step = 0; step < k; ++step) {
            s = step_neuron(s, 0.0, params).state;
        }
        const double expected = v0 / std::pow(alpha, k);
        CHECK(std::abs(s.voltage - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

namespace {

/// Weights that realize the alternating tripod: each group drives the other
/// above threshold, nothing else.
WeightSet tripod_attractor_weights() {
    WeightSet w;
    for (int i = 0; i < kNumLegs; ++i) {
        for (int j = 0; j < kNumLegs; ++j) {
            if (i != j && (i % 2) != (j % 2)) {
                w.w_cpg[i][j] = 1.0;  // cross-group drive: 3 per neuron
            }
        }
    }
    // group {1,3,5} needs a kick at the first step to break symmetry
    w.w_in[0] = w.w_in[2] = w.w_in[4] = 1.5;
    return w;
}

}  // namespace

TEST_CASE("step_network produces a sustained alternating tripod raster") {
    const WeightSet w = tripod_attractor_weights();
    NeuronParams params;
    NetworkState state = initial_network_state();

    std::vector<SpikeVector> raster;
    for (int t = 1; t <= 40; ++t) {
        raster.push_back(step_network(state, w, params, false));
    }
    CHECK(raster[0] == kTripodOdd);
    for (std::size_t t = 1; t < raster.size(); ++t) {
        CHECK(raster[t] == (t % 2 ? kTripodEven : kTripodOdd));
    }
}

TEST_CASE("sub-threshold weights produce no spikes") {
    WeightSet w;
    for (int i = 0; i < kNumLegs; ++i) {
        w.w_in[i] = 0.4;  // geometric limit 0.8 < threshold
    }
    NeuronParams params;
    NetworkState state = initial_network_state();
    for (int t = 1; t <= 50; ++t) {
        CHECK(step_network(state, w, params, false).none());
    }
}

TEST_CASE("refractory exclusion: no inter-spike interval below 2") {
    RngStream rng(777);
    NeuronParams params;
    for (int trial = 0; trial < 50; ++trial) {
        WeightSet w;
        LearningParams lp;
        w = init_weights(rng, lp);
        NetworkState state = initial_network_state();
        SpikeVector prev;
        for (int t = 1; t <= 200; ++t) {
            const SpikeVector fired =
                step_network(state, w, params, (rng.next_u64() & 1) != 0);
            CHECK((fired & prev).none());
            prev = fired;
        }
    }
}

TEST_CASE("step_network is a pure function of its inputs") {
    RngStream rng(42);
    LearningParams lp;
    const WeightSet w = init_weights(rng, lp);
    NeuronParams params;

    std::vector<bool> gyro_inputs;
    for (int t = 0; t < 300; ++t) {
        gyro_inputs.push_back((rng.next_u64() & 1) != 0);
    }

    std::vector<SpikeVector> first, second;
    for (int repeat = 0; repeat < 2; ++repeat) {
        NetworkState state = initial_network_state();
        for (bool g : gyro_inputs) {
            (repeat == 0 ? first : second).push_back(step_network(state, w, params, g));
        }
    }
    CHECK(first == second);
}

TEST_CASE("spiked always implies reset voltage") {
    RngStream rng(99);
    NeuronParams params;
    for (int i = 0; i < 2000; ++i) {
        NeuronState s{rng.uniform(-2.0, 2.0), 0};
        const auto r = step_neuron(s, rng.uniform(-1.0, 3.0), params);
        if (r.spiked) {
            CHECK(r.state.voltage == 0.0);
        }
    }
}

TEST_CASE("neuron params validation") {
    NeuronParams p;
    p.alpha = 1.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = NeuronParams{};
    p.v_thresh = 0.0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p = NeuronParams{};
    p.refractory_period = 0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}
