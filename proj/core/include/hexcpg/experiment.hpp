#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hexcpg/hexapod.hpp"
#include "hexcpg/plasticity.hpp"
#include "hexcpg/reward.hpp"
#include "hexcpg/snn.hpp"

namespace hexcpg {

enum class GaitClass {
    kTripod,
    kAlternativeGait,
    kNonLocomoting,
};

const char* to_string(GaitClass c);

struct TrialConfig {
    long max_steps = 1000;
    std::uint64_t seed = 0;
    int convergence_window = 10;
    double energy_per_spike_nj = 1.7;
    NeuronParams neuron;
    LearningParams learning;
    RewardParams reward;
    HexapodModel hexapod;
    /// Library-level hook: start from these weights instead of drawing them
    /// from the seed. Not part of the config file or replay format.
    std::optional<WeightSet> initial_weights_override;

    void validate() const;  // throws ValidationError, no silent defaults
};

struct TrialResult {
    GaitClass classification = GaitClass::kNonLocomoting;
    std::optional<long> convergence_step;  // first step of the sustained window
    long total_spikes = 0;
    double energy_nj = 0.0;
    std::vector<double> cumulative_reward_curve;
    std::vector<int> legs_moved_curve;
    WeightSet initial_weights;
    WeightSet final_weights;
    std::vector<SpikeVector> raster;
    std::vector<StepOutcome> steps;
};

/// Classify one window of the trajectory. TRIPOD iff the spike sets
/// alternate exactly {1,3,5} and {2,4,6} (either phase first) over the whole
/// window; ALTERNATIVE_GAIT iff not tripod but every step displaced;
/// NON_LOCOMOTING otherwise. Throws ValidationError on a window-length
/// mismatch.
GaitClass classify_gait(std::span<const SpikeVector> raster_window,
                        std::span<const double> displacement_window);

/// The full learning loop against the simulated environment: network step,
/// balance and motion oracles, reward, weight update, per-step recording.
/// Stops early once the trailing convergence_window classifies TRIPOD or
/// ALTERNATIVE_GAIT; otherwise runs to max_steps and classifies the tail.
TrialResult run_trial(const TrialConfig& config);

struct SweepTrialRow {
    double rate = 0.0;
    std::uint64_t seed = 0;
    GaitClass classification = GaitClass::kNonLocomoting;
    std::optional<long> convergence_step;
    long total_spikes = 0;
};

struct RateStats {
    double rate = 0.0;
    int trials = 0;
    int tripod = 0;
    int alternative = 0;
    int non_locomoting = 0;
    double fraction_tripod = 0.0;
    double fraction_alternative = 0.0;
    // Convergence-step distribution over TRIPOD trials only (NaN when none).
    double conv_min = 0.0;
    double conv_q1 = 0.0;
    double conv_median = 0.0;
    double conv_q3 = 0.0;
    double conv_max = 0.0;
};

struct SweepReport {
    std::vector<double> learning_rates;
    int trials_per_rate = 0;
    std::vector<SweepTrialRow> trials;    // rate-major, seed-ascending
    std::vector<RateStats> per_rate;
};

/// Run trials_per_rate trials per learning rate with consecutive seeds
/// base.seed .. base.seed + trials_per_rate - 1. Trials may execute on a
/// worker pool; the report is identical to sequential execution.
SweepReport run_sweep(const std::vector<double>& rates, int trials_per_rate,
                      const TrialConfig& base, int workers = 1);

/// Spike count to energy, nanojoules.
double estimate_energy(long total_spikes, double energy_per_spike_nj = 1.7);

struct GroupMeans {
    double cross_group_mean = 0.0;
    double intra_group_mean = 0.0;
};

/// Mean CPG weight between the two tripod groups vs within them; a
/// converged tripod shows cross > intra.
GroupMeans tripod_weight_structure(const WeightSet& weights);

}  // namespace hexcpg
