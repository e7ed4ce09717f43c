#include "hexcpg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "hexcpg/errors.hpp"

namespace hexcpg {

const char* to_string(GaitClass c) {
    switch (c) {
        case GaitClass::kTripod: return "TRIPOD";
        case GaitClass::kAlternativeGait: return "ALTERNATIVE_GAIT";
        case GaitClass::kNonLocomoting: return "NON_LOCOMOTING";
    }
    return "?";
}

void TrialConfig::validate() const {
    neuron.validate();
    learning.validate();
    reward.validate();
    hexapod.validate();
    if (convergence_window < 2) {
        throw ValidationError("trial.convergence_window must be >= 2");
    }
    if (max_steps < convergence_window) {
        throw ValidationError("trial.max_steps must be >= convergence_window");
    }
    if (!(energy_per_spike_nj >= 0.0) || !std::isfinite(energy_per_spike_nj)) {
        throw ValidationError("trial.energy_per_spike_nj must be finite and >= 0");
    }
}

GaitClass classify_gait(std::span<const SpikeVector> raster_window,
                        std::span<const double> displacement_window) {
    if (raster_window.size() != displacement_window.size() || raster_window.empty()) {
        throw ValidationError("classify_gait: window length mismatch");
    }
    bool tripod = raster_window[0] == kTripodOdd || raster_window[0] == kTripodEven;
    for (std::size_t k = 0; tripod && k < raster_window.size(); ++k) {
        const SpikeVector expected =
            ((k % 2 == 0) == (raster_window[0] == kTripodOdd)) ? kTripodOdd : kTripodEven;
        tripod = raster_window[k] == expected;
    }
    if (tripod) {
        return GaitClass::kTripod;
    }
    const bool locomoting = std::all_of(displacement_window.begin(),
                                        displacement_window.end(),
                                        [](double d) { return d > 0.0; });
    return locomoting ? GaitClass::kAlternativeGait : GaitClass::kNonLocomoting;
}

TrialResult run_trial(const TrialConfig& config) {
    config.validate();

    RngStream rng(config.seed);
    TrialResult result;
    if (config.initial_weights_override.has_value()) {
        result.initial_weights = *config.initial_weights_override;
    } else {
        result.initial_weights = init_weights(rng, config.learning);
    }

    WeightSet weights = result.initial_weights;
    NetworkState state = initial_network_state();

    // The balance verdict depends only on the moved-leg subset; memoize all
    // 2^6 of them up front.
    std::array<bool, 64> lost_table;
    for (std::size_t mask = 0; mask < lost_table.size(); ++mask) {
        lost_table[mask] = evaluate_balance(config.hexapod, SpikeVector(mask));
    }

    bool gyro_fired = false;      // balance verdict of the previous step
    bool prev_s_in = state.s_in;  // input/gyro spikes at t-1, for eligibility
    bool prev_s_gyro = state.s_gyro;

    const int window = config.convergence_window;
    double cumulative_reward = 0.0;
    std::vector<double> window_disps;

    result.raster.reserve(static_cast<std::size_t>(config.max_steps));
    result.steps.reserve(static_cast<std::size_t>(config.max_steps));

    for (long t = 1; t <= config.max_steps; ++t) {
        const SpikeVector fired = step_network(state, weights, config.neuron, gyro_fired);
        const int moved = static_cast<int>(fired.count());

        bool lost = lost_table[fired.to_ulong()];
        if (config.hexapod.balance_flip_prob > 0.0 &&
            rng.uniform01() < config.hexapod.balance_flip_prob) {
            lost = !lost;
        }
        const double displacement = evaluate_motion(config.hexapod, fired, lost);

        const int g = gyro_reward(lost, moved, config.reward);
        const double v = visual_reward(displacement, config.reward);
        const double r = total_reward(g, v, t, config.reward);

        const int updates =
            update_weights(weights, fired, state.s_cpg_prev, prev_s_in, prev_s_gyro,
                           r, rng, config.learning);

        StepOutcome outcome;
        outcome.legs_moved = fired;
        outcome.balance_lost = lost;
        outcome.displacement = displacement;
        outcome.gyro_reward = g;
        outcome.visual_reward = v;
        outcome.total_reward = r;
        outcome.spike_count = moved;
        outcome.weight_updates = updates;

        result.total_spikes += moved;
        cumulative_reward += r;
        result.cumulative_reward_curve.push_back(cumulative_reward);
        result.legs_moved_curve.push_back(moved);
        result.raster.push_back(fired);
        result.steps.push_back(outcome);

        prev_s_in = state.s_in;
        prev_s_gyro = state.s_gyro;
        gyro_fired = lost;

        if (t >= window) {
            const std::size_t begin = result.steps.size() - window;
            window_disps.resize(static_cast<std::size_t>(window));
            for (int k = 0; k < window; ++k) {
                window_disps[static_cast<std::size_t>(k)] =
                    result.steps[begin + k].displacement;
            }
            const GaitClass cls = classify_gait(
                std::span<const SpikeVector>(result.raster.data() + begin, window),
                window_disps);
            if (cls != GaitClass::kNonLocomoting) {
                result.classification = cls;
                result.convergence_step = t - window + 1;
                break;
            }
        }
    }

    if (!result.convergence_step.has_value()) {
        result.classification = GaitClass::kNonLocomoting;
    }
    result.final_weights = weights;
    result.energy_nj = estimate_energy(result.total_spikes, config.energy_per_spike_nj);
    return result;
}

namespace {

/// Quartiles by linear interpolation between closest ranks over a sorted
/// sample (the same convention as numpy's default).
double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double pos = q * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

RateStats aggregate_rate(double rate, std::span<const SweepTrialRow> rows) {
    RateStats stats;
    stats.rate = rate;
    stats.trials = static_cast<int>(rows.size());
    std::vector<double> convs;
    for (const SweepTrialRow& row : rows) {
        switch (row.classification) {
            case GaitClass::kTripod:
                ++stats.tripod;
                convs.push_back(static_cast<double>(*row.convergence_step));
                break;
            case GaitClass::kAlternativeGait:
                ++stats.alternative;
                break;
            case GaitClass::kNonLocomoting:
                ++stats.non_locomoting;
                break;
        }
    }
    stats.fraction_tripod = stats.trials ? static_cast<double>(stats.tripod) / stats.trials : 0.0;
    stats.fraction_alternative =
        stats.trials ? static_cast<double>(stats.alternative) / stats.trials : 0.0;
    std::sort(convs.begin(), convs.end());
    stats.conv_min = quantile_sorted(convs, 0.0);
    stats.conv_q1 = quantile_sorted(convs, 0.25);
    stats.conv_median = quantile_sorted(convs, 0.5);
    stats.conv_q3 = quantile_sorted(convs, 0.75);
    stats.conv_max = quantile_sorted(convs, 1.0);
    return stats;
}

}  // namespace

SweepReport run_sweep(const std::vector<double>& rates, int trials_per_rate,
                      const TrialConfig& base, int workers) {
    if (rates.empty()) {
        throw ValidationError("run_sweep: rates must be non-empty");
    }
    if (trials_per_rate < 1) {
        throw ValidationError("run_sweep: trials_per_rate must be >= 1");
    }
    base.validate();

    SweepReport report;
    report.learning_rates = rates;
    report.trials_per_rate = trials_per_rate;

    const std::size_t total = rates.size() * static_cast<std::size_t>(trials_per_rate);
    report.trials.resize(total);

    const auto run_one = [&](std::size_t index) {
        const std::size_t rate_idx = index / trials_per_rate;
        const std::size_t k = index % trials_per_rate;
        TrialConfig config = base;
        config.learning.theta = rates[rate_idx];
        config.seed = base.seed + k;
        const TrialResult tr = run_trial(config);
        SweepTrialRow& row = report.trials[index];
        row.rate = rates[rate_idx];
        row.seed = config.seed;
        row.classification = tr.classification;
        row.convergence_step = tr.convergence_step;
        row.total_spikes = tr.total_spikes;
    };

    const int pool = std::max(1, workers);
    if (pool == 1) {
        for (std::size_t i = 0; i < total; ++i) {
            run_one(i);
        }
    } else {
        // Results land in preassigned slots keyed by (rate, seed), so the
        // report is independent of scheduling.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(pool));
        for (int w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
        for (std::thread& th : threads) {
            th.join();
        }
    }

    for (std::size_t r = 0; r < rates.size(); ++r) {
        report.per_rate.push_back(aggregate_rate(
            rates[r],
            std::span<const SweepTrialRow>(report.trials.data() + r * trials_per_rate,
                                           static_cast<std::size_t>(trials_per_rate))));
    }
    return report;
}

double estimate_energy(long total_spikes, double energy_per_spike_nj) {
    return static_cast<double>(total_spikes) * energy_per_spike_nj;
}

GroupMeans tripod_weight_structure(const WeightSet& weights) {
    GroupMeans means;
    double cross_sum = 0.0;
    double intra_sum = 0.0;
    int cross_n = 0;
    int intra_n = 0;
    for (int i = 0; i < kNumLegs; ++i) {
        for (int j = 0; j < kNumLegs; ++j) {
            if (i == j) {
                continue;
            }
            const bool same_group = (i % 2) == (j % 2);
            if (same_group) {
                intra_sum += weights.w_cpg[i][j];
                ++intra_n;
            } else {
                cross_sum += weights.w_cpg[i][j];
                ++cross_n;
            }
        }
    }
    means.cross_group_mean = cross_sum / cross_n;
    means.intra_group_mean = intra_sum / intra_n;
    return means;
}

}  // namespace hexcpg
