#include <iostream>

#include <doctest.h>

#include <cmath>
#include <vector>

#include "hexcpg/errors.hpp"
#include "hexcpg/experiment.hpp"

using namespace hexcpg;

namespace {

TrialConfig default_trial(std::uint64_t seed) {
    TrialConfig cfg;
    cfg.seed = seed;
    cfg.hexapod = canonical_hexapod();
    return cfg;
}

WeightSet tripod_attractor_weights() {
    WeightSet w;
    for (int i = 0; i < kNumLegs; ++i) {
        for (int j = 0; j < kNumLegs; ++j) {
            if (i != j && (i % 2) != (j % 2)) {
                w.w_cpg[i][j] = 1.0;
            }
        }
    }
    w.w_in[0] = w.w_in[2] = w.w_in[4] = 1.5;
    return w;
}

}  // namespace

TEST_CASE("classify_gait") {
    const int window = 10;
    std::vector<SpikeVector> raster;
    std::vector<double> disps;

    SUBCASE("perfect tripod alternation, either phase first") {
        for (int phase = 0; phase < 2; ++phase) {
            raster.clear();
            disps.clear();
            for (int k = 0; k < window; ++k) {
                raster.push_back((k % 2 == phase) ? kTripodOdd : kTripodEven);
                disps.push_back(1.0);
            }
            CHECK(classify_gait(raster, disps) == GaitClass::kTripod);
        }
    }
    SUBCASE("same stable triple every step locomotes but is not tripod") {
        SpikeVector triple;
        triple[0] = triple[2] = triple[4] = true;
        for (int k = 0; k < window; ++k) {
            raster.push_back(triple);  // no alternation
            disps.push_back(1.0);
        }
        CHECK(classify_gait(raster, disps) == GaitClass::kAlternativeGait);
    }
    SUBCASE("all-zero window does not locomote") {
        for (int k = 0; k < window; ++k) {
            raster.push_back(SpikeVector{});
            disps.push_back(0.0);
        }
        CHECK(classify_gait(raster, disps) == GaitClass::kNonLocomoting);
    }
    SUBCASE("one still step spoils an otherwise locomoting window") {
        SpikeVector pair;
        pair[0] = pair[2] = true;
        for (int k = 0; k < window; ++k) {
            raster.push_back(pair);
            disps.push_back(k == 4 ? 0.0 : 0.5);
        }
        CHECK(classify_gait(raster, disps) == GaitClass::kNonLocomoting);
    }
    SUBCASE("a broken alternation is not tripod") {
        for (int k = 0; k < window; ++k) {
            raster.push_back(k % 2 ? kTripodEven : kTripodOdd);
            disps.push_back(1.0);
        }
        raster[5] = raster[4];  // repeat one phase
        CHECK(classify_gait(raster, disps) != GaitClass::kTripod);
    }
    SUBCASE("window length mismatch is an error") {
        raster.assign(10, kTripodOdd);
        disps.assign(9, 1.0);
        CHECK_THROWS_AS((void)classify_gait(raster, disps), ValidationError);
        CHECK_THROWS_AS(
            (void)classify_gait(std::vector<SpikeVector>{}, std::vector<double>{}),
            ValidationError);
    }
    SUBCASE("every window maps to exactly one class") {
        RngStream rng(8);
        for (int round = 0; round < 300; ++round) {
            raster.clear();
            disps.clear();
            for (int k = 0; k < window; ++k) {
                raster.push_back(SpikeVector(rng.next_u64() & 0x3F));
                disps.push_back(rng.uniform01() < 0.4 ? 0.0 : rng.uniform01());
            }
            const GaitClass c = classify_gait(raster, disps);
            CHECK((c == GaitClass::kTripod || c == GaitClass::kAlternativeGait ||
                   c == GaitClass::kNonLocomoting));
        }
    }
}

TEST_CASE("run_trial on a hand-built tripod attractor with learning off") {
    TrialConfig cfg = default_trial(1);
    cfg.initial_weights_override = tripod_attractor_weights();
    cfg.learning.theta = 1e-12;  // effectively frozen, theta must stay positive

    const TrialResult r = run_trial(cfg);
    CHECK(r.classification == GaitClass::kTripod);
    REQUIRE(r.convergence_step.has_value());
    CHECK(*r.convergence_step <= cfg.convergence_window);
    CHECK(*r.convergence_step == 1);
}

TEST_CASE("run_trial on a dead network") {
    TrialConfig cfg = default_trial(2);
    cfg.initial_weights_override = WeightSet{};  // all zeros
    cfg.learning.theta = 1e-12;

    const TrialResult r = run_trial(cfg);
    CHECK(r.classification == GaitClass::kNonLocomoting);
    CHECK_FALSE(r.convergence_step.has_value());
    CHECK(r.total_spikes == 0);
    CHECK(r.energy_nj == 0.0);
    CHECK(static_cast<long>(r.steps.size()) == cfg.max_steps);
}

TEST_CASE("run_trial accounting invariants") {
    TrialConfig cfg = default_trial(11);
    const TrialResult r = run_trial(cfg);

    long spikes = 0;
    double cumulative = 0.0;
    REQUIRE(r.raster.size() == r.steps.size());
    REQUIRE(r.cumulative_reward_curve.size() == r.steps.size());
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
        spikes += static_cast<long>(r.raster[k].count());
        CHECK(r.steps[k].spike_count == static_cast<int>(r.raster[k].count()));
        CHECK(r.legs_moved_curve[k] == r.steps[k].spike_count);
        cumulative += r.steps[k].total_reward;
        CHECK(r.cumulative_reward_curve[k] == doctest::Approx(cumulative).epsilon(1e-12));
        if (r.steps[k].balance_lost) {
            CHECK(r.steps[k].displacement == 0.0);
        }
        if (r.steps[k].displacement > 0.0) {
            CHECK(r.steps[k].spike_count > 0);
            CHECK_FALSE(r.steps[k].balance_lost);
        }
    }
    CHECK(r.total_spikes == spikes);
    CHECK(r.energy_nj == estimate_energy(r.total_spikes, cfg.energy_per_spike_nj));
}

TEST_CASE("run_trial is deterministic and early-stop sound") {
    TrialConfig cfg = default_trial(33);
    const TrialResult a = run_trial(cfg);
    const TrialResult b = run_trial(cfg);
    CHECK(a.raster == b.raster);
    CHECK(a.final_weights == b.final_weights);
    CHECK(a.classification == b.classification);

    if (a.convergence_step.has_value()) {
        // truncating max_steps reproduces the same raster prefix
        TrialConfig shorter = cfg;
        shorter.max_steps =
            std::max<long>(*a.convergence_step, shorter.convergence_window);
        const TrialResult c = run_trial(shorter);
        for (long k = 0; k < shorter.max_steps && k < static_cast<long>(c.raster.size());
             ++k) {
            CHECK(c.raster[k] == a.raster[k]);
        }
    }
}

TEST_CASE("run_trial rejects invalid configs") {
    TrialConfig cfg = default_trial(1);
    cfg.convergence_window = 1;
    CHECK_THROWS_AS((void)run_trial(cfg), ValidationError);

    cfg = default_trial(1);
    cfg.max_steps = 5;  // below the window
    CHECK_THROWS_AS((void)run_trial(cfg), ValidationError);

    cfg = default_trial(1);
    cfg.learning.theta = -0.1;
    CHECK_THROWS_AS((void)run_trial(cfg), ValidationError);
}

TEST_CASE("estimate_energy") {
    CHECK(estimate_energy(503) == 855.1);
    CHECK(estimate_energy(0) == 0.0);
    CHECK(estimate_energy(1000) == 1700.0);

    RngStream rng(6);
    for (int i = 0; i < 100; ++i) {
        const long n = static_cast<long>(rng.next_u64() % 100000);
        CHECK(estimate_energy(2 * n) == doctest::Approx(2.0 * estimate_energy(n)));
        const double per = rng.uniform(0.1, 5.0);
        CHECK(estimate_energy(n, per) == static_cast<double>(n) * per);
    }
}

TEST_CASE("tripod_weight_structure") {
    SUBCASE("hand-built attractor separates the groups") {
        WeightSet w;
        for (int i = 0; i < kNumLegs; ++i) {
            for (int j = 0; j < kNumLegs; ++j) {
                if (i != j && (i % 2) != (j % 2)) {
                    w.w_cpg[i][j] = 1.0;
                }
            }
        }
        const GroupMeans m = tripod_weight_structure(w);
        CHECK(m.cross_group_mean == 1.0);
        CHECK(m.intra_group_mean == 0.0);
    }
    SUBCASE("uniform weights have equal means") {
        WeightSet w;
        for (int i = 0; i < kNumLegs; ++i) {
            for (int j = 0; j < kNumLegs; ++j) {
                if (i != j) {
                    w.w_cpg[i][j] = 0.7;
                }
            }
        }
        const GroupMeans m = tripod_weight_structure(w);
        CHECK(m.cross_group_mean == doctest::Approx(0.7));
        CHECK(m.intra_group_mean == doctest::Approx(0.7));
    }
}

TEST_CASE("run_sweep determinism and aggregation") {
    TrialConfig base = default_trial(100);
    base.max_steps = 300;

    const std::vector<double> rates{0.05, 0.1};
    const SweepReport a = run_sweep(rates, 8, base, 1);
    const SweepReport b = run_sweep(rates, 8, base, 4);

    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t k = 0; k < a.trials.size(); ++k) {
        CHECK(a.trials[k].seed == b.trials[k].seed);
        CHECK(a.trials[k].classification == b.trials[k].classification);
        CHECK(a.trials[k].convergence_step == b.trials[k].convergence_step);
        CHECK(a.trials[k].total_spikes == b.trials[k].total_spikes);
    }

    // seeds are consecutive from the base seed, rate-major
    for (std::size_t r = 0; r < rates.size(); ++r) {
        for (int k = 0; k < 8; ++k) {
            CHECK(a.trials[r * 8 + k].seed == base.seed + static_cast<std::uint64_t>(k));
            CHECK(a.trials[r * 8 + k].rate == rates[r]);
        }
    }

    // per-rate counters add up
    for (const RateStats& s : a.per_rate) {
        CHECK(s.tripod + s.alternative + s.non_locomoting == s.trials);
        CHECK(s.fraction_tripod == doctest::Approx(double(s.tripod) / s.trials));
    }
}

TEST_CASE("run_sweep with a single trial collapses the quartiles") {
    TrialConfig base = default_trial(1);
    base.max_steps = 300;
    base.initial_weights_override = tripod_attractor_weights();
    base.learning.theta = 1e-12;

    const SweepReport report = run_sweep({1e-12}, 1, base, 1);
    REQUIRE(report.per_rate.size() == 1);
    const RateStats& s = report.per_rate[0];
    CHECK(s.tripod == 1);
    CHECK(s.conv_min == s.conv_median);
    CHECK(s.conv_median == s.conv_max);
    CHECK(s.conv_q1 == s.conv_q3);
}

TEST_CASE("run_sweep input validation") {
    TrialConfig base = default_trial(1);
    CHECK_THROWS_AS((void)run_sweep({}, 10, base, 1), ValidationError);
    CHECK_THROWS_AS((void)run_sweep({0.1}, 0, base, 1), ValidationError);
}
