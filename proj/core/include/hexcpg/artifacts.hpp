#pragma once

#include <filesystem>

#include "hexcpg/experiment.hpp"

namespace hexcpg {

// CSV tables. Every file carries a header row; numeric fields use
// shortest-round-trip formatting so repeated runs are byte-identical.

void write_trial_csv(const std::filesystem::path& path, const TrialResult& result);
void write_reward_csv(const std::filesystem::path& path, const TrialResult& result);
void write_weights_csv(const std::filesystem::path& path, const WeightSet& weights);
void write_summary_csv(const std::filesystem::path& path, const TrialResult& result);
void write_sweep_csv(const std::filesystem::path& path, const SweepReport& report);
void write_sweep_summary_csv(const std::filesystem::path& path, const SweepReport& report);

// Self-contained SVG 1.1 plots (no external assets).

/// Spike raster: time on x, neurons 1..6 on y, filled cells for spikes.
void write_raster_svg(const std::filesystem::path& path,
                      const std::vector<SpikeVector>& raster);

/// Cumulative reward curve over time.
void write_reward_svg(const std::filesystem::path& path, const TrialResult& result);

/// CPG weight matrix heatmap with the w_in / w_gyro columns alongside.
void write_weights_svg(const std::filesystem::path& path, const WeightSet& weights,
                       double w_min, double w_max);

/// Box plot of tripod convergence times per learning rate.
void write_sweep_box_svg(const std::filesystem::path& path, const SweepReport& report);

}  // namespace hexcpg
