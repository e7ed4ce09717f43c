#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "hexcpg/config.hpp"
#include "hexcpg/experiment.hpp"

namespace hexcpg {

/// Replay files are line-delimited JSON. The first line is a header with
/// the schema version, the RNG algorithm tag, the seed, and the fully
/// resolved configuration. Every following line logs one step: spike
/// vector, balance bit, displacement, reward components, and the number of
/// synapses updated. Re-running the trial from the header must reproduce
/// the step lines byte for byte.
///
/// Per-step RNG draw order (the trial is otherwise draw-free):
///   1. one balance-flip draw, only when balance_flip_prob > 0
///   2. one eta draw per eligible synapse in update_weights order
inline constexpr int kReplaySchemaVersion = 1;

std::string replay_header_line(const SimConfig& config, std::uint64_t seed);
std::string replay_step_line(long step, const StepOutcome& outcome);

/// Write a complete replay file for a finished trial.
void write_replay(const std::filesystem::path& path, const SimConfig& config,
                  std::uint64_t seed, const TrialResult& result);

struct ReplayVerification {
    bool identical = false;
    std::optional<long> first_divergent_step;
    std::string message;
};

/// Parse a replay file, re-execute the trial it describes, and compare the
/// regenerated per-step log byte for byte. Throws ParseError on malformed
/// files; divergence is reported in the result, not thrown.
ReplayVerification verify_replay(const std::filesystem::path& path);

}  // namespace hexcpg
