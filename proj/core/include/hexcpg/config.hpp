#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "hexcpg/experiment.hpp"

namespace hexcpg {

inline constexpr int kConfigSchemaVersion = 1;

/// The configuration document: every simulation parameter except the seed,
/// which always comes from the command line. Omitted keys take the defaults
/// below; unknown keys are a hard error. The grammar is documented in the
/// repository README.
struct SimConfig {
    NeuronParams neuron;
    LearningParams learning;
    RewardParams reward;
    HexapodModel hexapod = canonical_hexapod();
    long max_steps = 1000;
    int convergence_window = 10;
    double energy_per_spike_nj = 1.7;

    /// Parse a JSON document. Throws ParseError on malformed JSON and
    /// ValidationError on unknown keys, a missing or unsupported
    /// schema_version, or parameter-invariant violations.
    static SimConfig from_json_text(const std::string& text);

    /// Read and parse a config file; I/O failures surface as ParseError.
    static SimConfig load(const std::filesystem::path& path);

    /// Fully resolved document with every key spelled out, suitable for
    /// echoing into artifact directories. Deterministic byte output.
    std::string to_json_text() const;

    void validate() const;

    TrialConfig trial_config(std::uint64_t seed) const;
};

}  // namespace hexcpg
