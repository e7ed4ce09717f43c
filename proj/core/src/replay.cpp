#include "hexcpg/replay.hpp"

#include <fstream>

#include <json.hpp>

#include "hexcpg/errors.hpp"
#include "hexcpg/format.hpp"
#include "hexcpg/rng.hpp"

namespace hexcpg {

namespace {
using nlohmann::json;

std::string spike_string(SpikeVector v) {
    std::string s(kNumLegs, '0');
    for (int i = 0; i < kNumLegs; ++i) {
        if (v[i]) {
            s[i] = '1';  // character k = leg k+1
        }
    }
    return s;
}
}  // namespace

std::string replay_header_line(const SimConfig& config, std::uint64_t seed) {
    json header;
    header["kind"] = "hexcpg-replay";
    header["schema_version"] = kReplaySchemaVersion;
    header["rng"] = RngStream::kAlgorithm;
    header["seed"] = seed;
    header["config"] = json::parse(config.to_json_text());
    return header.dump();
}

std::string replay_step_line(long step, const StepOutcome& outcome) {
    json line;
    line["t"] = step;
    line["spikes"] = spike_string(outcome.legs_moved);
    line["balance_lost"] = outcome.balance_lost ? 1 : 0;
    line["displacement"] = outcome.displacement;
    line["reward_gyro"] = outcome.gyro_reward;
    line["reward_visual"] = outcome.visual_reward;
    line["reward_total"] = outcome.total_reward;
    line["weight_updates"] = outcome.weight_updates;
    return line.dump();
}

void write_replay(const std::filesystem::path& path, const SimConfig& config,
                  std::uint64_t seed, const TrialResult& result) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write replay file: " + path.string());
    }
    out << replay_header_line(config, seed) << '\n';
    for (std::size_t k = 0; k < result.steps.size(); ++k) {
        out << replay_step_line(static_cast<long>(k + 1), result.steps[k]) << '\n';
    }
}

ReplayVerification verify_replay(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open replay file: " + path.string());
    }
    std::string header_line;
    if (!std::getline(in, header_line)) {
        throw ParseError("replay file is empty: " + path.string());
    }

    json header;
    try {
        header = json::parse(header_line);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("replay header: ") + e.what());
    }
    if (!header.is_object() || header.value("kind", "") != "hexcpg-replay") {
        throw ParseError("not a hexcpg replay file");
    }
    if (header.value("schema_version", -1) != kReplaySchemaVersion) {
        throw ParseError("unsupported replay schema_version");
    }
    if (header.value("rng", "") != RngStream::kAlgorithm) {
        throw ParseError("replay uses an unknown rng algorithm");
    }
    if (!header.contains("seed") || !header["seed"].is_number_unsigned()) {
        throw ParseError("replay header is missing the seed");
    }
    if (!header.contains("config")) {
        throw ParseError("replay header is missing the config");
    }

    const std::uint64_t seed = header["seed"].get<std::uint64_t>();
    const SimConfig config = SimConfig::from_json_text(header["config"].dump());
    const TrialResult result = run_trial(config.trial_config(seed));

    ReplayVerification verdict;
    long step = 0;
    std::string file_line;
    while (std::getline(in, file_line)) {
        ++step;
        if (step > static_cast<long>(result.steps.size())) {
            verdict.first_divergent_step = step;
            verdict.message = "replay has more steps than the regenerated trial";
            return verdict;
        }
        const std::string regenerated = replay_step_line(step, result.steps[step - 1]);
        if (file_line != regenerated) {
            verdict.first_divergent_step = step;
            verdict.message = "first divergence at step " + std::to_string(step);
            return verdict;
        }
    }
    if (step != static_cast<long>(result.steps.size())) {
        verdict.first_divergent_step = step + 1;
        verdict.message = "replay ends early; regenerated trial has " +
                          std::to_string(result.steps.size()) + " steps";
        return verdict;
    }
    verdict.identical = true;
    return verdict;
}

}  // namespace hexcpg
