// hexcpg: learn a hexapod tripod gait with a six-neuron spiking CPG against
// a simulated stability/odometry environment.
//
// Subcommands:
//   run    — one seeded trial; writes CSV tables, SVG plots and a replay file
//   sweep  — seeded trials across learning rates; writes per-trial and
//            per-rate summaries plus a convergence box plot
//   replay — re-execute a replay file and verify it byte for byte
//
// Exit codes: 0 ok, 1 usage, 2 config parse, 3 config invalid, 4 I/O,
// 5 replay parse, 6 replay divergence.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hexcpg/artifacts.hpp"
#include "hexcpg/config.hpp"
#include "hexcpg/errors.hpp"
#include "hexcpg/replay.hpp"

namespace fs = std::filesystem;
using namespace hexcpg;

namespace {

SimConfig load_config_or_default(const std::string& path) {
    if (path.empty()) {
        SimConfig cfg;
        cfg.validate();
        return cfg;
    }
    return SimConfig::load(path);
}

void write_config_echo(const fs::path& dir, const SimConfig& cfg) {
    std::ofstream out(dir / "config_resolved.json", std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + (dir / "config_resolved.json").string());
    }
    out << cfg.to_json_text();
}

int cmd_run(const std::string& config_path, std::uint64_t seed, const fs::path& out_dir,
            double energy_per_spike_nj) {
    SimConfig cfg = load_config_or_default(config_path);
    cfg.energy_per_spike_nj = energy_per_spike_nj;

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + out_dir.string());
    }

    const TrialResult result = run_trial(cfg.trial_config(seed));

    write_config_echo(out_dir, cfg);
    write_trial_csv(out_dir / "trial.csv", result);
    write_reward_csv(out_dir / "reward.csv", result);
    write_summary_csv(out_dir / "summary.csv", result);
    write_weights_csv(out_dir / "weights_initial.csv", result.initial_weights);
    write_weights_csv(out_dir / "weights_final.csv", result.final_weights);
    write_raster_svg(out_dir / "raster.svg", result.raster);
    write_reward_svg(out_dir / "reward.svg", result);
    write_weights_svg(out_dir / "weights_initial.svg", result.initial_weights,
                      cfg.learning.w_min, cfg.learning.w_max);
    write_weights_svg(out_dir / "weights_final.svg", result.final_weights,
                      cfg.learning.w_min, cfg.learning.w_max);
    write_replay(out_dir / "replay.jsonl", cfg, seed, result);

    std::cout << "classification=" << to_string(result.classification);
    if (result.convergence_step) {
        std::cout << " convergence_step=" << *result.convergence_step;
    }
    std::cout << " total_spikes=" << result.total_spikes
              << " energy_nj=" << result.energy_nj << '\n';
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::vector<double>& rates,
              int trials, std::uint64_t base_seed, const fs::path& out_dir, int workers,
              double energy_per_spike_nj) {
    SimConfig cfg = load_config_or_default(config_path);
    cfg.energy_per_spike_nj = energy_per_spike_nj;

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + out_dir.string());
    }

    const SweepReport report =
        run_sweep(rates, trials, cfg.trial_config(base_seed), workers);

    write_config_echo(out_dir, cfg);
    write_sweep_csv(out_dir / "sweep.csv", report);
    write_sweep_summary_csv(out_dir / "sweep_summary.csv", report);
    write_sweep_box_svg(out_dir / "sweep_box.svg", report);

    for (const RateStats& s : report.per_rate) {
        std::cout << "rate=" << s.rate << " tripod=" << s.tripod << '/' << s.trials
                  << " alternative=" << s.alternative
                  << " median_convergence=" << s.conv_median << '\n';
    }
    return kExitOk;
}

int cmd_replay(const fs::path& file) {
    const ReplayVerification verdict = verify_replay(file);
    if (verdict.identical) {
        std::cout << "replay verified: identical\n";
        return kExitOk;
    }
    std::cerr << "replay divergence: " << verdict.message << '\n';
    return kExitReplayDivergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spiking-CPG hexapod gait learning laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_dir;
    double energy_per_spike_nj = 1.7;

    CLI::App* run = app.add_subcommand("run", "run one seeded trial");
    run->add_option("--config", config_path, "config file (JSON); defaults when omitted");
    run->add_option("--seed", seed, "trial seed")->capture_default_str();
    run->add_option("--out", out_dir, "output directory")->required();
    run->add_option("--energy-per-spike-nj", energy_per_spike_nj,
                    "energy per spike in nanojoules")
        ->capture_default_str();

    std::vector<double> rates{0.1};
    int trials = 100;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) {
        workers = 1;
    }

    CLI::App* sweep = app.add_subcommand("sweep", "trials across learning rates");
    sweep->add_option("--config", config_path, "config file (JSON); defaults when omitted");
    sweep->add_option("--rates", rates, "learning rates to sweep")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--trials", trials, "trials per rate")->capture_default_str();
    sweep->add_option("--seed", seed, "base seed; trial k uses seed+k")
        ->capture_default_str();
    sweep->add_option("--out", out_dir, "output directory")->required();
    sweep->add_option("--workers", workers, "worker threads")->capture_default_str();
    sweep->add_option("--energy-per-spike-nj", energy_per_spike_nj,
                      "energy per spike in nanojoules")
        ->capture_default_str();

    std::string replay_file;
    CLI::App* replay = app.add_subcommand("replay", "verify a recorded trial");
    replay->add_option("file", replay_file, "replay file from a previous run")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(config_path, seed, out_dir, energy_per_spike_nj);
        }
        if (sweep->parsed()) {
            if (trials < 1) {
                std::cerr << "error: --trials must be >= 1\n";
                return kExitConfigInvalid;
            }
            return cmd_sweep(config_path, rates, trials, seed, out_dir, workers,
                             energy_per_spike_nj);
        }
        if (replay->parsed()) {
            return cmd_replay(replay_file);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return replay->parsed() ? kExitReplayParse : kExitConfigParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigInvalid;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
