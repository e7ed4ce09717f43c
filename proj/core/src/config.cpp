#include "hexcpg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hexcpg/errors.hpp"

namespace hexcpg {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& scope,
                         const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) {
            throw ValidationError("unknown config key: " + scope + key);
        }
    }
}

double get_num(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    if (!obj[key].is_number()) {
        throw ValidationError(std::string("config key '") + key + "' must be a number");
    }
    return obj[key].get<double>();
}

long get_int(const json& obj, const char* key, long fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    if (!obj[key].is_number_integer()) {
        throw ValidationError(std::string("config key '") + key + "' must be an integer");
    }
    return obj[key].get<long>();
}

Vec2 get_vec2(const json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ValidationError(what + " must be a [x, y] pair of numbers");
    }
    return Vec2{v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

SimConfig SimConfig::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("config root must be a JSON object");
    }
    reject_unknown_keys(doc, "",
                        {"schema_version", "neuron", "learning", "reward", "hexapod",
                         "trial"});
    if (!doc.contains("schema_version")) {
        throw ValidationError("config is missing the required schema_version field");
    }
    if (!doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != kConfigSchemaVersion) {
        throw ValidationError("unsupported config schema_version");
    }

    SimConfig cfg;

    if (doc.contains("neuron")) {
        const json& n = doc["neuron"];
        reject_unknown_keys(n, "neuron.",
                            {"alpha", "v_thresh", "refractory_period", "input_period"});
        cfg.neuron.alpha = get_num(n, "alpha", cfg.neuron.alpha);
        cfg.neuron.v_thresh = get_num(n, "v_thresh", cfg.neuron.v_thresh);
        cfg.neuron.refractory_period = static_cast<int>(
            get_int(n, "refractory_period", cfg.neuron.refractory_period));
        cfg.neuron.input_period =
            static_cast<int>(get_int(n, "input_period", cfg.neuron.input_period));
    }
    if (doc.contains("learning")) {
        const json& l = doc["learning"];
        reject_unknown_keys(l, "learning.",
                            {"theta", "w_min", "w_max", "init_low", "init_high"});
        cfg.learning.theta = get_num(l, "theta", cfg.learning.theta);
        cfg.learning.w_min = get_num(l, "w_min", cfg.learning.w_min);
        cfg.learning.w_max = get_num(l, "w_max", cfg.learning.w_max);
        cfg.learning.init_low = get_num(l, "init_low", cfg.learning.init_low);
        cfg.learning.init_high = get_num(l, "init_high", cfg.learning.init_high);
    }
    if (doc.contains("reward")) {
        const json& r = doc["reward"];
        reject_unknown_keys(r, "reward.",
                            {"r_overshoot", "r_undershoot", "r_balanced",
                             "r_exactly3_lost", "v_forward", "v_still", "t1",
                             "ramp_cap"});
        cfg.reward.r_overshoot =
            static_cast<int>(get_int(r, "r_overshoot", cfg.reward.r_overshoot));
        cfg.reward.r_undershoot =
            static_cast<int>(get_int(r, "r_undershoot", cfg.reward.r_undershoot));
        cfg.reward.r_balanced =
            static_cast<int>(get_int(r, "r_balanced", cfg.reward.r_balanced));
        cfg.reward.r_exactly3_lost =
            static_cast<int>(get_int(r, "r_exactly3_lost", cfg.reward.r_exactly3_lost));
        cfg.reward.v_forward = get_num(r, "v_forward", cfg.reward.v_forward);
        cfg.reward.v_still = get_num(r, "v_still", cfg.reward.v_still);
        cfg.reward.t1 = static_cast<int>(get_int(r, "t1", cfg.reward.t1));
        cfg.reward.ramp_cap = get_num(r, "ramp_cap", cfg.reward.ramp_cap);
    }
    if (doc.contains("hexapod")) {
        const json& h = doc["hexapod"];
        reject_unknown_keys(h, "hexapod.",
                            {"foot_positions", "com", "stability_margin",
                             "step_displacement", "balance_flip_prob"});
        if (h.contains("foot_positions")) {
            const json& feet = h["foot_positions"];
            if (!feet.is_array() || feet.size() != kNumLegs) {
                throw ValidationError("hexapod.foot_positions must list exactly 6 pairs");
            }
            for (int i = 0; i < kNumLegs; ++i) {
                cfg.hexapod.foot_positions[i] =
                    get_vec2(feet[i], "hexapod.foot_positions[" + std::to_string(i) + "]");
            }
        }
        if (h.contains("com")) {
            cfg.hexapod.com = get_vec2(h["com"], "hexapod.com");
        }
        cfg.hexapod.stability_margin =
            get_num(h, "stability_margin", cfg.hexapod.stability_margin);
        cfg.hexapod.step_displacement =
            get_num(h, "step_displacement", cfg.hexapod.step_displacement);
        cfg.hexapod.balance_flip_prob =
            get_num(h, "balance_flip_prob", cfg.hexapod.balance_flip_prob);
    }
    if (doc.contains("trial")) {
        const json& t = doc["trial"];
        reject_unknown_keys(t, "trial.",
                            {"max_steps", "convergence_window", "energy_per_spike_nj"});
        cfg.max_steps = get_int(t, "max_steps", cfg.max_steps);
        cfg.convergence_window = static_cast<int>(
            get_int(t, "convergence_window", cfg.convergence_window));
        cfg.energy_per_spike_nj =
            get_num(t, "energy_per_spike_nj", cfg.energy_per_spike_nj);
    }

    cfg.validate();
    return cfg;
}

SimConfig SimConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string SimConfig::to_json_text() const {
    json doc;
    doc["schema_version"] = kConfigSchemaVersion;
    doc["neuron"] = {
        {"alpha", neuron.alpha},
        {"v_thresh", neuron.v_thresh},
        {"refractory_period", neuron.refractory_period},
        {"input_period", neuron.input_period},
    };
    doc["learning"] = {
        {"theta", learning.theta},
        {"w_min", learning.w_min},
        {"w_max", learning.w_max},
        {"init_low", learning.init_low},
        {"init_high", learning.init_high},
    };
    doc["reward"] = {
        {"r_overshoot", reward.r_overshoot},
        {"r_undershoot", reward.r_undershoot},
        {"r_balanced", reward.r_balanced},
        {"r_exactly3_lost", reward.r_exactly3_lost},
        {"v_forward", reward.v_forward},
        {"v_still", reward.v_still},
        {"t1", reward.t1},
        {"ramp_cap", reward.ramp_cap},
    };
    json feet = json::array();
    for (const Vec2& f : hexapod.foot_positions) {
        feet.push_back({f.x, f.y});
    }
    doc["hexapod"] = {
        {"foot_positions", feet},
        {"com", {hexapod.com.x, hexapod.com.y}},
        {"stability_margin", hexapod.stability_margin},
        {"step_displacement", hexapod.step_displacement},
        {"balance_flip_prob", hexapod.balance_flip_prob},
    };
    doc["trial"] = {
        {"max_steps", max_steps},
        {"convergence_window", convergence_window},
        {"energy_per_spike_nj", energy_per_spike_nj},
    };
    return doc.dump(2) + "\n";
}

void SimConfig::validate() const {
    trial_config(0).validate();
}

TrialConfig SimConfig::trial_config(std::uint64_t seed) const {
    TrialConfig tc;
    tc.max_steps = max_steps;
    tc.seed = seed;
    tc.convergence_window = convergence_window;
    tc.energy_per_spike_nj = energy_per_spike_nj;
    tc.neuron = neuron;
    tc.learning = learning;
    tc.reward = reward;
    tc.hexapod = hexapod;
    return tc;
}

}  // namespace hexcpg
