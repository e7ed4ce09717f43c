#include "hexcpg/artifacts.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "hexcpg/errors.hpp"
#include "hexcpg/format.hpp"

namespace hexcpg {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write file: " + path.string());
    }
    return out;
}

std::string conv_field(const std::optional<long>& conv) {
    return conv.has_value() ? std::to_string(*conv) : std::string();
}

std::string stat_field(double v) {
    return std::isnan(v) ? std::string() : fmt_double(v);
}

/// Diverging color for a weight in [w_min, w_max]: blue for inhibitory,
/// white at zero, red for excitatory.
std::string weight_color(double w, double w_min, double w_max) {
    const double span = std::max(std::abs(w_min), std::abs(w_max));
    const double u = span > 0.0 ? std::clamp(w / span, -1.0, 1.0) : 0.0;
    int r = 255, g = 255, b = 255;
    if (u >= 0.0) {
        g = static_cast<int>(std::lround(255.0 * (1.0 - u)));
        b = g;
    } else {
        r = static_cast<int>(std::lround(255.0 * (1.0 + u)));
        g = r;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return std::string(buf);
}

}  // namespace

void write_trial_csv(const std::filesystem::path& path, const TrialResult& result) {
    std::ofstream out = open_out(path);
    out << "step,s1,s2,s3,s4,s5,s6,legs_moved,balance_lost,displacement,"
           "reward_gyro,reward_visual,reward_total,cumulative_reward,weight_updates\n";
    for (std::size_t k = 0; k < result.steps.size(); ++k) {
        const StepOutcome& s = result.steps[k];
        out << (k + 1);
        for (int i = 0; i < kNumLegs; ++i) {
            out << ',' << (s.legs_moved[i] ? 1 : 0);
        }
        out << ',' << s.spike_count << ',' << (s.balance_lost ? 1 : 0) << ','
            << fmt_double(s.displacement) << ',' << s.gyro_reward << ','
            << fmt_double(s.visual_reward) << ',' << fmt_double(s.total_reward) << ','
            << fmt_double(result.cumulative_reward_curve[k]) << ',' << s.weight_updates
            << '\n';
    }
}

void write_reward_csv(const std::filesystem::path& path, const TrialResult& result) {
    std::ofstream out = open_out(path);
    out << "step,reward_total,cumulative_reward\n";
    for (std::size_t k = 0; k < result.steps.size(); ++k) {
        out << (k + 1) << ',' << fmt_double(result.steps[k].total_reward) << ','
            << fmt_double(result.cumulative_reward_curve[k]) << '\n';
    }
}

void write_weights_csv(const std::filesystem::path& path, const WeightSet& weights) {
    std::ofstream out = open_out(path);
    out << "neuron,w_in,w_gyro";
    for (int j = 1; j <= kNumLegs; ++j) {
        out << ",w_cpg_" << j;
    }
    out << '\n';
    for (int i = 0; i < kNumLegs; ++i) {
        out << (i + 1) << ',' << fmt_double(weights.w_in[i]) << ','
            << fmt_double(weights.w_gyro[i]);
        for (int j = 0; j < kNumLegs; ++j) {
            out << ',' << fmt_double(weights.w_cpg[i][j]);
        }
        out << '\n';
    }
}

void write_summary_csv(const std::filesystem::path& path, const TrialResult& result) {
    std::ofstream out = open_out(path);
    out << "classification,convergence_step,steps_run,total_spikes,energy_nj\n";
    out << to_string(result.classification) << ',' << conv_field(result.convergence_step)
        << ',' << result.steps.size() << ',' << result.total_spikes << ','
        << fmt_double(result.energy_nj) << '\n';
}

void write_sweep_csv(const std::filesystem::path& path, const SweepReport& report) {
    std::ofstream out = open_out(path);
    out << "rate,seed,classification,convergence_step,total_spikes\n";
    for (const SweepTrialRow& row : report.trials) {
        out << fmt_double(row.rate) << ',' << row.seed << ','
            << to_string(row.classification) << ',' << conv_field(row.convergence_step)
            << ',' << row.total_spikes << '\n';
    }
}

void write_sweep_summary_csv(const std::filesystem::path& path,
                             const SweepReport& report) {
    std::ofstream out = open_out(path);
    out << "rate,trials,fraction_tripod,fraction_alternative,conv_min,conv_q1,"
           "conv_median,conv_q3,conv_max\n";
    for (const RateStats& s : report.per_rate) {
        out << fmt_double(s.rate) << ',' << s.trials << ','
            << fmt_double(s.fraction_tripod) << ',' << fmt_double(s.fraction_alternative)
            << ',' << stat_field(s.conv_min) << ',' << stat_field(s.conv_q1) << ','
            << stat_field(s.conv_median) << ',' << stat_field(s.conv_q3) << ','
            << stat_field(s.conv_max) << '\n';
    }
}

void write_raster_svg(const std::filesystem::path& path,
                      const std::vector<SpikeVector>& raster) {
    const int steps = static_cast<int>(raster.size());
    const double cell_w = steps > 450 ? 2.0 : 4.0;
    const double cell_h = 24.0;
    const double left = 46.0, top = 16.0, bottom = 34.0;
    const double width = left + steps * cell_w + 12.0;
    const double height = top + kNumLegs * cell_h + bottom;

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_fixed(width, 0)
        << "\" height=\"" << fmt_fixed(height, 0) << "\" viewBox=\"0 0 "
        << fmt_fixed(width, 0) << ' ' << fmt_fixed(height, 0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int i = 0; i < kNumLegs; ++i) {
        const double y = top + i * cell_h;
        out << "<text x=\"8\" y=\"" << fmt_fixed(y + cell_h * 0.7, 1)
            << "\" font-family=\"sans-serif\" font-size=\"12\">N" << (i + 1)
            << "</text>\n";
        out << "<line x1=\"" << fmt_fixed(left, 1) << "\" y1=\"" << fmt_fixed(y, 1)
            << "\" x2=\"" << fmt_fixed(left + steps * cell_w, 1) << "\" y2=\""
            << fmt_fixed(y, 1) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        for (int t = 0; t < steps; ++t) {
            if (raster[t][i]) {
                out << "<rect x=\"" << fmt_fixed(left + t * cell_w, 1) << "\" y=\""
                    << fmt_fixed(y + 2.0, 1) << "\" width=\"" << fmt_fixed(cell_w, 1)
                    << "\" height=\"" << fmt_fixed(cell_h - 4.0, 1) << "\"/>\n";
            }
        }
    }
    out << "<text x=\"" << fmt_fixed(left, 1) << "\" y=\"" << fmt_fixed(height - 10.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">time step (1.."
        << steps << ")</text>\n";
    out << "</svg>\n";
}

void write_reward_svg(const std::filesystem::path& path, const TrialResult& result) {
    const std::vector<double>& curve = result.cumulative_reward_curve;
    const double width = 640.0, height = 360.0;
    const double left = 64.0, right = 16.0, top = 16.0, bottom = 40.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double lo = 0.0, hi = 1.0;
    if (!curve.empty()) {
        const auto [mn, mx] = std::minmax_element(curve.begin(), curve.end());
        lo = std::min(0.0, *mn);
        hi = std::max(*mx, lo + 1e-9);
    }
    const auto x_of = [&](std::size_t k) {
        return left + (curve.size() > 1
                           ? plot_w * static_cast<double>(k) / (curve.size() - 1)
                           : 0.0);
    };
    const auto y_of = [&](double v) { return top + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_fixed(width, 0)
        << "\" height=\"" << fmt_fixed(height, 0) << "\" viewBox=\"0 0 "
        << fmt_fixed(width, 0) << ' ' << fmt_fixed(height, 0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << fmt_fixed(left, 1) << "\" y1=\"" << fmt_fixed(top, 1)
        << "\" x2=\"" << fmt_fixed(left, 1) << "\" y2=\"" << fmt_fixed(top + plot_h, 1)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << fmt_fixed(left, 1) << "\" y1=\"" << fmt_fixed(y_of(0.0), 1)
        << "\" x2=\"" << fmt_fixed(left + plot_w, 1) << "\" y2=\""
        << fmt_fixed(y_of(0.0), 1) << "\" stroke=\"#bbbbbb\"/>\n";
    if (!curve.empty()) {
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < curve.size(); ++k) {
            if (k) out << ' ';
            out << fmt_fixed(x_of(k), 1) << ',' << fmt_fixed(y_of(curve[k]), 1);
        }
        out << "\"/>\n";
    }
    out << "<text x=\"8\" y=\"" << fmt_fixed(top + 12.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_fixed(hi, 1)
        << "</text>\n";
    out << "<text x=\"8\" y=\"" << fmt_fixed(top + plot_h, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_fixed(lo, 1)
        << "</text>\n";
    out << "<text x=\"" << fmt_fixed(left, 1) << "\" y=\"" << fmt_fixed(height - 12.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">cumulative reward over "
        << curve.size() << " steps</text>\n";
    out << "</svg>\n";
}

void write_weights_svg(const std::filesystem::path& path, const WeightSet& weights,
                       double w_min, double w_max) {
    const double cell = 36.0;
    const double left = 60.0, top = 46.0;
    // 6x6 CPG block, a gap, then the w_in and w_gyro columns.
    const double gap = 18.0;
    const double width = left + kNumLegs * cell + gap + 2 * cell + 90.0;
    const double height = top + kNumLegs * cell + 54.0;

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_fixed(width, 0)
        << "\" height=\"" << fmt_fixed(height, 0) << "\" viewBox=\"0 0 "
        << fmt_fixed(width, 0) << ' ' << fmt_fixed(height, 0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << fmt_fixed(left, 1)
        << "\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">W_cpg (row: post, "
           "col: pre)</text>\n";
    for (int i = 0; i < kNumLegs; ++i) {
        out << "<text x=\"" << fmt_fixed(left - 26.0, 1) << "\" y=\""
            << fmt_fixed(top + i * cell + cell * 0.62, 1)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << (i + 1)
            << "</text>\n";
        out << "<text x=\"" << fmt_fixed(left + i * cell + cell * 0.38, 1) << "\" y=\""
            << fmt_fixed(top - 8.0, 1)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << (i + 1)
            << "</text>\n";
        for (int j = 0; j < kNumLegs; ++j) {
            out << "<rect x=\"" << fmt_fixed(left + j * cell, 1) << "\" y=\""
                << fmt_fixed(top + i * cell, 1) << "\" width=\"" << fmt_fixed(cell, 1)
                << "\" height=\"" << fmt_fixed(cell, 1) << "\" fill=\""
                << weight_color(weights.w_cpg[i][j], w_min, w_max)
                << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
        }
    }
    const double aux_x = left + kNumLegs * cell + gap;
    out << "<text x=\"" << fmt_fixed(aux_x, 1) << "\" y=\"" << fmt_fixed(top - 8.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">in gyro</text>\n";
    for (int i = 0; i < kNumLegs; ++i) {
        out << "<rect x=\"" << fmt_fixed(aux_x, 1) << "\" y=\""
            << fmt_fixed(top + i * cell, 1) << "\" width=\"" << fmt_fixed(cell, 1)
            << "\" height=\"" << fmt_fixed(cell, 1) << "\" fill=\""
            << weight_color(weights.w_in[i], w_min, w_max)
            << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
        out << "<rect x=\"" << fmt_fixed(aux_x + cell, 1) << "\" y=\""
            << fmt_fixed(top + i * cell, 1) << "\" width=\"" << fmt_fixed(cell, 1)
            << "\" height=\"" << fmt_fixed(cell, 1) << "\" fill=\""
            << weight_color(weights.w_gyro[i], w_min, w_max)
            << "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
    }
    out << "<text x=\"" << fmt_fixed(left, 1) << "\" y=\""
        << fmt_fixed(top + kNumLegs * cell + 24.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">blue = " << fmt_double(w_min)
        << ", white = 0, red = " << fmt_double(w_max) << "</text>\n";
    out << "</svg>\n";
}

void write_sweep_box_svg(const std::filesystem::path& path, const SweepReport& report) {
    const double width = 640.0, height = 400.0;
    const double left = 64.0, right = 16.0, top = 20.0, bottom = 52.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double hi = 1.0;
    for (const RateStats& s : report.per_rate) {
        if (!std::isnan(s.conv_max)) {
            hi = std::max(hi, s.conv_max);
        }
    }
    const auto y_of = [&](double v) { return top + plot_h * (1.0 - v / hi); };

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_fixed(width, 0)
        << "\" height=\"" << fmt_fixed(height, 0) << "\" viewBox=\"0 0 "
        << fmt_fixed(width, 0) << ' ' << fmt_fixed(height, 0) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << fmt_fixed(left, 1) << "\" y1=\"" << fmt_fixed(top, 1)
        << "\" x2=\"" << fmt_fixed(left, 1) << "\" y2=\"" << fmt_fixed(top + plot_h, 1)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"8\" y=\"" << fmt_fixed(top + 12.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_fixed(hi, 0)
        << "</text>\n";
    out << "<text x=\"8\" y=\"" << fmt_fixed(top + plot_h, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">0</text>\n";

    const std::size_t n = report.per_rate.size();
    const double slot = plot_w / static_cast<double>(std::max<std::size_t>(n, 1));
    const double box_w = std::min(slot * 0.5, 60.0);
    for (std::size_t k = 0; k < n; ++k) {
        const RateStats& s = report.per_rate[k];
        const double cx = left + slot * (static_cast<double>(k) + 0.5);
        out << "<text x=\"" << fmt_fixed(cx - 16.0, 1) << "\" y=\""
            << fmt_fixed(height - 28.0, 1)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_double(s.rate)
            << "</text>\n";
        out << "<text x=\"" << fmt_fixed(cx - 22.0, 1) << "\" y=\""
            << fmt_fixed(height - 12.0, 1)
            << "\" font-family=\"sans-serif\" font-size=\"11\">tripod "
            << fmt_fixed(100.0 * s.fraction_tripod, 0) << "%</text>\n";
        if (std::isnan(s.conv_median)) {
            continue;
        }
        // whiskers min..max, box q1..q3, line at median
        out << "<line x1=\"" << fmt_fixed(cx, 1) << "\" y1=\""
            << fmt_fixed(y_of(s.conv_min), 1) << "\" x2=\"" << fmt_fixed(cx, 1)
            << "\" y2=\"" << fmt_fixed(y_of(s.conv_max), 1) << "\" stroke=\"black\"/>\n";
        out << "<rect x=\"" << fmt_fixed(cx - box_w / 2, 1) << "\" y=\""
            << fmt_fixed(y_of(s.conv_q3), 1) << "\" width=\"" << fmt_fixed(box_w, 1)
            << "\" height=\"" << fmt_fixed(y_of(s.conv_q1) - y_of(s.conv_q3), 1)
            << "\" fill=\"#cfd8ff\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << fmt_fixed(cx - box_w / 2, 1) << "\" y1=\""
            << fmt_fixed(y_of(s.conv_median), 1) << "\" x2=\""
            << fmt_fixed(cx + box_w / 2, 1) << "\" y2=\""
            << fmt_fixed(y_of(s.conv_median), 1)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    out << "<text x=\"" << fmt_fixed(left, 1) << "\" y=\""
        << fmt_fixed(height - 12.0, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\">learning rate vs tripod "
           "convergence step</text>\n";
    out << "</svg>\n";
}

}  // namespace hexcpg
