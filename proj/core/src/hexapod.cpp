#include "hexcpg/hexapod.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hexcpg/errors.hpp"

namespace hexcpg {

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Convex hull, counter-clockwise, collinear points dropped
/// (Andrew's monotone chain).
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) {
        return pts;
    }
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Minimum signed distance from p to the hull boundary, positive inside.
/// Degenerate hulls (fewer than 3 vertices) have no interior.
double interior_margin(const std::vector<Vec2>& hull, const Vec2& p) {
    if (hull.size() < 3) {
        return -std::numeric_limits<double>::infinity();
    }
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec2& a = hull[i];
        const Vec2& b = hull[(i + 1) % hull.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const double signed_dist = cross(a, b, p) / len;  // >0 left of a->b (inside, CCW hull)
        margin = std::min(margin, signed_dist);
    }
    return margin;
}

double stance_margin(const HexapodModel& model, SpikeVector legs_moved) {
    std::vector<Vec2> stance;
    stance.reserve(kNumLegs);
    for (int i = 0; i < kNumLegs; ++i) {
        if (!legs_moved[i]) {
            stance.push_back(model.foot_positions[i]);
        }
    }
    return interior_margin(convex_hull(std::move(stance)), model.com);
}

}  // namespace

HexapodModel canonical_hexapod() {
    HexapodModel model;
    for (int i = 0; i < kNumLegs; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / kNumLegs;
        model.foot_positions[i] = Vec2{std::cos(angle), std::sin(angle)};
    }
    return model;
}

void HexapodModel::validate() const {
    if (!(stability_margin >= 0.0) || !std::isfinite(stability_margin)) {
        throw ValidationError("hexapod.stability_margin must be finite and >= 0");
    }
    if (!(step_displacement > 0.0) || !std::isfinite(step_displacement)) {
        throw ValidationError("hexapod.step_displacement must be finite and > 0");
    }
    if (balance_flip_prob < 0.0 || balance_flip_prob >= 1.0) {
        throw ValidationError("hexapod.balance_flip_prob must be in [0, 1)");
    }
    for (const Vec2& f : foot_positions) {
        if (!std::isfinite(f.x) || !std::isfinite(f.y)) {
            throw ValidationError("hexapod.foot_positions must be finite");
        }
    }
    for (int i = 0; i < kNumLegs; ++i) {
        for (int j = i + 1; j < kNumLegs; ++j) {
            if (foot_positions[i].x == foot_positions[j].x &&
                foot_positions[i].y == foot_positions[j].y) {
                throw ValidationError("hexapod.foot_positions must be pairwise distinct");
            }
        }
    }
    // Standing on all six legs, and on either tripod, must be stable.
    if (evaluate_balance(*this, SpikeVector{})) {
        throw ValidationError("hexapod geometry: full six-leg stance is not stable");
    }
    if (evaluate_balance(*this, kTripodOdd) || evaluate_balance(*this, kTripodEven)) {
        throw ValidationError("hexapod geometry: a tripod stance is not stable");
    }
}

bool evaluate_balance(const HexapodModel& model, SpikeVector legs_moved) {
    return stance_margin(model, legs_moved) < model.stability_margin;
}

double evaluate_motion(const HexapodModel& model, SpikeVector legs_moved,
                       bool balance_lost) {
    const int moved = static_cast<int>(legs_moved.count());
    if (balance_lost || moved == 0) {
        return 0.0;
    }
    return model.step_displacement * moved / 3.0;
}

}  // namespace hexcpg
