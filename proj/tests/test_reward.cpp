#include <iostream>

#include <doctest.h>

#include <cmath>

#include "hexcpg/errors.hpp"
#include "hexcpg/reward.hpp"

using namespace hexcpg;

TEST_CASE("gyro reward table, exhaustive over balance x leg count") {
    const RewardParams params;
    for (int lost = 0; lost <= 1; ++lost) {
        for (int n = 0; n <= 6; ++n) {
            const int r = gyro_reward(lost != 0, n, params);
            if (!lost) {
                CHECK(r == 5);
            } else if (n > 3) {
                CHECK(r == -2);
            } else if (n < 3) {
                CHECK(r == 2);
            } else {
                CHECK(r == params.r_exactly3_lost);
            }
        }
    }
}

TEST_CASE("gyro reward anchor cells") {
    const RewardParams params;
    CHECK(gyro_reward(true, 4, params) == -2);
    CHECK(gyro_reward(true, 2, params) == 2);
    CHECK(gyro_reward(false, 3, params) == 5);
    CHECK(gyro_reward(true, 3, params) == params.r_exactly3_lost);
}

TEST_CASE("visual reward is a sign test on displacement") {
    const RewardParams params;
    CHECK(visual_reward(1.0, params) == 1.0);
    CHECK(visual_reward(0.0, params) == -1.0);
    CHECK(visual_reward(0.33, params) == 1.0);
}

TEST_CASE("total reward ramp") {
    const RewardParams params;  // t1 = 200
    CHECK(total_reward(5, 1.0, 200, params) == 6.0);
    CHECK(total_reward(5, -1.0, 0, params) == 5.0);
    CHECK(total_reward(-2, 1.0, 100, params) == -1.5);

    SUBCASE("uncapped past t1") {
        CHECK(total_reward(0, 1.0, 800, params) == 4.0);
    }
}

TEST_CASE("total reward is affine in t with slope visual_r / t1") {
    const RewardParams params;
    // exact at multiples of t1 (the ratio is a small integer)
    for (int k = 0; k < 5; ++k) {
        const long t = static_cast<long>(k) * params.t1;
        CHECK(total_reward(3, 1.0, t + params.t1, params) -
                  total_reward(3, 1.0, t, params) ==
              1.0);
    }
    // within floating-point tolerance everywhere else
    for (long t = 0; t < 1000; t += 7) {
        const double diff = total_reward(-2, -1.0, t + params.t1, params) -
                            total_reward(-2, -1.0, t, params);
        CHECK(diff == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("early steps are dominated by the gyro term") {
    const RewardParams params;
    for (long t = 0; t <= 20; ++t) {
        CHECK(std::abs(total_reward(0, 1.0, t, params)) < 1.0);
        CHECK(total_reward(5, -1.0, t, params) > 4.0);
    }
}

TEST_CASE("reward params validation") {
    RewardParams p;
    p.r_undershoot = -1;  // breaks r_undershoot > 0
    CHECK_THROWS_AS(p.validate(), ValidationError);

    p = RewardParams{};
    p.r_balanced = 2;  // breaks r_balanced > r_undershoot
    CHECK_THROWS_AS(p.validate(), ValidationError);

    p = RewardParams{};
    p.t1 = 0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
}
