#pragma once

#include <bitset>
#include <cstdint>

namespace hexcpg {

inline constexpr int kNumLegs = 6;

/// One bit per leg/CPG neuron, bit i corresponds to leg i+1 of the hexapod.
using SpikeVector = std::bitset<kNumLegs>;

/// Legs {1,3,5} (bits 0,2,4) — one phase of the target tripod gait.
inline const SpikeVector kTripodOdd{0b010101};
/// Legs {2,4,6} (bits 1,3,5) — the opposite phase.
inline const SpikeVector kTripodEven{0b101010};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

}  // namespace hexcpg
