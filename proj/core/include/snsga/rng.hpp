#pragma once

#include <cstdint>
#include <random>

namespace snsga {

/// Deterministic substream derivation: one master seed, independent
/// engines per (phase, index) pair.
inline std::mt19937_64 substream(std::uint64_t master, std::uint64_t phase,
                                 std::uint64_t index = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(master),
                      static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(phase),
                      static_cast<std::uint32_t>(phase >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace snsga
