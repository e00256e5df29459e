#pragma once

#include <cstdint>
#include <random>

namespace mesc::detail {

// Deterministic helper around std::mt19937_64. The engine's output sequence
// is fixed by the standard, and the mappings below avoid std::distribution
// types whose results vary across library implementations, so seeded draws
// are reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) by 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mesc::detail
