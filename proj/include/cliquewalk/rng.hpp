#pragma once

#include <cstdint>
#include <random>

namespace cliquewalk {

// Reproducible randomness.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard.
// It is seeded with splitmix64(seed) so that nearby user seeds give unrelated
// streams. Bounded integers use rejection sampling on the raw 64-bit output and
// reals take the top 53 bits; neither relies on std distributions, whose
// algorithms differ between standard libraries.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of substream `index` derived from a master seed.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on {0, ..., bound-1}; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliquewalk
