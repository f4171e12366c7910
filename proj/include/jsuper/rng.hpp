#pragma once

#include <cstdint>

namespace jsuper {

/*
 * Deterministic splittable PRNG with a splitmix64 core.  A child stream
 * derived with split(k) depends only on the parent's current state and k,
 * never on how many values other streams have consumed.  This is what makes
 * randomized checks reproducible under any execution order: the engine gives
 * every trial its own stream keyed by the trial index.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on [lo, hi], both ends included
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return next_u64() & 1u; }

  // Derive an independent child stream; the parent state is untouched.
  Rng split(std::uint64_t stream) const {
    return Rng(mix(state_ + 0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace jsuper
