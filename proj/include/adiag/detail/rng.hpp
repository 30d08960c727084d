#pragma once

#include <cstdint>
#include <random>

namespace adiag::detail {

// splitmix64: used to decorrelate user seeds from stream indices before
// feeding mt19937_64, so seed 0 / attempt 0 is not a degenerate state.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701)) ) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1). Hand-rolled from raw bits: the distribution classes in
  // <random> are not guaranteed identical across standard library
  // implementations, and byte-identical output under a fixed seed is part of
  // the tool contract.
  double next_unit() { return (gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [-1,1).
  double next_sym() { return next_unit() * 2.0 - 1.0; }

  // Uniform integer in [0, n). Rejection-free modulo is fine here: these draws
  // feed random spot checks, not anything with statistical duty.
  std::uint64_t next_below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

// FNV-1a over a byte view; used to hash Cayley tables into cache keys.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace adiag::detail
