#pragma once

#include "gwx/types.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace gwx {

// Stateless mixing step; used for counter-based seed derivation so that a
// master seed can be split into independent per-stage / per-sample streams
// without any draw-order coupling between them.
inline constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derive a child seed from (base, tag, index). Tags name the consumer
// ("stage1", "backbone", ...); index distinguishes samples/replicas.
uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index = 0);

// Deterministic random source. All distribution transforms are implemented
// here (not via std:: distributions) so draws are byte-identical for a given
// seed regardless of the standard library in use.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller (no cached spare; two u64 per draw).
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Uniform integer in [0, n), rejection-sampled so it is exactly uniform.
  int uniform_int(int n) {
    if (n <= 0) throw ContractError("uniform_int: n must be positive");
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return static_cast<int>(x % un);
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_int(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  Mat uniform_mat(Index rows, Index cols, double lo, double hi) {
    Mat m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
    return m;
  }

  Mat normal_mat(Index rows, Index cols, double mean = 0.0, double stddev = 1.0) {
    Mat m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = normal(mean, stddev);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gwx
