#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace slicepoly {

// mt19937_64 has a standard-mandated output sequence; bounded draws are done
// here rather than through std distributions, whose output is not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  std::vector<std::uint32_t> permutation(std::uint32_t n);
  /// k distinct values from [0, n), in draw order.
  std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t k);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  /// Independent stream seed derived from a master seed (splitmix64).
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace slicepoly
