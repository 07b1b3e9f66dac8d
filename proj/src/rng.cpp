#include "slicepoly/rng.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace slicepoly {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below(0)");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<std::uint32_t> Rng::permutation(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  shuffle(v);
  return v;
}

std::vector<std::uint32_t> Rng::sample_distinct(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("sample_distinct: k > n");
  // Partial Fisher-Yates; sparse when k is small relative to n.
  std::vector<std::uint32_t> out;
  out.reserve(k);
  if (k * 4ull >= n) {
    auto v = permutation(n);
    out.assign(v.begin(), v.begin() + k);
    return out;
  }
  std::unordered_map<std::uint32_t, std::uint32_t> moved;
  auto at = [&](std::uint32_t i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
    std::uint32_t vj = at(j);
    moved[j] = at(i);
    out.push_back(vj);
  }
  return out;
}

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace slicepoly
