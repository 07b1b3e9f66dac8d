#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicepoly/cube.hpp"

namespace slicepoly {

/// Spec f(0..n) of a symmetric Boolean function.
class Spectrum {
 public:
  explicit Spectrum(std::vector<std::uint8_t> bits);
  /// Parses a string of n+1 characters '0'/'1', index 0 first.
  static Spectrum parse(const std::string& text);

  int n() const { return static_cast<int>(bits_.size()) - 1; }
  std::uint8_t operator[](int i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string str() const;
  bool operator==(const Spectrum&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Smallest b >= 1 with s[i] = s[i+b] for all valid i (n+1 if none smaller).
int period(const std::vector<std::uint8_t>& s);
int period(const Spectrum& s);

struct PrimitiveRoot {
  std::string z;
  int k;
};
PrimitiveRoot primitive_root(const std::string& w);

/// All length-b windows at offsets that differ mod b are distinct (b = period > 1).
bool window_distinct_check(const Spectrum& s);

/// Smallest k with s constant on [k, n-k]; 0 for a constant spectrum.
int bounded_index(const Spectrum& s);

struct StandardDecomposition {
  Spectrum g;
  Spectrum h;
  int per_g;
  int B_h;
  int window_lo, window_hi;  // empty when lo > hi
  bool window_fallback;      // empty window: g is the constant f(floor(n/2))
};

StandardDecomposition standard_decomposition(const Spectrum& s);

/// Family names: "maj", "thr:t", "ethr:t", "mod:b:i" (and "mod:b" for i = 0).
Spectrum make_family(const std::string& kind, int n);
Spectrum majority(int n);
Spectrum threshold(int n, int t);
Spectrum exact_threshold(int n, int t);
Spectrum mod_family(int n, int b, int i);

enum class PdegBranch { kAperiodicOrBadPeriod = 1, kPurePPowerPeriod = 2, kMixed = 3 };
std::string to_string(PdegBranch b);

struct PdegCase {
  PdegBranch branch;
  double value;  // bound shape with constant 1
  int per_g;
  int B_h;
  std::uint32_t p;
  double eps;
};

/// Branch selection only; exposed for decision-table tests.
PdegBranch pdeg_branch(int per_g, int B_h, std::uint32_t p);
PdegCase classify_pdeg(const Spectrum& s, std::uint32_t p, double eps);

struct PeriodicPoly {
  MultilinearPoly poly;
  /// Coefficient of prod_j e_{c_j p^j}, indexed by c = sum_j c_j p^j.
  std::vector<Residue> product_basis_coeffs;
};

/// Degree < q polynomial with value values[w mod q] at every weight w.
PeriodicPoly periodic_exact_poly(int n, std::uint64_t q, const std::vector<Residue>& values, PrimeField field);

}  // namespace slicepoly
