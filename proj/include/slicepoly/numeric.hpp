#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

namespace slicepoly {

using BigInt = mpz_class;
using Rational = mpq_class;
// 50 significant decimal digits; the thresholds of interest go down to e^-3200.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Thrown when an operation would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown on mismatched arities or vector lengths.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Caps {
  std::uint64_t max_slice_points = 10'000'000;
  std::uint64_t max_terms = 10'000'000;
  std::uint64_t max_columns = 20'000;
  std::uint64_t max_rows = 1'000'000;
  int max_full_cube_n = 16;
  int max_galvin_degree = 25;
  int max_galvin_enum_n = 28;
  unsigned threads = 1;
};

/// Process-wide caps; the CLI overrides these from its flags.
Caps& caps();

BigInt binomial(std::uint64_t n, std::uint64_t k);
/// C(x, k) for any integer x (generalized binomial, x may be negative).
BigInt binomial_general(const BigInt& x, std::uint64_t k);
/// C(n, k) mod p via Lucas's theorem.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

bool is_power_of(std::uint64_t q, std::uint32_t p);
/// Largest power of p dividing q (q > 0).
std::uint64_t largest_power_dividing(std::uint64_t q, std::uint32_t p);
std::uint32_t reduce_mod(const BigInt& x, std::uint32_t p);

Real to_real(const Rational& r);
Real to_real(const BigInt& z);
/// Parses "a/b", an integer, or a decimal such as "0.05" exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Real& x, int digits = 30);

}  // namespace slicepoly
