#pragma once

#include <vector>

#include "slicepoly/numeric.hpp"

namespace slicepoly {

/// 2 exp(-theta^2 / (2 m q (1-q) + 2 theta / 3)).
Real bernstein(int m, const Rational& q, const Real& theta);

struct BinomRatio {
  int n, r, s;
  Rational ratio;  // C(n, floor(n/2) - s) / C(n, floor(n/2) - r)
  Real lower;      // e^{-8 s (s-r) / n}
  Real upper;      // e^{-2 r (s-r) / n}
  bool holds;
  /// The bounds with exponent factor (r - s) instead of (s - r).
  Real printed_lower, printed_upper;
  bool printed_holds;
};

/// Requires 0 <= r <= s <= n/4.
BinomRatio binom_ratio(int n, int r, int s);

struct HyperStep {
  int j;
  Rational ratio;   // R(j+1) / R(j)
  Rational linear;  // 1 - 2j/m
  bool linear_ok;   // exact
  bool exp_ok;      // ratio <= exp(-2j/m)
};

struct HyperRatio {
  int n, m, k, ell;
  Rational ratio;  // R(k) / R(ell)
  Real bound;      // exp(-(k(k-1) - ell(ell-1)) / m)
  bool holds;
  std::vector<HyperStep> steps;
  bool steps_ok;
};

/// R(j) = C(n/2, floor(m/2) - j) C(n/2, ceil(m/2) + j); n even, m <= n/2, ell <= k <= floor(m/2).
HyperRatio hyper_ratio(int n, int m, int k, int ell);
HyperStep hyper_step(int n, int m, int j);

}  // namespace slicepoly
