#include "slicepoly/bounds.hpp"

#include <stdexcept>

namespace slicepoly {

Real bernstein(int m, const Rational& q, const Real& theta) {
  if (m < 1 || q < 0 || q > 1 || !(theta > 0)) throw std::invalid_argument("bernstein: need m >= 1, q in [0,1], theta > 0");
  const Real var = 2 * Real(m) * to_real(q * (1 - q));
  return 2 * exp(-theta * theta / (var + 2 * theta / 3));
}

BinomRatio binom_ratio(int n, int r, int s) {
  if (r < 0 || r > s || 4 * s > n) throw std::invalid_argument("binom_ratio: need 0 <= r <= s <= n/4");
  BinomRatio out{n, r, s, Rational(binomial(n, n / 2 - s), binomial(n, n / 2 - r)), 0, 0, false, 0, 0, false};
  out.ratio.canonicalize();
  const Real gap(s - r), N(n);
  out.lower = exp(-8 * Real(s) * gap / N);
  out.upper = exp(-2 * Real(r) * gap / N);
  out.printed_lower = exp(8 * Real(s) * gap / N);
  out.printed_upper = exp(2 * Real(r) * gap / N);
  const Real ratio = to_real(out.ratio);
  out.holds = out.lower <= ratio && ratio <= out.upper;
  out.printed_holds = out.printed_lower <= ratio && ratio <= out.printed_upper;
  return out;
}

namespace {

void check_hyper_args(int n, int m) {
  if (n < 2 || n % 2 || m < 0 || 2 * m > n) throw std::invalid_argument("hyper_ratio: need n even and m <= n/2");
}

BigInt R(int n, int m, int j) {
  return binomial(n / 2, m / 2 - j) * binomial(n / 2, (m + 1) / 2 + j);
}

}  // namespace

HyperStep hyper_step(int n, int m, int j) {
  check_hyper_args(n, m);
  if (j < 0 || j + 1 > m / 2) throw std::invalid_argument("hyper_step: need 0 <= j < floor(m/2)");
  HyperStep st{j, Rational(R(n, m, j + 1), R(n, m, j)), Rational(m - 2 * j, m), false, false};
  st.ratio.canonicalize();
  st.linear.canonicalize();
  st.linear_ok = st.ratio <= st.linear;
  st.exp_ok = to_real(st.ratio) <= exp(-Real(2 * j) / m);
  return st;
}

HyperRatio hyper_ratio(int n, int m, int k, int ell) {
  check_hyper_args(n, m);
  if (ell < 0 || ell > k || k > m / 2) throw std::invalid_argument("hyper_ratio: need 0 <= ell <= k <= floor(m/2)");
  HyperRatio out{n, m, k, ell, Rational(R(n, m, k), R(n, m, ell)), 0, false, {}, true};
  out.ratio.canonicalize();
  out.bound = m == 0 ? Real(1) : exp(-Real(static_cast<long>(k) * (k - 1) - static_cast<long>(ell) * (ell - 1)) / m);
  out.holds = to_real(out.ratio) <= out.bound;
  for (int j = ell; j < k; ++j) {
    out.steps.push_back(hyper_step(n, m, j));
    out.steps_ok = out.steps_ok && out.steps.back().linear_ok && out.steps.back().exp_ok;
  }
  return out;
}

}  // namespace slicepoly
