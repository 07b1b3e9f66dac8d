#include <stdexcept>

#include "slicepoly/constructions.hpp"

namespace slicepoly {

namespace {

struct LucasDigit {
  std::uint64_t power;
  std::uint32_t digit;
};

LucasDigit lucas_digit(int n, int i, int q, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("lucas_poly: p must be prime");
  if (q <= 0 || i < 0 || i + q > n)
    throw std::invalid_argument("lucas_poly: need q > 0, i >= 0 and i + q <= n");
  const std::uint64_t pl = largest_power_dividing(q, p);
  return {pl, static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) / pl) % p)};
}

}  // namespace

SymmetricPoly lucas_symmetric(int n, int i, int q, std::uint32_t p) {
  PrimeField F(p);
  auto [pl, a] = lucas_digit(n, i, q, p);
  std::vector<Residue> coeffs(n + 1, 0);
  coeffs[0] = F.neg(a);
  coeffs[pl] = F.add(coeffs[pl], 1);
  return SymmetricPoly::from_ebasis(n, F, std::move(coeffs));
}

MultilinearPoly lucas_poly(int n, int i, int q, std::uint32_t p) {
  return lucas_symmetric(n, i, q, p).to_multilinear();
}

void WeightWindow::validate() const {
  if (targets.empty()) throw std::invalid_argument("WeightWindow: empty interval");
  if (a < 0 || last() > n) throw std::invalid_argument("WeightWindow: interval outside [0, n]");
  for (int t : targets)
    if (t != 0 && t != 1) throw std::invalid_argument("WeightWindow: targets must be 0/1");
}

int WindowInterpolant::integer_degree() const {
  for (int i = static_cast<int>(ecoeffs.size()) - 1; i >= 0; --i)
    if (ecoeffs[i] != 0) return i;
  return 0;
}

BigInt WindowInterpolant::value(int w) const {
  BigInt v = 0;
  for (std::size_t i = 0; i < ecoeffs.size() && static_cast<int>(i) <= w; ++i)
    if (ecoeffs[i] != 0) v += ecoeffs[i] * binomial(w, i);
  return v;
}

SymmetricPoly WindowInterpolant::reduce(PrimeField field) const {
  std::vector<Residue> coeffs(n + 1, 0);
  for (std::size_t i = 0; i < ecoeffs.size(); ++i) coeffs[i] = reduce_mod(ecoeffs[i], field.p());
  return SymmetricPoly::from_ebasis(n, field, std::move(coeffs));
}

WindowInterpolant interpolate_window(const WeightWindow& w) {
  w.validate();
  const int L = w.length();
  WindowInterpolant out{w.n, w.a, std::vector<BigInt>(L), std::vector<BigInt>(L)};

  // Newton forward differences of f on a, a+1, ...
  std::vector<BigInt> row(w.targets.begin(), w.targets.end());
  for (int j = 0; j < L; ++j) {
    out.differences[j] = row[0];
    for (int t = 0; t + 1 < static_cast<int>(row.size()); ++t) row[t] = row[t + 1] - row[t];
    row.pop_back();
  }
  // C(|x| - a, j) = sum_i C(|x|, i) C(-a, j - i)
  std::vector<BigInt> neg_a(L);
  for (int t = 0; t < L; ++t) neg_a[t] = binomial_general(BigInt(-w.a), t);
  for (int i = 0; i < L; ++i) {
    BigInt c = 0;
    for (int j = i; j < L; ++j)
      if (out.differences[j] != 0) c += out.differences[j] * neg_a[j - i];
    out.ecoeffs[i] = c;
  }
  return out;
}

MultilinearPoly interpolate_window(const WeightWindow& w, PrimeField field) {
  return interpolate_window(w).reduce(field).to_multilinear();
}

MultilinearPoly majority_poly(int ell, PrimeField field) {
  if (ell < 1 || ell % 2 == 0) throw std::invalid_argument("majority_poly: ell must be odd and positive");
  WeightWindow w{ell, 0, std::vector<int>(ell + 1)};
  for (int i = 0; i <= ell; ++i) w.targets[i] = 2 * i > ell;
  return interpolate_window(w, field);
}

}  // namespace slicepoly
