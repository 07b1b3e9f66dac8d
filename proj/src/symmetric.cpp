#include "slicepoly/symmetric.hpp"

#include <stdexcept>

namespace slicepoly {

namespace {

// Lucas's theorem makes C(i,j) mod p a product over base-p digits, so both
// transforms are tensor powers of a p x p kernel. Large p falls back to Pascal rows.
std::vector<Residue> transform(const std::vector<Residue>& in, PrimeField F, bool inverse_pascal) {
  const std::uint32_t p = F.p();
  const std::size_t len = in.size();
  if (len == 0) return {};
  std::size_t size = 1;
  int digits = 0;
  while (size < len && p <= 64) {
    size *= p;
    ++digits;
  }
  if (p > 64 || size > 8 * len + 64) {
    std::vector<Residue> out(len, 0), row{1};
    for (std::size_t i = 0; i < len; ++i) {
      if (i > 0) {
        row.push_back(1);
        for (std::size_t j = i - 1; j > 0; --j) row[j] = F.add(row[j], row[j - 1]);
      }
      Residue acc = 0;
      for (std::size_t j = 0; j <= i; ++j) {
        Residue c = row[j];
        if (inverse_pascal && (i - j) % 2) c = F.neg(c);
        acc = F.add(acc, F.mul(c, in[j]));
      }
      out[i] = acc;
    }
    return out;
  }
  std::vector<std::vector<Residue>> kernel(p, std::vector<Residue>(p, 0));
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b <= a; ++b) {
      Residue c = binomial_mod(a, b, p);
      kernel[a][b] = inverse_pascal && (a - b) % 2 ? F.neg(c) : c;
    }
  std::vector<Residue> buf(size, 0);
  for (std::size_t i = 0; i < len; ++i) buf[i] = in[i] % p;
  std::vector<Residue> col(p);
  std::size_t stride = 1;
  for (int d = 0; d < digits; ++d, stride *= p) {
    for (std::size_t base = 0; base < size; ++base) {
      if ((base / stride) % p != 0) continue;
      for (std::uint32_t a = 0; a < p; ++a) col[a] = buf[base + a * stride];
      for (std::uint32_t a = 0; a < p; ++a) {
        Residue acc = 0;
        for (std::uint32_t b = 0; b <= a; ++b)
          if (kernel[a][b] && col[b]) acc = F.add(acc, F.mul(kernel[a][b], col[b]));
        buf[base + a * stride] = acc;
      }
    }
  }
  buf.resize(len);
  return buf;
}

}  // namespace

std::vector<Residue> values_to_ebasis(const std::vector<Residue>& values, PrimeField field) {
  return transform(values, field, true);
}

std::vector<Residue> ebasis_to_values(const std::vector<Residue>& coeffs, PrimeField field) {
  return transform(coeffs, field, false);
}

SymmetricPoly SymmetricPoly::from_values(int n, PrimeField field, std::vector<Residue> values) {
  if (n < 0 || values.size() != static_cast<std::size_t>(n) + 1)
    throw DimensionMismatch("SymmetricPoly: value table must have n+1 entries");
  SymmetricPoly s(n, field);
  for (auto& v : values) v %= field.p();
  s.ebasis_ = values_to_ebasis(values, field);
  s.values_ = std::move(values);
  return s;
}

SymmetricPoly SymmetricPoly::from_ebasis(int n, PrimeField field, std::vector<Residue> coeffs) {
  if (n < 0 || coeffs.size() > static_cast<std::size_t>(n) + 1)
    throw DimensionMismatch("SymmetricPoly: more e-basis coefficients than n+1");
  coeffs.resize(n + 1, 0);
  SymmetricPoly s(n, field);
  for (auto& c : coeffs) c %= field.p();
  s.values_ = ebasis_to_values(coeffs, field);
  s.ebasis_ = std::move(coeffs);
  return s;
}

int SymmetricPoly::degree() const {
  for (int i = n_; i >= 0; --i)
    if (ebasis_[i]) return i;
  return 0;
}

bool SymmetricPoly::is_zero() const {
  for (auto c : ebasis_)
    if (c) return false;
  return true;
}

MultilinearPoly SymmetricPoly::to_multilinear() const {
  if (n_ > kMaxVars) throw CapExceeded("SymmetricPoly: arity above 63 cannot be materialized");
  BigInt total = 0;
  for (int i = 0; i <= n_; ++i)
    if (ebasis_[i]) total += binomial(n_, i);
  if (total > caps().max_terms) throw CapExceeded("SymmetricPoly: expansion exceeds the term cap");
  std::vector<Term> terms;
  for (int i = 0; i <= n_; ++i)
    if (ebasis_[i])
      for (auto pt : SliceRange(n_, i)) terms.push_back({pt.bits, ebasis_[i]});
  auto p = MultilinearPoly::from_terms(n_, field_, std::move(terms));
  p.set_certificate(values_);
  return p;
}

}  // namespace slicepoly
