#include "slicepoly/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slicepoly/symmetric.hpp"

namespace slicepoly {

Spectrum::Spectrum(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("Spectrum: needs n+1 >= 1 entries");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("Spectrum: entries must be 0/1");
}

Spectrum Spectrum::parse(const std::string& text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("Spectrum: bad character in '" + text + "'");
    bits.push_back(c == '1');
  }
  return Spectrum(std::move(bits));
}

std::string Spectrum::str() const {
  std::string s;
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

template <class Seq>
int border_period(const Seq& s) {
  const std::size_t len = s.size();
  if (len == 0) return 0;
  std::vector<std::size_t> fail(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return static_cast<int>(len - fail[len - 1]);
}

}  // namespace

int period(const std::vector<std::uint8_t>& s) { return border_period(s); }
int period(const Spectrum& s) { return border_period(s.bits()); }

PrimitiveRoot primitive_root(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
  const int len = static_cast<int>(w.size());
  const int b = border_period(w);
  if (len % b == 0) return {w.substr(0, b), len / b};
  return {w, 1};
}

bool window_distinct_check(const Spectrum& s) {
  const int b = period(s);
  if (b <= 1) throw std::invalid_argument("window_distinct_check: period must exceed 1");
  const auto& f = s.bits();
  const int last = s.n() + 1 - b;
  for (int i = 0; i <= last; ++i)
    for (int j = i + 1; j <= last; ++j) {
      if ((j - i) % b == 0) continue;
      if (std::equal(f.begin() + i, f.begin() + i + b, f.begin() + j)) return false;
    }
  return true;
}

int bounded_index(const Spectrum& s) {
  const int n = s.n();
  for (int k = 0; 2 * k <= n; ++k) {
    bool constant = true;
    for (int i = k; i <= n - k; ++i)
      if (s[i] != s[k]) {
        constant = false;
        break;
      }
    if (constant) return k;
  }
  return (n + 1) / 2;
}

StandardDecomposition standard_decomposition(const Spectrum& s) {
  const int n = s.n();
  if (n < 3) throw std::invalid_argument("standard_decomposition: degenerate window (n < 3)");
  const int lo = (n + 2) / 3 + 1;
  const int hi = 2 * n / 3;
  std::vector<std::uint8_t> g(n + 1);
  bool fallback = lo > hi;
  if (fallback) {
    std::fill(g.begin(), g.end(), s[n / 2]);
  } else {
    std::vector<std::uint8_t> window(s.bits().begin() + lo, s.bits().begin() + hi + 1);
    const int b = period(window);
    for (int i = 0; i <= n; ++i) g[i] = window[((i - lo) % b + b) % b];
  }
  std::vector<std::uint8_t> h(n + 1);
  for (int i = 0; i <= n; ++i) h[i] = s[i] ^ g[i];
  Spectrum gs(std::move(g)), hs(std::move(h));
  return {gs, hs, period(gs), bounded_index(hs), lo, hi, fallback};
}

Spectrum majority(int n) {
  std::vector<std::uint8_t> b(n + 1);
  for (int w = 0; w <= n; ++w) b[w] = 2 * w > n;
  return Spectrum(b);
}

Spectrum threshold(int n, int t) {
  if (t < 0 || t > n) throw std::invalid_argument("Thr: t out of range");
  std::vector<std::uint8_t> b(n + 1);
  for (int w = 0; w <= n; ++w) b[w] = w >= t;
  return Spectrum(b);
}

Spectrum exact_threshold(int n, int t) {
  if (t < 0 || t > n) throw std::invalid_argument("EThr: t out of range");
  std::vector<std::uint8_t> b(n + 1, 0);
  b[t] = 1;
  return Spectrum(b);
}

Spectrum mod_family(int n, int b, int i) {
  if (b < 2 || i < 0 || i >= b) throw std::invalid_argument("MOD: need b >= 2 and 0 <= i < b");
  std::vector<std::uint8_t> v(n + 1);
  for (int w = 0; w <= n; ++w) v[w] = w % b == i;
  return Spectrum(v);
}

Spectrum make_family(const std::string& kind, int n) {
  if (n < 0) throw std::invalid_argument("make_family: n < 0");
  std::vector<std::string> parts;
  std::stringstream ss(kind);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("make_family: empty name");
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("make_family: missing parameter in " + kind);
    return std::stoi(parts[i]);
  };
  const std::string& name = parts[0];
  if (name == "maj") return majority(n);
  if (name == "thr") return threshold(n, arg(1));
  if (name == "ethr") return exact_threshold(n, arg(1));
  if (name == "mod") return mod_family(n, arg(1), parts.size() > 2 ? arg(2) : 0);
  throw std::invalid_argument("make_family: unknown family " + kind);
}

std::string to_string(PdegBranch b) {
  switch (b) {
    case PdegBranch::kAperiodicOrBadPeriod: return "aperiodic-or-bad-period";
    case PdegBranch::kPurePPowerPeriod: return "pure-p-power-period";
    case PdegBranch::kMixed: return "mixed";
  }
  return "?";
}

PdegBranch pdeg_branch(int per_g, int B_h, std::uint32_t p) {
  // per_g = 1 counts as p^0
  if (per_g > 1 && !is_power_of(per_g, p)) return PdegBranch::kAperiodicOrBadPeriod;
  if (B_h == 0) return PdegBranch::kPurePPowerPeriod;
  return PdegBranch::kMixed;
}

PdegCase classify_pdeg(const Spectrum& s, std::uint32_t p, double eps) {
  const int n = s.n();
  if (!(eps > 0) || eps > 1.0 / 3 || std::log(eps) < -n * std::log(2.0) - 1e-12)
    throw std::invalid_argument("classify_pdeg: eps outside [2^-n, 1/3]");
  auto dec = standard_decomposition(s);
  const double L = std::log(1 / eps);
  const double root = std::sqrt(n * L);
  PdegCase c{pdeg_branch(dec.per_g, dec.B_h, p), 0, dec.per_g, dec.B_h, p, eps};
  switch (c.branch) {
    case PdegBranch::kAperiodicOrBadPeriod: c.value = root; break;
    case PdegBranch::kPurePPowerPeriod: c.value = std::min<double>(root, dec.per_g); break;
    case PdegBranch::kMixed: c.value = std::min(root, dec.per_g + std::sqrt(dec.B_h * L) + L); break;
  }
  return c;
}

PeriodicPoly periodic_exact_poly(int n, std::uint64_t q, const std::vector<Residue>& values, PrimeField F) {
  const std::uint32_t p = F.p();
  if (!is_power_of(q, p)) throw std::invalid_argument("periodic_exact_poly: q must be a power of p");
  if (q > static_cast<std::uint64_t>(n)) throw std::invalid_argument("periodic_exact_poly: q > n");
  if (values.size() != q) throw DimensionMismatch("periodic_exact_poly: need q values");
  int ell = 0;
  for (std::uint64_t x = q; x > 1; x /= p) ++ell;

  // basis value at weight w: prod_j C(w_j, c_j), the Lucas digit form of prod_j C(w, c_j p^j)
  auto basis_value = [&](std::uint64_t w, std::uint64_t c) {
    Residue v = 1;
    for (int j = 0; j < ell; ++j, w /= p, c /= p) v = F.mul(v, binomial_mod(w % p, c % p, p));
    return v;
  };
  FieldMatrix aug(F, q, q + 1);
  for (std::uint64_t w = 0; w < q; ++w) {
    for (std::uint64_t c = 0; c < q; ++c) aug.set(w, c, basis_value(w, c));
    aug.set(w, q, values[w] % p);
  }
  auto red = rref(aug);
  if (red.rank != q || red.pivot_cols.back() != q - 1)
    throw std::logic_error("periodic_exact_poly: product basis failed to span the digit functions");
  std::vector<Residue> coeffs(q);
  for (std::uint64_t i = 0; i < q; ++i) coeffs[red.pivot_cols[i]] = red.reduced.at(i, q);

  std::vector<Residue> table(n + 1);
  for (int w = 0; w <= n; ++w) {
    Residue v = 0;
    for (std::uint64_t c = 0; c < q; ++c)
      if (coeffs[c]) v = F.add(v, F.mul(coeffs[c], basis_value(w, c)));
    if (v != values[w % q] % p) throw std::logic_error("periodic_exact_poly: Lucas periodicity violated");
    table[w] = v;
  }
  auto sym = SymmetricPoly::from_values(n, F, std::move(table));
  if (sym.degree() >= static_cast<int>(q)) throw std::logic_error("periodic_exact_poly: degree >= q");
  return {sym.to_multilinear(), std::move(coeffs)};
}

}  // namespace slicepoly
