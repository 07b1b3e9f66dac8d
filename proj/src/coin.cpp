#include <stdexcept>

#include "slicepoly/constructions.hpp"

namespace slicepoly {

namespace {

Rational rational_pow(const Rational& x, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
  return Rational(num, den);
}

int floor_int(const Rational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return static_cast<int>(f.get_si());
}

}  // namespace

void CoinInstance::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("CoinInstance: p must be prime");
  if (delta <= 0 || delta > Rational(1, 2)) throw std::invalid_argument("CoinInstance: delta must lie in (0, 1/2]");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("CoinInstance: eps must lie in (0, 1)");
  if (C && *C < 1) throw std::invalid_argument("CoinInstance: C must be positive");
}

int CoinInstance::sized_n(int C_value) const {
  validate();
  Real x = Real(C_value) * log(1 / to_real(eps)) / to_real(delta * delta);
  long long n = std::max<long long>(2, ceil_tolerant(x));
  if (n % 2) ++n;
  if (n > (1 << 24)) throw CapExceeded("CoinInstance: sized n too large");
  return static_cast<int>(n);
}

Json coin_instance_to_json(const CoinInstance& c) {
  Json j{{"p", c.p}, {"delta", to_string(c.delta)}, {"eps", to_string(c.eps)}};
  if (c.C) j["C"] = *c.C;
  return j;
}

CoinInstance coin_instance_from_json(const Json& j) {
  CoinInstance c{j.at("p").get<std::uint32_t>(), parse_rational(j.at("delta").get<std::string>()),
                 parse_rational(j.at("eps").get<std::string>()), std::nullopt};
  if (j.contains("C")) c.C = j.at("C").get<int>();
  c.validate();
  return c;
}

Rational coin_error_exact(const std::vector<Residue>& table, const Rational& alpha, Side side) {
  if (table.empty()) throw DimensionMismatch("coin_error_exact: empty table");
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("coin_error_exact: alpha outside [0, 1]");
  const unsigned long n = table.size() - 1;
  const Rational beta = 1 - alpha;
  Rational total = 0;
  for (unsigned long w = 0; w <= n; ++w) {
    const bool accept = table[w] == 1;
    if (accept != (side == Side::kAccept)) continue;
    total += Rational(binomial(n, w)) * rational_pow(alpha, w) * rational_pow(beta, n - w);
  }
  total.canonicalize();
  return total;
}

CoinPolynomial coin_build_at(const CoinInstance& inst, int n) {
  inst.validate();
  if (n < 1) throw std::invalid_argument("coin_build: n must be positive");
  const Rational half(1, 2);
  const Rational& d = inst.delta;
  Rational e0 = n * (half - 3 * d / 2), e1 = n * (half - d / 2), e2 = n * (half + d / 2);
  e0.canonicalize();
  e1.canonicalize();
  e2.canonicalize();
  int lo = std::max(0, floor_int(e0) + 1);
  int hi = floor_int(e2);
  if (Rational(hi) == e2) --hi;
  hi = std::min(hi, n);
  if (lo > hi) throw std::invalid_argument("coin_build: empty window");

  WeightWindow win{n, lo, {}};
  std::vector<int> free;
  for (int w = lo; w <= hi; ++w) {
    if (Rational(w) == e1) free.push_back(w);
    win.targets.push_back(Rational(w) > e1 ? 1 : 0);
  }
  SymmetricPoly poly = interpolate_window(win).reduce(PrimeField(inst.p));
  Rational err_half = coin_error_exact(poly.values(), half, Side::kReject);
  Rational err_biased = coin_error_exact(poly.values(), half - d, Side::kAccept);
  const bool passed = err_half <= inst.eps && err_biased <= inst.eps;
  return {inst, inst.C.value_or(0), n, e0, e1, e2, lo, hi, std::move(free), std::move(poly),
          err_half, err_biased, passed, {}};
}

CoinPolynomial coin_build(const CoinInstance& inst) {
  inst.validate();
  if (inst.C) {
    auto out = coin_build_at(inst, inst.sized_n(*inst.C));
    out.tried = {{*inst.C, out.passed}};
    return out;
  }
  std::optional<CoinPolynomial> last;
  std::vector<std::pair<int, bool>> tried;
  for (int C : default_c_ladder()) {
    last.emplace(coin_build_at(inst, inst.sized_n(C)));
    last->C = C;
    tried.emplace_back(C, last->passed);
    if (last->passed) break;
  }
  last->tried = std::move(tried);
  return std::move(*last);
}

SubstitutionMap collapse_map(int source, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("coin_collapse: n must be positive");
  std::vector<VarImage> images;
  for (int i = 0; i < source; ++i)
    images.push_back(VarImage::var(static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
  return SubstitutionMap(n, std::move(images));
}

MultilinearPoly coin_collapse(const MultilinearPoly& P, int n, std::uint64_t seed) {
  Rng rng(seed);
  return apply_substitution(P, collapse_map(P.n(), n, rng));
}

MultilinearPoly xor_shift(const MultilinearPoly& P, std::uint64_t y) {
  const int n = P.n();
  if (n < 64 && (y >> n) != 0) throw DimensionMismatch("xor_shift: shift has bits beyond n");
  std::vector<VarImage> images;
  for (int i = 0; i < n; ++i) images.push_back(y >> i & 1 ? VarImage::neg(i) : VarImage::var(i));
  return apply_substitution(P, SubstitutionMap(n, std::move(images)));
}

RepetitionLift::RepetitionLift(int n_prime, int s, int r1, int r2)
    : n_prime_(n_prime), s_(s), r1_(r1), r2_(r2) {
  if (n_prime < 1 || s < 1) throw std::invalid_argument("RepetitionLift: need n' >= 1 and s >= 1");
  if (r2 < 0 || r2 >= s) throw std::invalid_argument("RepetitionLift: need 0 <= r2 < s");
  if (r1 < 0 || r1 > s + r2) throw std::invalid_argument("RepetitionLift: need 0 <= r1 <= s + r2");
}

bool RepetitionLift::consistent(int n, int k, int k_prime) const {
  return n == this->n() && k == k_prime * s_ + r1_ && k_prime >= 0 && k_prime <= n_prime_;
}

SubstitutionMap RepetitionLift::map(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n())) throw DimensionMismatch("RepetitionLift: permutation size");
  const int rep = n_prime_ * s_;
  std::vector<VarImage> images;
  for (auto t : perm) {
    const int ti = static_cast<int>(t);
    if (ti < rep) images.push_back(VarImage::var(ti / s_));
    else if (ti - rep < r1_) images.push_back(VarImage::one());
    else images.push_back(VarImage::zero());
  }
  return SubstitutionMap(n_prime_, std::move(images));
}

SubstitutionMap RepetitionLift::sample(Rng& rng) const {
  return map(rng.permutation(static_cast<std::uint32_t>(n())));
}

std::vector<std::uint8_t> RepetitionLift::image(std::uint64_t x, const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n())) throw DimensionMismatch("RepetitionLift: permutation size");
  const int rep = n_prime_ * s_;
  std::vector<std::uint8_t> z(n());
  for (int j = 0; j < n(); ++j) {
    const int t = static_cast<int>(perm[j]);
    z[j] = t < rep ? (x >> (t / s_) & 1) : (t - rep < r1_);
  }
  return z;
}

}  // namespace slicepoly
