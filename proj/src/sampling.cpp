#include <algorithm>
#include <stdexcept>

#include "slicepoly/constructions.hpp"

namespace slicepoly {

long long ceil_tolerant(const Real& x) {
  using boost::multiprecision::floor;
  Real f = floor(x);
  long long v = f.convert_to<long long>();
  return x - f < Real("1e-40") ? v : v + 1;
}

namespace {

// Integers strictly between two rationals, clipped to [0, hi_cap].
std::pair<int, int> open_range(const Rational& lo, const Rational& hi, int hi_cap) {
  BigInt a = lo.get_num() / lo.get_den();  // truncation toward zero
  if (Rational(a) > lo) a -= 1;            // floor(lo)
  BigInt first = a + 1;
  BigInt b = hi.get_num() / hi.get_den();
  if (Rational(b) < hi) b += 1;  // ceil(hi)
  BigInt last = b - 1;
  if (first < 0) first = 0;
  if (last > hi_cap) last = hi_cap;
  return {static_cast<int>(first.get_si()), static_cast<int>(last.get_si())};
}

}  // namespace

SampledJunta sampling_poly(int n, int k, int q, std::uint32_t p, const Real& eps, int C, std::uint64_t seed) {
  if (n < 2 || k <= 0 || q <= 0 || k + q > n)
    throw std::invalid_argument("sampling_poly: need 0 < k, q > 0 and k + q <= n");
  if (2 * k > n) throw std::invalid_argument("sampling_poly: requires k <= n/2");
  if (!(eps > 0) || !(eps < 1)) throw std::invalid_argument("sampling_poly: eps must lie in (0, 1)");
  if (C < 1) throw std::invalid_argument("sampling_poly: C must be positive");
  PrimeField F(p);

  Rational alpha(k, n), delta(q, n);
  alpha.canonicalize();
  delta.canonicalize();
  Real mreal = Real(C) * to_real(alpha / (delta * delta)) * log(1 / eps);
  long long m = std::max<long long>(1, ceil_tolerant(mreal));
  if (m > n) throw std::invalid_argument("sampling_poly: m = " + std::to_string(m) + " exceeds n");

  const Rational A = (alpha - delta / 2) * static_cast<long>(m);
  const Rational B = (alpha + delta / 2) * static_cast<long>(m);
  const Rational E = (alpha + 3 * delta / 2) * static_cast<long>(m);
  auto [lo, hi] = open_range(A, E, static_cast<int>(m));

  SampledJunta j{n, k, q, p, alpha, delta, eps, C, static_cast<int>(m), seed, {},
                 WindowInterpolant{static_cast<int>(m), lo, {}, {}},
                 SymmetricPoly::from_values(static_cast<int>(m), F, std::vector<Residue>(m + 1, 0)),
                 lo, hi, {}, {}, {}};
  if (lo <= hi) {
    WeightWindow win{static_cast<int>(m), lo, {}};
    for (int w = lo; w <= hi; ++w) {
      Rational rw(w);
      if (rw < B) {
        j.zero_weights.push_back(w);
        win.targets.push_back(0);
      } else if (rw > B) {
        j.one_weights.push_back(w);
        win.targets.push_back(1);
      } else {
        j.free_weights.push_back(w);
        win.targets.push_back(0);
      }
    }
    j.interpolant = interpolate_window(win);
    j.inner = j.interpolant.reduce(F);
  }
  Rng rng(seed);
  j.indices = rng.sample_distinct(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m));
  return j;
}

MultilinearPoly SampledJunta::materialize() const {
  if (n > kMaxVars) throw CapExceeded("SampledJunta: materialization needs n <= 63");
  std::vector<VarImage> images;
  for (auto i : indices) images.push_back(VarImage::var(static_cast<int>(i)));
  return apply_substitution(inner.to_multilinear(), SubstitutionMap(n, std::move(images)));
}

Residue SampledJunta::value_at(std::uint64_t point) const {
  int w = 0;
  for (auto i : indices) w += static_cast<int>(point >> i & 1);
  return inner.value(w);
}

Rational junta_exact_slice_error(const SampledJunta& j, int w, Target target) {
  if (w < 0 || w > j.n) throw std::invalid_argument("junta_exact_slice_error: weight out of range");
  const int m = j.m;
  BigInt miss = 0;
  for (int r = std::max(0, w - (j.n - m)); r <= std::min(m, w); ++r) {
    const bool zero = j.inner.value(r) == 0;
    if (zero == (target == Target::kNonzero)) miss += binomial(m, r) * binomial(j.n - m, w - r);
  }
  Rational out(miss, binomial(j.n, w));
  out.canonicalize();
  return out;
}

SamplingChoice sampling_choose(int n, int k, int q, std::uint32_t p, const Real& eps, std::uint64_t seed,
                               const std::vector<int>& ladder) {
  std::optional<SamplingChoice> last;
  std::vector<std::pair<int, bool>> tried;
  for (int C : ladder) {
    std::optional<SampledJunta> built;
    try {
      built.emplace(sampling_poly(n, k, q, p, eps, C, seed));
    } catch (const std::invalid_argument&) {
      tried.emplace_back(C, false);
      break;
    }
    SampledJunta& j = *built;
    Rational err_k = junta_exact_slice_error(j, k, Target::kZero);
    Rational miss_K = junta_exact_slice_error(j, k + q, Target::kNonzero);
    const bool ok = to_real(err_k) <= eps && to_real(miss_K) <= eps;
    tried.emplace_back(C, ok);
    last = SamplingChoice{std::move(j), err_k, miss_K, ok, {}};
    if (ok) break;
  }
  if (!last) throw std::invalid_argument("sampling_choose: no ladder constant gives m <= n");
  last->tried = std::move(tried);
  return std::move(*last);
}

}  // namespace slicepoly
