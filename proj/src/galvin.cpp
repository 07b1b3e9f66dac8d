#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "slicepoly/constructions.hpp"

namespace slicepoly {

void GalvinFamily::validate() const {
  if (n < 2 || n > 64 || n % 2) throw std::invalid_argument("GalvinFamily: n must be even and in [2, 64]");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (auto& it : items) {
    if (it.u & ~full) throw DimensionMismatch("GalvinFamily: u has bits beyond n");
    if (std::popcount(it.u) != n / 2) throw std::invalid_argument("GalvinFamily: every u must have weight n/2");
  }
}

Json galvin_to_json(const GalvinFamily& f) {
  Json items = Json::array();
  for (auto& it : f.items) items.push_back({{"u_mask", to_hex(it.u)}, {"b", it.b}});
  Json j{{"n", f.n}, {"items", items}};
  if (f.t) j["t"] = *f.t;
  return j;
}

GalvinFamily galvin_from_json(const Json& j) {
  GalvinFamily f;
  f.n = j.at("n").get<int>();
  if (j.contains("t")) f.t = j.at("t").get<int>();
  for (auto& it : j.at("items")) f.items.push_back({from_hex(it.at("u_mask").get<std::string>()), it.at("b").get<int>()});
  f.shifted = f.n % 4 != 0;
  f.degenerate = f.t && 4 * *f.t >= f.n;
  f.validate();
  return f;
}

GalvinFamily galvin_tight_family(int n, const Real& eps, int C) {
  if (n < 2 || n > 64 || n % 2) throw std::invalid_argument("galvin_tight_family: n must be even and in [2, 64]");
  if (!(eps > 0) || !(eps < 1)) throw std::invalid_argument("galvin_tight_family: eps must lie in (0, 1)");
  if (C < 1) throw std::invalid_argument("galvin_tight_family: C must be positive");
  const int t = static_cast<int>(ceil_tolerant(Real(C) * sqrt(Real(n) * log(1 / eps))));
  GalvinFamily f;
  f.n = n;
  f.t = t;
  f.shifted = n % 4 != 0;
  f.degenerate = 4 * t >= n;
  const std::uint64_t u = (std::uint64_t{1} << (n / 2)) - 1;
  const int centre = n / 4;
  for (int i = 0; i <= 2 * t; ++i) f.items.push_back({u, centre - t + i});
  return f;
}

Coverage galvin_coverage(const GalvinFamily& f, bool allow_monte_carlo, std::uint64_t seed,
                         std::uint64_t samples) {
  f.validate();
  const int n = f.n, h = n / 2;
  if (f.items.empty()) return {Rational(0)};
  const BigInt total = binomial(n, h);

  bool same_u = true;
  for (auto& it : f.items) same_u = same_u && it.u == f.items[0].u;
  if (same_u) {
    const int wu = std::popcount(f.items[0].u);
    std::set<int> bs;
    for (auto& it : f.items) bs.insert(it.b);
    BigInt hit = 0;
    for (int b : bs)
      if (b >= 0 && b <= wu && h - b >= 0 && h - b <= n - wu) hit += binomial(wu, b) * binomial(n - wu, h - b);
    Rational v(hit, total);
    v.canonicalize();
    return {v};
  }

  auto covered = [&](std::uint64_t v) {
    for (auto& it : f.items)
      if (std::popcount(it.u & v) == it.b) return true;
    return false;
  };
  if (n <= caps().max_galvin_enum_n && total <= caps().max_slice_points) {
    std::uint64_t hit = 0;
    for (auto pt : enumerate_slice(n, h)) hit += covered(pt.bits);
    Rational v(BigInt(static_cast<unsigned long>(hit)), total);
    v.canonicalize();
    return {v};
  }
  if (!allow_monte_carlo)
    throw CapExceeded("galvin_coverage: slice too large for exact coverage; enable Monte Carlo");
  Rng rng(seed);
  std::uint64_t hit = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t v = 0;
    for (auto i : rng.sample_distinct(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(h)))
      v |= std::uint64_t{1} << i;
    hit += covered(v);
  }
  const double phat = static_cast<double>(hit) / static_cast<double>(samples);
  return {Rational(BigInt(static_cast<unsigned long>(hit)), BigInt(static_cast<unsigned long>(samples))), false,
          2.576 * std::sqrt(phat * (1 - phat) / static_cast<double>(samples)), samples};
}

GalvinChoice galvin_choose(int n, const Real& eps, const std::vector<int>& ladder) {
  std::optional<GalvinChoice> last;
  std::vector<std::pair<int, bool>> tried;
  for (int C : ladder) {
    GalvinFamily f = galvin_tight_family(n, eps, C);
    Coverage cov = galvin_coverage(f);
    const bool ok = to_real(cov.value) >= 1 - eps;
    tried.emplace_back(C, ok);
    last = GalvinChoice{std::move(f), C, cov, ok, {}};
    if (ok) break;
  }
  if (!last) throw std::invalid_argument("galvin_choose: empty ladder");
  last->tried = std::move(tried);
  return std::move(*last);
}

std::vector<std::size_t> galvin_retained(const GalvinFamily& f, bool balance_filter) {
  if (balance_filter && !f.t) throw std::invalid_argument("galvin_poly: balance filter needs t");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.items.size(); ++i)
    if (!balance_filter || std::abs(4 * f.items[i].b - f.n) <= 4 * *f.t) keep.push_back(i);
  return keep;
}

MultilinearPoly galvin_poly(const GalvinFamily& f, std::uint32_t p, bool balance_filter) {
  f.validate();
  if (f.n > kMaxVars) throw CapExceeded("galvin_poly: n must be at most 63");
  PrimeField F(p);
  auto keep = galvin_retained(f, balance_filter);
  if (static_cast<int>(keep.size()) > caps().max_galvin_degree)
    throw CapExceeded("galvin_poly: more than " + std::to_string(caps().max_galvin_degree) + " factors");
  MultilinearPoly out = MultilinearPoly::constant(f.n, F, 1);
  for (auto i : keep) {
    const auto& it = f.items[i];
    std::vector<Term> terms{{0, F.neg(F.reduce(it.b))}};
    for (int j = 0; j < f.n; ++j)
      if (it.u >> j & 1) terms.push_back({std::uint64_t{1} << j, 1});
    out = multilinearize_product(out, MultilinearPoly::from_terms(f.n, F, std::move(terms)));
  }
  return out;
}

}  // namespace slicepoly
