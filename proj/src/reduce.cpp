#include <memory>
#include <numeric>
#include <stdexcept>

#include "slicepoly/constructions.hpp"

namespace slicepoly {

MultilinearPoly relabel(const MultilinearPoly& q, const std::vector<std::uint32_t>& perm) {
  if (perm.size() != static_cast<std::size_t>(q.n())) throw DimensionMismatch("relabel: permutation size");
  std::vector<VarImage> images;
  for (auto t : perm) images.push_back(VarImage::var(static_cast<int>(t)));
  auto out = apply_substitution(q, SubstitutionMap(q.n(), std::move(images)));
  if (q.certificate()) out.set_certificate(*q.certificate());
  return out;
}

MultilinearPoly permutation_product(const MultilinearPoly& q,
                                    const std::vector<std::vector<std::uint32_t>>& perms) {
  if (perms.empty()) throw std::invalid_argument("permutation_product: need r >= 1");
  MultilinearPoly out = relabel(q, perms[0]);
  for (std::size_t i = 1; i < perms.size(); ++i) out = multilinearize_product(out, relabel(q, perms[i]));
  return out;
}

MultilinearPoly error_reduce(const MultilinearPoly& q, int r, std::uint64_t seed) {
  if (r < 1) throw std::invalid_argument("error_reduce: need r >= 1");
  Rng rng(seed);
  std::vector<std::vector<std::uint32_t>> perms;
  for (int i = 0; i < r; ++i) perms.push_back(rng.permutation(static_cast<std::uint32_t>(q.n())));
  return permutation_product(q, perms);
}

ProbabilisticPoly::ProbabilisticPoly(int n, PrimeField field, int degree_bound, Sampler sampler,
                                     std::string description)
    : n_(n), field_(field), degree_bound_(degree_bound), sampler_(std::move(sampler)),
      description_(std::move(description)) {}

ProbabilisticPoly ProbabilisticPoly::finite(std::vector<WeightedPoly> support, std::string description) {
  if (support.empty()) throw std::invalid_argument("ProbabilisticPoly: empty support");
  Rational total = 0;
  int deg = 0;
  BigInt lcm = 1;
  for (auto& w : support) {
    if (w.poly.n() != support[0].poly.n() || !(w.poly.field() == support[0].poly.field()))
      throw DimensionMismatch("ProbabilisticPoly: support polynomials differ in arity or field");
    if (w.prob < 0) throw std::invalid_argument("ProbabilisticPoly: negative probability");
    total += w.prob;
    deg = std::max(deg, w.poly.degree());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), w.prob.get_den().get_mpz_t());
  }
  if (total != 1) throw std::invalid_argument("ProbabilisticPoly: probabilities must sum to 1");
  if (!lcm.fits_ulong_p()) throw CapExceeded("ProbabilisticPoly: probability denominators too large");

  // cumulative numerators over the common denominator
  auto shared = std::make_shared<std::vector<WeightedPoly>>(support);
  auto cumulative = std::make_shared<std::vector<std::uint64_t>>();
  BigInt acc = 0;
  for (auto& w : support) {
    acc += w.prob.get_num() * (lcm / w.prob.get_den());
    cumulative->push_back(acc.get_ui());
  }
  const std::uint64_t denom = lcm.get_ui();
  auto sampler = [shared, cumulative, denom](Rng& rng) {
    const std::uint64_t r = rng.below(denom);
    std::size_t i = 0;
    while ((*cumulative)[i] <= r) ++i;
    return (*shared)[i].poly;
  };
  ProbabilisticPoly out(support[0].poly.n(), support[0].poly.field(), deg, sampler, std::move(description));
  out.support_ = std::move(support);
  return out;
}

MultilinearPoly ProbabilisticPoly::sample(Rng& rng) const {
  auto p = sampler_(rng);
  if (p.degree() > degree_bound_)
    throw std::logic_error("ProbabilisticPoly: sample exceeds the declared degree bound");
  return p;
}

std::vector<Rational> ProbabilisticPoly::value_distribution(std::uint64_t point) const {
  if (!support_) throw std::logic_error("ProbabilisticPoly: value distribution needs a finite support");
  std::vector<Rational> dist(field_.p(), 0);
  for (auto& w : *support_) dist[w.poly.eval(point)] += w.prob;
  return dist;
}

int amplification_length(const Real& eps, const Real& delta) {
  if (!(eps > 0) || eps > Real(1) / 3) throw std::invalid_argument("pp_error_reduce: need 0 < eps <= 1/3");
  if (!(delta > 0) || !(delta < 1)) throw std::invalid_argument("pp_error_reduce: need 0 < delta < 1");
  long long ell = std::max<long long>(1, ceil_tolerant(3 * log(1 / delta) / log(1 / eps)));
  if (ell % 2 == 0) ++ell;
  return static_cast<int>(ell);
}

MultilinearPoly compose(const MultilinearPoly& outer, const std::vector<MultilinearPoly>& polys) {
  if (polys.size() != static_cast<std::size_t>(outer.n())) throw DimensionMismatch("compose: arity");
  if (polys.empty()) throw std::invalid_argument("compose: no inner polynomials");
  const int n = polys[0].n();
  const PrimeField F = polys[0].field();
  MultilinearPoly out(n, F);
  for (auto& t : outer.terms()) {
    MultilinearPoly prod = MultilinearPoly::constant(n, F, t.coeff);
    for (int j = 0; j < outer.n(); ++j)
      if (t.mask >> j & 1) prod = multilinearize_product(prod, polys[j]);
    out = add(out, prod);
  }
  return out;
}

AmplifiedPoly pp_error_reduce(const ProbabilisticPoly& P, const Real& eps, const Real& delta) {
  const int ell = amplification_length(eps, delta);
  const PrimeField F = P.field();
  if (ell == 1) return {P, 1, MultilinearPoly::variable(1, F, 0)};
  MultilinearPoly M = majority_poly(ell, F);
  auto sampler = [P, M, ell](Rng& rng) {
    std::vector<MultilinearPoly> copies;
    for (int i = 0; i < ell; ++i) copies.push_back(P.sample(rng));
    return compose(M, copies);
  };
  ProbabilisticPoly out(P.n(), F, ell * P.degree_bound(), sampler,
                        "Maj_" + std::to_string(ell) + " of independent copies of (" + P.description() + ")");
  return {std::move(out), ell, std::move(M)};
}

Rational amplified_error_at(const std::vector<Rational>& value_dist, const MultilinearPoly& majority,
                            Residue target) {
  const PrimeField F = majority.field();
  const std::uint32_t p = F.p();
  if (value_dist.size() != p) throw DimensionMismatch("amplified_error_at: distribution size");
  const int ell = majority.n();
  std::vector<Residue> support;
  for (Residue v = 0; v < p; ++v)
    if (value_dist[v] != 0) support.push_back(v);
  Rational err = 0;
  std::vector<std::size_t> idx(ell, 0);
  std::vector<Residue> y(ell);
  while (true) {
    Rational prob = 1;
    for (int j = 0; j < ell; ++j) {
      y[j] = support[idx[j]];
      prob *= value_dist[y[j]];
    }
    Residue v = 0;
    for (auto& t : majority.terms()) {
      Residue m = t.coeff;
      for (int j = 0; j < ell && m; ++j)
        if (t.mask >> j & 1) m = F.mul(m, y[j]);
      v = F.add(v, m);
    }
    if (v != target) err += prob;
    int j = 0;
    while (j < ell && ++idx[j] == support.size()) idx[j++] = 0;
    if (j == ell) break;
  }
  return err;
}

}  // namespace slicepoly
