#include "slicepoly/distinguish.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <stdexcept>

#include "slicepoly/parallel.hpp"
#include "slicepoly/rng.hpp"

namespace slicepoly {

SliceDistinguishInstance SliceDistinguishInstance::make(int n, std::uint32_t p, int k, int K) {
  PrimeField check(p);
  (void)check;
  if (n < 1 || k < 0 || K < 0 || k > n || K > n) throw std::invalid_argument("instance: slices out of range");
  if (k == K) throw std::invalid_argument("instance: k == K (gap 0)");
  if (k == 0 || k == n) throw std::invalid_argument("instance: alpha = 0 (k in {0, n})");
  SliceDistinguishInstance inst;
  inst.n = n;
  inst.p = p;
  inst.k = k;
  inst.K = K;
  inst.q = std::abs(K - k);
  inst.alpha = std::min(Rational(k, n), Rational(n - k, n));
  inst.alpha.canonicalize();
  inst.delta = Rational(inst.q, n);
  inst.delta.canonicalize();
  inst.q_prime = largest_power_dividing(inst.q, p);
  inst.s = inst.q / inst.q_prime;
  if (inst.s == 1) {
    inst.t = inst.q;
    inst.ell = Rational(static_cast<long>(inst.q) * inst.q, n);
    inst.ell->canonicalize();
  }
  return inst;
}

RobustThresholds thresholds(const SliceDistinguishInstance& inst) {
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  RobustThresholds th;
  th.exponent = inst.delta * inst.delta * inst.n / inst.alpha;
  const Real x = to_real(th.exponent);
  const Real s = Real(inst.s);
  th.eps0_main = std::min<Real>(exp(-100 * x), Real(1) / 1000);
  th.eps1_main = exp(-x / 100);
  th.eps0_ext = std::min<Real>(exp(-1000 * x / s), Real(1) / 2000);
  th.eps1_ext = exp(-x / (1000 * s));
  th.dij_eps_lo = boost::multiprecision::pow(Real(2), Real(-inst.n) / 100);
  th.dij_eps_hi = exp(Real(-200));
  th.dij_ell_lo = 100;
  th.dij_ell_hi = log(1 / th.dij_eps_lo) / 2;
  const long q = inst.q, k = inst.k, n = inst.n;
  th.main_side_conditions = 100 * q < k && k < n - 100 * q;
  th.ext_side_conditions = 200 * q < k && k < n - 200 * q;
  return th;
}

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::kExact: return "exact";
    case SearchMode::kHeuristic: return "heuristic-upper-bound";
    case SearchMode::kExhaustive: return "exhaustive";
  }
  return "?";
}

DegreeSearch min_separating_degree(int n, PrimeField field, std::span<const std::uint64_t> E,
                                   std::span<const std::uint64_t> targets, int d_min, int d_max,
                                   std::uint64_t need) {
  DegreeSearch res;
  for (int d = d_min; d <= std::min(d_max, n); ++d) {
    ClosureOracle oracle(n, d, field, E);
    std::vector<char> out(targets.size(), 0);
    if (oracle.ideal_dimension() > 0)
      parallel_for(targets.size(), [&](std::size_t i) { out[i] = !oracle.contains(targets[i]); });
    std::uint64_t count = std::count(out.begin(), out.end(), 1);
    res.outside_by_degree.push_back(count);
    if (count >= need && count > 0) {
      res.degree = d;
      res.outside_count = count;
      res.first_outside = targets[std::find(out.begin(), out.end(), 1) - out.begin()];
      return res;
    }
  }
  return res;
}

namespace {

void validate_slices(int n, int k, int K) {
  if (n < 1 || n > kMaxVars || k < 0 || K < 0 || k > n || K > n)
    throw std::invalid_argument("slices out of range");
  if (k == K) throw std::invalid_argument("k == K: no distinguisher exists");
}

// Fills the witness fields of a report from a separating search on E vs slice K.
void attach_witness(DistinguishReport& rep, int n, PrimeField F, std::span<const std::uint64_t> E,
                    const DegreeSearch& ds) {
  ClosureOracle oracle(n, ds.degree, F, E);
  auto w = oracle.separating_poly(*ds.first_outside);
  if (!w) throw std::logic_error("outside point has no separating polynomial");
  for (auto a : E)
    if (w->eval(a)) throw std::logic_error("witness does not vanish on E");
  rep.psi_k = slice_stats(*w, rep.k).psi;
  rep.psi_K = slice_stats(*w, rep.K).psi;
  rep.witness = std::move(*w);
}

void fill_interval(DistinguishReport& rep) {
  rep.psi_K_upper = Rational(BigInt(static_cast<unsigned long>(rep.outside_count)), rep.slice_K_size);
  rep.psi_K_upper.canonicalize();
  rep.psi_K_expected = rep.psi_K_upper * Rational(rep.p - 1, rep.p);
}

}  // namespace

DistinguishReport exact_min_degree(int n, std::uint32_t p, int k, int K) {
  validate_slices(n, k, K);
  PrimeField F(p);
  auto Ek = slice_masks(n, k);
  auto EK = slice_masks(n, K);
  DistinguishReport rep;
  rep.n = n;
  rep.p = p;
  rep.k = k;
  rep.K = K;
  rep.mode = SearchMode::kExact;
  rep.slice_k_size = binomial(n, k);
  rep.slice_K_size = binomial(n, K);
  auto ds = min_separating_degree(n, F, Ek, EK, 0, n);
  if (ds.degree < 0) throw std::logic_error("no distinguisher up to degree n");
  rep.degree = ds.degree;
  rep.outside_by_degree = ds.outside_by_degree;
  rep.outside_count = ds.outside_count;
  fill_interval(rep);
  attach_witness(rep, n, F, Ek, ds);
  return rep;
}

std::vector<SweepRow> hegedus_sweep(std::uint32_t p, int n_lo, int n_hi, bool composite) {
  std::vector<SweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n)
    for (int q = 1; 2 * q <= n; ++q) {
      std::uint64_t qp = largest_power_dividing(q, p);
      bool is_pp = qp == static_cast<std::uint64_t>(q);
      if (is_pp == composite) continue;
      for (int k = q; k <= n - q; ++k) {
        auto rep = exact_min_degree(n, p, k, k + q);
        rows.push_back({n, k, k + q, rep.degree, qp, rep.degree == static_cast<int>(qp)});
      }
    }
  return rows;
}

std::uint64_t removals_for_budget(const SliceDistinguishInstance& inst, const Rational& budget) {
  if (budget < 0 || budget >= 1) throw std::invalid_argument("eps0_budget must lie in [0, 1)");
  Rational r = budget * Rational(binomial(inst.n, inst.k));
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return fl.get_ui();
}

namespace {

std::vector<std::uint64_t> without(const std::vector<std::uint64_t>& all, const std::vector<std::uint64_t>& removed) {
  std::vector<std::uint64_t> sorted_removed = removed;
  std::sort(sorted_removed.begin(), sorted_removed.end());
  std::vector<std::uint64_t> out;
  for (auto a : all)
    if (!std::binary_search(sorted_removed.begin(), sorted_removed.end(), a)) out.push_back(a);
  return out;
}

std::uint64_t need_for_target(const SliceDistinguishInstance& inst, const Rational& target) {
  if (target <= 0) return 1;
  // (1 - 1/p) * c / C(n,K) >= target
  Rational c = target * Rational(binomial(inst.n, inst.K)) * Rational(inst.p, inst.p - 1);
  BigInt ce;
  mpz_cdiv_q(ce.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  return std::max<std::uint64_t>(1, ce.get_ui());
}

// Greedy removal order: repeatedly drop the pivot point with the fewest dependents
// at one degree below the current minimum.
std::vector<std::uint64_t> greedy_order(const SliceDistinguishInstance& inst, PrimeField F,
                                        const std::vector<std::uint64_t>& Ek,
                                        const std::vector<std::uint64_t>& EK, std::uint64_t removals,
                                        std::uint64_t need) {
  std::vector<std::uint64_t> removed, cur = Ek;
  for (std::uint64_t step = 0; step < removals; ++step) {
    auto ds = min_separating_degree(inst.n, F, cur, EK, 0, inst.n, need);
    if (ds.degree <= 0) break;
    ClosureOracle oracle(inst.n, ds.degree - 1, F, cur);
    auto usage = oracle.point_usage();
    std::size_t best = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (usage[i] < 0) continue;
      if (best == cur.size() || usage[i] < usage[best] || (usage[i] == usage[best] && cur[i] < cur[best]))
        best = i;
    }
    if (best == cur.size()) break;
    removed.push_back(cur[best]);
    cur.erase(cur.begin() + best);
  }
  return removed;
}

}  // namespace

DistinguishReport robust_search_removals(const SliceDistinguishInstance& inst, std::uint64_t removals,
                                         const RobustOptions& opts) {
  validate_slices(inst.n, inst.k, inst.K);
  PrimeField F(inst.p);
  auto Ek = slice_masks(inst.n, inst.k);
  auto EK = slice_masks(inst.n, inst.K);
  removals = std::min<std::uint64_t>(removals, Ek.size());
  const std::uint64_t need = need_for_target(inst, opts.target_psi);

  std::vector<std::vector<std::uint64_t>> candidates;
  if (opts.strategy == RobustStrategy::kGreedy || removals == 0) {
    candidates.push_back(opts.strategy == RobustStrategy::kGreedy
                             ? greedy_order(inst, F, Ek, EK, removals, need)
                             : std::vector<std::uint64_t>{});
  } else {
    for (int r = 0; r < std::max(1, opts.restarts); ++r) {
      Rng rng(Rng::derive(opts.seed, r));
      auto perm = rng.permutation(static_cast<std::uint32_t>(Ek.size()));
      std::vector<std::uint64_t> e0;
      for (std::uint64_t i = 0; i < removals; ++i) e0.push_back(Ek[perm[i]]);
      candidates.push_back(std::move(e0));
    }
  }

  std::vector<DegreeSearch> results(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    auto E = without(Ek, candidates[i]);
    results[i] = min_separating_degree(inst.n, F, E, EK, 0, inst.n, need);
  });

  std::size_t best = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto a = candidates[i], b = candidates[best];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    int di = results[i].degree < 0 ? inst.n + 1 : results[i].degree;
    int db = results[best].degree < 0 ? inst.n + 1 : results[best].degree;
    if (di < db || (di == db && a < b)) best = i;
  }

  DistinguishReport rep;
  rep.n = inst.n;
  rep.p = inst.p;
  rep.k = inst.k;
  rep.K = inst.K;
  rep.mode = SearchMode::kHeuristic;
  rep.seed = opts.seed;
  rep.strategy = opts.strategy == RobustStrategy::kGreedy ? "greedy" : "random";
  rep.slice_k_size = binomial(inst.n, inst.k);
  rep.slice_K_size = binomial(inst.n, inst.K);
  rep.error_set = candidates[best];
  std::sort(rep.error_set.begin(), rep.error_set.end());
  const auto& ds = results[best];
  if (ds.degree < 0) throw std::logic_error("robust_search: target not reachable up to degree n");
  rep.degree = ds.degree;
  rep.outside_by_degree = ds.outside_by_degree;
  rep.outside_count = ds.outside_count;
  fill_interval(rep);
  auto E = without(Ek, rep.error_set);
  attach_witness(rep, inst.n, F, E, ds);
  if (opts.confirm_samples > 0) {
    ClosureOracle oracle(inst.n, ds.degree, F, E);
    Rng rng(Rng::derive(opts.seed, 1'000'003));
    Rational best_psi = 0, total = 0;
    for (int i = 0; i < opts.confirm_samples; ++i) {
      auto psi = slice_stats(oracle.sample(rng), inst.K).psi;
      best_psi = std::max(best_psi, psi);
      total += psi;
    }
    rep.sampled_best_psi_K = best_psi;
    rep.sampled_mean_psi_K = total / opts.confirm_samples;
  }
  return rep;
}

DistinguishReport robust_search(const SliceDistinguishInstance& inst, const Rational& eps0_budget,
                                const RobustOptions& opts) {
  return robust_search_removals(inst, removals_for_budget(inst, eps0_budget), opts);
}

DistinguishReport exhaustive_robust(const SliceDistinguishInstance& inst, int max_removals) {
  validate_slices(inst.n, inst.k, inst.K);
  if (max_removals < 0) throw std::invalid_argument("max_removals < 0");
  PrimeField F(inst.p);
  auto Ek = slice_masks(inst.n, inst.k);
  auto EK = slice_masks(inst.n, inst.K);
  const std::size_t N = Ek.size();
  BigInt total = 0;
  for (int j = 0; j <= max_removals; ++j) total += binomial(N, j);
  if (total > 1'000'000)
    throw CapExceeded("exhaustive_robust: " + total.get_str() + " error sets exceed the 10^6 cap");

  DistinguishReport rep;
  rep.n = inst.n;
  rep.p = inst.p;
  rep.k = inst.k;
  rep.K = inst.K;
  rep.mode = SearchMode::kExhaustive;
  rep.slice_k_size = binomial(inst.n, inst.k);
  rep.slice_K_size = binomial(inst.n, inst.K);

  auto base = min_separating_degree(inst.n, F, Ek, EK, 0, inst.n);
  int best = base.degree;
  std::vector<std::size_t> best_set;
  rep.per_budget.push_back(best);
  for (int j = 1; j <= max_removals && j <= static_cast<int>(N); ++j) {
    // index combinations in lexicographic order, so the first strict improvement
    // at a given degree is the lexicographically smallest set
    std::vector<std::size_t> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    while (true) {
      if (best > 0) {
        std::vector<std::uint64_t> removed;
        for (auto i : idx) removed.push_back(Ek[i]);
        auto E = without(Ek, removed);
        auto ds = min_separating_degree(inst.n, F, E, EK, 0, best - 1);
        if (ds.degree >= 0 && ds.degree < best) {
          best = ds.degree;
          best_set = idx;
        }
      }
      int i = j - 1;
      while (i >= 0 && idx[i] == N - j + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
    rep.per_budget.push_back(best);
  }
  for (auto i : best_set) rep.error_set.push_back(Ek[i]);
  std::sort(rep.error_set.begin(), rep.error_set.end());
  auto E = without(Ek, rep.error_set);
  auto ds = min_separating_degree(inst.n, F, E, EK, 0, inst.n);
  rep.degree = ds.degree;
  rep.outside_by_degree = ds.outside_by_degree;
  rep.outside_count = ds.outside_count;
  fill_interval(rep);
  attach_witness(rep, inst.n, F, E, ds);
  return rep;
}

DijReport dij_consistency(int n, int t, std::uint32_t p, int degree, const Rational& psi_low,
                          const Rational& psi_mid) {
  using boost::multiprecision::exp;
  if (t <= 0 || !is_power_of(t, p)) throw std::invalid_argument("dij_consistency: t must be a power of p");
  if (t > n / 2) throw std::invalid_argument("dij_consistency: t exceeds floor(n/2)");
  DijReport r{n, t, p, degree, psi_mid, psi_low, Rational(static_cast<long>(t) * t, n), false, false, false, false};
  r.ell.canonicalize();
  const Real ell = to_real(r.ell);
  const Real eps_lo = boost::multiprecision::pow(Real(2), Real(-n) / 100);
  const Real eps_cap = std::min<Real>(exp(Real(-200)), exp(-2 * ell));
  r.window_exists = r.ell >= 100 && eps_lo <= eps_cap;
  const Real eps = std::max<Real>(to_real(psi_low), eps_lo);
  r.hypotheses_hold = r.window_exists && eps <= eps_cap && to_real(psi_mid) >= exp(-ell / 2);
  r.degree_bound_ok = 25 * static_cast<long>(degree) >= t;
  r.consistent = !r.hypotheses_hold || r.degree_bound_ok;
  return r;
}

DijReport dij_consistency(int n, int t, std::uint32_t p, const MultilinearPoly& witness) {
  if (witness.n() != n) throw DimensionMismatch("dij_consistency: witness arity");
  const int m = n / 2;
  if (t > m) throw std::invalid_argument("dij_consistency: t exceeds floor(n/2)");
  return dij_consistency(n, t, p, witness.degree(), slice_stats(witness, m - t).psi,
                         slice_stats(witness, m).psi);
}

}  // namespace slicepoly
