#include <gtest/gtest.h>

#include <bit>

#include "slicepoly/distinguish.hpp"

using namespace slicepoly;

namespace {

// Smallest D such that some polynomial of degree <= D vanishes on slice k and is
// nonzero somewhere on slice K, by enumerating every coefficient vector.
int brute_min_degree(int n, std::uint32_t p, int k, int K, int D_max) {
  auto Ek = slice_masks(n, k), EK = slice_masks(n, K);
  for (int D = 0; D <= D_max; ++D) {
    std::vector<std::uint64_t> monos;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (std::popcount(m) <= D) monos.push_back(m);
    std::vector<std::uint32_t> coef(monos.size(), 0);
    auto value = [&](std::uint64_t x) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < monos.size(); ++i)
        if ((monos[i] & x) == monos[i]) v += coef[i];
      return v % p;
    };
    while (true) {
      bool vanish = true;
      for (auto a : Ek)
        if (value(a)) {
          vanish = false;
          break;
        }
      if (vanish)
        for (auto b : EK)
          if (value(b)) return D;
      std::size_t i = 0;
      while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
      if (i == coef.size()) break;
    }
  }
  return -1;
}

}  // namespace

TEST(Instance, Parameters) {
  auto inst = SliceDistinguishInstance::make(4096, 2, 2048, 2048 + 384);
  EXPECT_EQ(inst.q, 384);
  EXPECT_EQ(inst.q_prime, 128u);
  EXPECT_EQ(inst.s, 3u);
  EXPECT_FALSE(inst.t);
  EXPECT_EQ(inst.alpha, Rational(1, 2));
  EXPECT_EQ(inst.delta, Rational(3, 32));

  auto pp = SliceDistinguishInstance::make(64, 2, 24, 32);
  ASSERT_TRUE(pp.t);
  EXPECT_EQ(*pp.t, 8);
  EXPECT_EQ(*pp.ell, Rational(1));
  EXPECT_EQ(pp.alpha, Rational(3, 8));

  EXPECT_THROW(SliceDistinguishInstance::make(8, 2, 0, 2), std::invalid_argument);
  EXPECT_THROW(SliceDistinguishInstance::make(8, 2, 8, 6), std::invalid_argument);
  EXPECT_THROW(SliceDistinguishInstance::make(8, 2, 3, 3), std::invalid_argument);
  EXPECT_THROW(SliceDistinguishInstance::make(8, 4, 3, 5), std::invalid_argument);
}

TEST(Thresholds, Values) {
  using boost::multiprecision::exp;
  auto inst = SliceDistinguishInstance::make(4096, 2, 2048, 2048 + 384);
  auto th = thresholds(inst);
  // delta^2 n / alpha = (3/32)^2 * 4096 * 2 = 72
  EXPECT_EQ(th.exponent, Rational(72));
  EXPECT_LT(abs(th.eps1_ext - exp(Real(-72) / 3000)), Real("1e-45"));
  EXPECT_LT(abs(th.eps1_main - exp(Real(-72) / 100)), Real("1e-45"));
  EXPECT_EQ(th.eps0_main, exp(Real(-7200)));
  EXPECT_EQ(th.eps0_ext, exp(Real(-24000)));
  EXPECT_FALSE(th.main_side_conditions);

  auto small = SliceDistinguishInstance::make(4096, 2, 2048, 2048 + 16);
  auto ts = thresholds(small);
  EXPECT_TRUE(ts.main_side_conditions);
  EXPECT_FALSE(ts.ext_side_conditions);
  // tiny exponent: the 1/1000 cap binds
  auto tiny = thresholds(SliceDistinguishInstance::make(4096, 2, 2048, 2049));
  EXPECT_EQ(tiny.eps0_main, Real(1) / 1000);
  EXPECT_EQ(tiny.eps0_ext, Real(1) / 2000);
  EXPECT_TRUE(tiny.ext_side_conditions);
}

TEST(ExactMinDegree, AgreesWithBruteForce) {
  struct Case {
    std::uint32_t p;
    int n;
  };
  int compared = 0;
  for (Case c : {Case{2, 4}, Case{2, 5}, Case{3, 4}})
    for (int k = 0; k <= c.n; ++k)
      for (int K = 0; K <= c.n; ++K) {
        if (k == K) continue;
        auto rep = exact_min_degree(c.n, c.p, k, K);
        if (rep.degree > 2) continue;  // brute force is limited to D <= 2
        ++compared;
        EXPECT_EQ(brute_min_degree(c.n, c.p, k, K, 2), rep.degree)
            << "p=" << c.p << " n=" << c.n << " k=" << k << " K=" << K;
        ASSERT_TRUE(rep.witness);
        EXPECT_EQ(rep.witness->degree(), rep.degree);
        EXPECT_EQ(rep.psi_k, 0);
        EXPECT_GT(rep.psi_K, 0);
        EXPECT_LE(rep.psi_K, rep.psi_K_upper);
      }
  EXPECT_GT(compared, 40);
}

TEST(ExactMinDegree, PowerGapGivesTheLargestPowerDividingTheGap) {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& row : hegedus_sweep(p, 4, 9)) EXPECT_TRUE(row.ok) << row.n << " " << row.k << " " << row.K;
  for (const auto& row : hegedus_sweep(2, 6, 9, true)) {
    EXPECT_TRUE(row.ok) << row.n << " " << row.k << " " << row.K;
    EXPECT_GT(row.K - row.k, static_cast<int>(row.expected));
  }
}

TEST(ExactMinDegree, Rejections) {
  EXPECT_THROW(exact_min_degree(6, 2, 3, 3), std::invalid_argument);
  EXPECT_THROW(exact_min_degree(6, 2, 3, 7), std::invalid_argument);
}

TEST(Robust, ZeroBudgetIsExact) {
  auto inst = SliceDistinguishInstance::make(8, 2, 2, 4);
  auto exact = exact_min_degree(8, 2, 2, 4);
  RobustOptions opts;
  auto rep = robust_search(inst, 0, opts);
  EXPECT_EQ(rep.degree, exact.degree);
  EXPECT_TRUE(rep.error_set.empty());
  EXPECT_EQ(removals_for_budget(inst, Rational(1, 10)), 2u);  // floor(28 / 10)
  EXPECT_THROW(removals_for_budget(inst, 1), std::invalid_argument);
}

TEST(Robust, RemovalsNeverRaiseTheDegree) {
  auto inst = SliceDistinguishInstance::make(7, 2, 2, 4);
  const int base = exact_min_degree(7, 2, 2, 4).degree;
  for (auto strategy : {RobustStrategy::kRandom, RobustStrategy::kGreedy}) {
    RobustOptions opts;
    opts.strategy = strategy;
    opts.seed = 3;
    int prev = base;
    for (std::uint64_t r = 0; r <= 6; ++r) {
      auto rep = robust_search_removals(inst, r, opts);
      EXPECT_LE(rep.degree, base);
      EXPECT_EQ(rep.error_set.size(), r);
      ASSERT_TRUE(rep.witness);
      // the witness vanishes off the error set
      for (auto a : slice_masks(7, 2))
        if (!std::binary_search(rep.error_set.begin(), rep.error_set.end(), a)) EXPECT_EQ(rep.witness->eval(a), 0u);
      if (strategy == RobustStrategy::kGreedy) {
        EXPECT_LE(rep.degree, prev);
        prev = rep.degree;
      }
    }
  }
}

TEST(Robust, ExhaustiveIsMonotoneAndDominatesHeuristics) {
  auto inst = SliceDistinguishInstance::make(6, 2, 2, 4);
  auto ex = exhaustive_robust(inst, 3);
  ASSERT_EQ(ex.per_budget.size(), 4u);
  EXPECT_EQ(ex.per_budget[0], exact_min_degree(6, 2, 2, 4).degree);
  for (std::size_t j = 1; j < ex.per_budget.size(); ++j) EXPECT_LE(ex.per_budget[j], ex.per_budget[j - 1]);
  EXPECT_EQ(ex.degree, ex.per_budget.back());
  RobustOptions opts;
  opts.restarts = 8;
  for (std::uint64_t r = 0; r <= 3; ++r)
    EXPECT_GE(robust_search_removals(inst, r, opts).degree, ex.per_budget[r]);
  EXPECT_THROW(exhaustive_robust(SliceDistinguishInstance::make(12, 2, 6, 8), 3), CapExceeded);
}

TEST(Dij, SyntheticInstances) {
  // n = 100000, t = 4096: ell ~ 167.8, the parameter window is nonempty
  auto bad = dij_consistency(100000, 4096, 2, 100, Rational(0), Rational(1));
  EXPECT_TRUE(bad.window_exists);
  EXPECT_TRUE(bad.hypotheses_hold);
  EXPECT_FALSE(bad.degree_bound_ok);
  EXPECT_FALSE(bad.consistent);
  auto good = dij_consistency(100000, 4096, 2, 200, Rational(0), Rational(1));
  EXPECT_TRUE(good.consistent);
  // error on the low slice too large for any admissible epsilon
  auto weak = dij_consistency(100000, 4096, 2, 100, Rational(1, 2), Rational(1));
  EXPECT_FALSE(weak.hypotheses_hold);
  EXPECT_TRUE(weak.consistent);
  // ell < 100: vacuous
  auto vac = dij_consistency(64, 8, 2, 1, Rational(0), Rational(1));
  EXPECT_FALSE(vac.window_exists);
  EXPECT_TRUE(vac.consistent);
  EXPECT_THROW(dij_consistency(64, 6, 2, 1, Rational(0), Rational(1)), std::invalid_argument);
  EXPECT_THROW(dij_consistency(64, 64, 2, 1, Rational(0), Rational(1)), std::invalid_argument);
}
