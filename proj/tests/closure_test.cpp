#include <gtest/gtest.h>

#include <bit>

#include "slicepoly/closure.hpp"
#include "slicepoly/rng.hpp"

using namespace slicepoly;

namespace {

std::vector<std::uint64_t> low_degree_masks(int n, int D) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (std::popcount(m) <= D) out.push_back(m);
  return out;
}

// Brute force: enumerate every polynomial of degree <= D, keep those vanishing on
// E, and return (ideal size, membership of each cube point in the common zero set).
std::pair<std::uint64_t, std::vector<bool>> brute_closure(int n, int D, std::uint32_t p,
                                                          const std::vector<std::uint64_t>& E) {
  auto monos = low_degree_masks(n, D);
  const std::size_t N = monos.size();
  const std::size_t cube = std::size_t{1} << n;
  std::vector<bool> zero(cube, true);
  std::uint64_t ideal = 0;
  std::vector<std::uint32_t> coef(N, 0);
  auto value = [&](std::uint64_t x) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < N; ++i)
      if ((monos[i] & x) == monos[i]) v += coef[i];
    return v % p;
  };
  while (true) {
    bool vanishes = true;
    for (auto a : E)
      if (value(a)) {
        vanishes = false;
        break;
      }
    if (vanishes) {
      ++ideal;
      for (std::uint64_t x = 0; x < cube; ++x)
        if (zero[x] && value(x)) zero[x] = false;
    }
    std::size_t i = 0;
    while (i < N && ++coef[i] == p) coef[i++] = 0;
    if (i == N) break;
  }
  return {ideal, zero};
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(MonomialBasis, CountsAndIndex) {
  for (int n = 0; n <= 10; ++n)
    for (int D = 0; D <= n; ++D) {
      MonomialBasis B(n, D);
      EXPECT_EQ(B.size(), low_degree_masks(n, D).size());
      EXPECT_EQ(monomial_count(n, D), BigInt(static_cast<unsigned long>(B.size())));
      for (std::size_t i = 0; i < B.size(); ++i) {
        EXPECT_EQ(B.index(B.masks()[i]), i);
        if (i) EXPECT_TRUE(canonical_less(B.masks()[i - 1], B.masks()[i]));
      }
    }
  EXPECT_THROW(MonomialBasis(3, 1).index(0b11), std::out_of_range);
}

TEST(Closure, AgreesWithBruteForce) {
  Rng rng(17);
  struct Case {
    std::uint32_t p;
    int n_max, D_max;
  };
  for (Case c : {Case{2, 4, 2}, Case{3, 3, 2}}) {
    PrimeField F(c.p);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(c.n_max));
      const int D = static_cast<int>(rng.below(std::min(n, c.D_max) + 1));
      std::vector<std::uint64_t> E;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (rng.below(3) == 0) E.push_back(x);
      auto [ideal, zero] = brute_closure(n, D, c.p, E);
      ClosureOracle oracle(n, D, F, E);
      EXPECT_EQ(ipow(c.p, oracle.ideal_dimension()), ideal) << "n=" << n << " D=" << D;
      for (std::uint64_t x = 0; x < zero.size(); ++x) {
        EXPECT_EQ(oracle.contains(x), zero[x]);
        auto sep = oracle.separating_poly(x);
        EXPECT_EQ(sep.has_value(), !zero[x]);
        if (sep) {
          EXPECT_NE(sep->eval(x), 0u);
          EXPECT_LE(sep->degree(), D);
          for (auto a : E) EXPECT_EQ(sep->eval(a), 0u);
        }
      }
      auto res = closure(n, E, D, F, CandidateSet::cube());
      std::uint64_t count = 0;
      for (bool z : zero) count += z;
      EXPECT_EQ(res.closure_count, count);
    }
  }
}

TEST(Closure, ContainsE) {
  Rng rng(5);
  PrimeField F(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6;
    std::vector<std::uint64_t> E;
    for (int i = 0; i < 12; ++i) E.push_back(rng.below(64));
    ClosureOracle oracle(n, 2, F, E);
    for (auto a : E) EXPECT_TRUE(oracle.contains(a));
    for (auto& b : oracle.basis_polys())
      for (auto a : E) EXPECT_EQ(b.eval(a), 0u);
    EXPECT_EQ(oracle.basis_polys().size(), oracle.ideal_dimension());
    Rng r2(1);
    auto s = oracle.sample(r2);
    for (auto a : E) EXPECT_EQ(s.eval(a), 0u);
  }
}

TEST(Closure, SliceFourTwoAtDegreeOne) {
  // e1 - 2 vanishes on the whole slice, so the evaluation rows have rank 4.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField F(p);
    auto E = slice_masks(4, 2);
    ClosureOracle oracle(4, 1, F, E);
    EXPECT_EQ(oracle.rank(), 4u);
    auto basis = ideal_basis(4, E, 1, F);
    ASSERT_EQ(basis.size(), 1u);
    std::vector<Term> terms{{0, F.reduce(-2)}};
    for (int i = 0; i < 4; ++i) terms.push_back({std::uint64_t{1} << i, 1});
    auto e1m2 = MultilinearPoly::from_terms(4, F, terms);
    // the basis vector is a nonzero multiple of e1 - 2
    const Residue c = basis[0].coeff(1);
    ASSERT_NE(c, 0u);
    EXPECT_EQ(basis[0], scale(e1m2, c));
    // closure at degree 1 is every slice whose weight is 2 mod p
    auto res = closure(4, E, 1, F, CandidateSet::cube());
    for (auto& [w, counts] : res.per_slice) EXPECT_EQ(counts.first, (w % p == 2 % p) ? counts.second : 0u);
  }
}

TEST(Closure, PointUsageMarksDependentRows) {
  PrimeField F(2);
  std::vector<std::uint64_t> E{0b00, 0b01, 0b01, 0b10, 0b11};
  ClosureOracle oracle(2, 1, F, E);
  auto usage = oracle.point_usage();
  ASSERT_EQ(usage.size(), E.size());
  EXPECT_EQ(usage[2], -1);  // repeated point
  EXPECT_EQ(usage[4], -1);  // rank 3 reached by the first three distinct points
  EXPECT_GE(usage[0], 0);
}

TEST(NieWang, HoldsOnRandomSets) {
  Rng rng(23);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(7));
      const int D = static_cast<int>(rng.below(n + 1));
      std::vector<std::uint64_t> E;
      const std::size_t size = 1 + rng.below(std::size_t{1} << n);
      for (std::size_t i = 0; i < size; ++i) E.push_back(rng.below(std::uint64_t{1} << n));
      auto r = nie_wang_check(n, E, D, F);
      EXPECT_TRUE(r.holds) << "n=" << n << " D=" << D;
      EXPECT_LE(r.lhs, 1);
    }
  }
}

TEST(NieWang, BallIsTight) {
  for (std::uint32_t p : {2u, 3u})
    for (int n = 1; n <= 8; ++n)
      for (int d = 0; d <= n; ++d) {
        EXPECT_TRUE(ball_fact_check(n, d, PrimeField(p)));
        auto ball = hamming_ball(n, 0b1 & ((std::uint64_t{1} << n) - 1), d);
        EXPECT_EQ(BigInt(static_cast<unsigned long>(ball.size())), monomial_count(n, d));
        auto r = nie_wang_check(n, ball, d, PrimeField(p));
        EXPECT_EQ(r.lhs, r.rhs);
      }
}

TEST(Closure, Caps) {
  PrimeField F(2);
  std::vector<std::uint64_t> E{0};
  EXPECT_THROW(closure(20, E, 1, F, CandidateSet::cube()), CapExceeded);
  EXPECT_THROW(MonomialBasis(40, 20), CapExceeded);
  EXPECT_THROW(ClosureOracle(3, 1, F, std::vector<std::uint64_t>{0b1000}), std::invalid_argument);
}
