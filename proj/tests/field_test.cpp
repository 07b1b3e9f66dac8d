#include <gtest/gtest.h>

#include <set>

#include "slicepoly/field.hpp"
#include "slicepoly/numeric.hpp"
#include "slicepoly/rng.hpp"

using namespace slicepoly;

namespace {

// Row-space size of a small matrix by enumerating all p^rows combinations.
std::size_t span_size(const FieldMatrix& m) {
  const std::uint32_t p = m.field().p();
  std::set<std::vector<Residue>> seen;
  std::vector<Residue> coef(m.rows(), 0);
  while (true) {
    std::vector<Residue> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = (v[c] + coef[r] * m.at(r, c)) % p;
    seen.insert(v);
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return seen.size();
}

std::size_t log_p(std::size_t x, std::uint32_t p) {
  std::size_t r = 0;
  while (x > 1) {
    x /= p;
    ++r;
  }
  return r;
}

FieldMatrix random_matrix(PrimeField F, std::size_t rows, std::size_t cols, Rng& rng, int sparsity = 2) {
  FieldMatrix m(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.below(sparsity) == 0) m.set(r, c, rng.below(F.p()));
  return m;
}

Residue dot(std::span<const Residue> a, std::span<const Residue> b, PrimeField F) {
  Residue s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

}  // namespace

TEST(PrimeField, ArithmeticMatchesIntegers) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField F(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ(F.add(a, b), (a + b) % p);
        EXPECT_EQ(F.sub(a, b), (a + p - b) % p);
        EXPECT_EQ(F.mul(a, b), a * b % p);
      }
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      std::uint64_t pw = 1;
      for (int e = 0; e < 6; ++e) {
        EXPECT_EQ(F.pow(a, e), pw);
        pw = pw * a % p;
      }
    }
    EXPECT_EQ(F.reduce(-1), p - 1);
    EXPECT_EQ(F.reduce(-static_cast<std::int64_t>(p) * 3), 0u);
  }
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(PrimeField(2).inv(0), std::domain_error);
}

TEST(Rref, RankAgreesWithSpanEnumeration) {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng.below(p == 2 ? 8 : 5), cols = 1 + rng.below(7);
      auto m = random_matrix(F, rows, cols, rng);
      auto res = rref(m);
      EXPECT_EQ(res.rank, log_p(span_size(m), p));
      EXPECT_EQ(res.pivot_cols.size(), res.rank);
      // reduced form spans the same space
      EXPECT_EQ(span_size(res.reduced), span_size(m));
    }
  }
}

TEST(Rref, KnownExample) {
  PrimeField F(3);
  FieldMatrix m(F, 3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  auto res = rref(m);
  EXPECT_EQ(res.rank, 2u);
  EXPECT_EQ(res.pivot_cols, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(res.reduced.at(0, 1), 2u);
}

TEST(Nullspace, VectorsAreAnnihilatedAndCountIsCorrect) {
  Rng rng(5);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 30; ++trial) {
      auto m = random_matrix(F, 1 + rng.below(6), 1 + rng.below(9), rng);
      auto basis = nullspace_basis(m);
      EXPECT_EQ(basis.size(), m.cols() - rref(m).rank);
      for (auto& v : basis)
        for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(dot(m.row(r), v, F), 0u);
    }
  }
}

class RankOracleTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(RankOracleTest, IncrementalMatchesBatch) {
  PrimeField F(GetParam());
  Rng rng(GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    // wide enough to cross a 64-bit word in the packed store
    const std::size_t cols = 1 + rng.below(130);
    auto m = random_matrix(F, 1 + rng.below(40), cols, rng, 3);
    RankOracle o(F, cols);
    std::size_t absorbed = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const bool was_member = o.member(m.row(r));
      EXPECT_EQ(o.absorb(m.row(r)), !was_member);
      absorbed += !was_member;
      EXPECT_TRUE(o.member(m.row(r)));
    }
    auto batch = rref(m);
    EXPECT_EQ(o.rank(), batch.rank);
    EXPECT_EQ(absorbed, batch.rank);
    FieldMatrix top(F, batch.rank, cols);
    for (std::size_t r = 0; r < batch.rank; ++r)
      for (std::size_t c = 0; c < cols; ++c) top.set(r, c, batch.reduced.at(r, c));
    EXPECT_EQ(o.reduced_form(), top);
  }
}

TEST_P(RankOracleTest, SeparatingAndNullVectors) {
  PrimeField F(GetParam());
  Rng rng(100 + GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t cols = 2 + rng.below(70);
    auto m = random_matrix(F, 1 + rng.below(cols - 1), cols, rng);
    RankOracle o(F, cols);
    for (std::size_t r = 0; r < m.rows(); ++r) o.absorb(m.row(r));

    std::vector<Residue> target(cols);
    for (auto& x : target) x = static_cast<Residue>(rng.below(F.p()));
    auto sep = o.separating_vector(target);
    EXPECT_EQ(sep.has_value(), !o.member(target));
    if (sep) {
      EXPECT_NE(dot(target, *sep, F), 0u);
      for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(dot(m.row(r), *sep, F), 0u);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (o.row_of_pivot(c) >= 0) continue;
      auto v = o.null_vector(c);
      EXPECT_EQ(v[c], 1u);
      for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(dot(m.row(r), v, F), 0u);
    }
    auto rv = o.random_null_vector([&](std::uint32_t b) { return rng.below(b); });
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(dot(m.row(r), rv, F), 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, RankOracleTest, ::testing::Values(2u, 3u, 5u));

TEST(RankOracle, UsageCountsReductions) {
  PrimeField F(2);
  RankOracle o(F, 3);
  std::vector<Residue> a{1, 0, 0}, b{1, 1, 0}, c{0, 1, 0};
  o.absorb(a);
  o.absorb(b);  // reduced by a
  EXPECT_FALSE(o.absorb(c));
  EXPECT_EQ(o.usage()[0], 1u);
}

TEST(Numeric, Binomials) {
  for (std::uint64_t n = 0; n < 30; ++n)
    for (std::uint64_t k = 0; k <= n; ++k)
      for (std::uint32_t p : {2u, 3u, 5u}) {
        BigInt c = binomial(n, k);
        BigInt r = c % p;
        EXPECT_EQ(binomial_mod(n, k, p), r.get_ui());
      }
  EXPECT_EQ(binomial(5, 7), 0);
  // C(-3, 2) = (-3)(-4)/2 = 6 and C(-1, k) = (-1)^k
  EXPECT_EQ(binomial_general(-3, 2), 6);
  EXPECT_EQ(binomial_general(-1, 5), -1);
  EXPECT_EQ(binomial_general(4, 2), 6);
  EXPECT_EQ(largest_power_dividing(24, 2), 8u);
  EXPECT_EQ(largest_power_dividing(24, 3), 3u);
  EXPECT_TRUE(is_power_of(27, 3));
  EXPECT_TRUE(is_power_of(1, 5));
  EXPECT_FALSE(is_power_of(12, 2));
  EXPECT_EQ(reduce_mod(BigInt(-7), 5), 3u);
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
}

TEST(Rng, DeterministicAndWellFormed) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
  auto perm = r.permutation(50);
  std::set<std::uint32_t> s(perm.begin(), perm.end());
  EXPECT_EQ(s.size(), 50u);
  EXPECT_EQ(*s.rbegin(), 49u);
  auto d = r.sample_distinct(20, 20);
  EXPECT_EQ(std::set<std::uint32_t>(d.begin(), d.end()).size(), 20u);
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
}

TEST(Rng, BelowIsRoughlyUniform) {
  Rng r(9);
  std::vector<int> counts(6, 0);
  const int N = 60000;
  for (int i = 0; i < N; ++i) ++counts[r.below(6)];
  for (int c : counts) EXPECT_NEAR(c, N / 6, 400);
}
