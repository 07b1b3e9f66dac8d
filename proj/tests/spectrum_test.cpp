#include <gtest/gtest.h>

#include <bit>

#include "slicepoly/spectrum.hpp"

using namespace slicepoly;

namespace {

Spectrum from_code(int n, std::uint64_t code) {
  std::vector<std::uint8_t> bits(n + 1);
  for (int i = 0; i <= n; ++i) bits[i] = code >> i & 1;
  return Spectrum(bits);
}

int brute_period(const std::vector<std::uint8_t>& s) {
  const int len = static_cast<int>(s.size());
  for (int b = 1; b < len; ++b) {
    bool ok = true;
    for (int i = 0; i + b < len && ok; ++i) ok = s[i] == s[i + b];
    if (ok) return b;
  }
  return len;
}

// Grow the constant middle outward; B is how far it fails to reach the ends.
int brute_bounded_index(const Spectrum& s) {
  const int n = s.n();
  int lo = n / 2, hi = n - n / 2;
  if (s[lo] != s[hi]) return (n + 1) / 2;
  while (lo > 0 && s[lo - 1] == s[lo] && s[hi + 1] == s[hi] && s[lo - 1] == s[hi + 1]) {
    --lo;
    ++hi;
  }
  return lo;
}

}  // namespace

TEST(Spectrum, ParseAndPrint) {
  auto s = Spectrum::parse("0110");
  EXPECT_EQ(s.n(), 3);
  EXPECT_EQ(s.str(), "0110");
  EXPECT_THROW(Spectrum::parse("012"), std::invalid_argument);
  EXPECT_THROW(Spectrum::parse(""), std::invalid_argument);
}

TEST(Spectrum, PeriodMatchesBruteForce) {
  for (int n = 0; n <= 11; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      auto s = from_code(n, code);
      EXPECT_EQ(period(s), brute_period(s.bits()));
    }
  EXPECT_EQ(period(Spectrum::parse("010010010")), 3);
  EXPECT_EQ(period(Spectrum::parse("0001")), 4);
}

TEST(Spectrum, PrimitiveRoot) {
  auto r = primitive_root("abababab");
  EXPECT_EQ(r.z, "ab");
  EXPECT_EQ(r.k, 4);
  r = primitive_root("aba");
  EXPECT_EQ(r.z, "aba");
  EXPECT_EQ(r.k, 1);
  r = primitive_root("aaaa");
  EXPECT_EQ(r.z, "a");
  EXPECT_EQ(r.k, 4);
  for (std::string w : {"abcabc", "abcab", "x", "xyxyxyxy"}) {
    auto pr = primitive_root(w);
    std::string rebuilt;
    for (int i = 0; i < pr.k; ++i) rebuilt += pr.z;
    EXPECT_EQ(rebuilt, w);
  }
}

TEST(Spectrum, WindowsOfAMinimalPeriodAreDistinct) {
  for (int n = 1; n <= 12; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      auto s = from_code(n, code);
      if (period(s) > 1) EXPECT_TRUE(window_distinct_check(s)) << s.str();
    }
  EXPECT_THROW(window_distinct_check(Spectrum::parse("0000")), std::invalid_argument);
}

TEST(Spectrum, BoundedIndex) {
  for (int n = 0; n <= 12; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      auto s = from_code(n, code);
      EXPECT_EQ(bounded_index(s), brute_bounded_index(s)) << s.str();
    }
  EXPECT_EQ(bounded_index(majority(7)), 4);
  EXPECT_EQ(bounded_index(Spectrum::parse("00000")), 0);
  // [4, 4] is already constant
  EXPECT_EQ(bounded_index(exact_threshold(8, 4)), 4);
  EXPECT_EQ(bounded_index(exact_threshold(8, 1)), 2);
}

TEST(Spectrum, Families) {
  EXPECT_EQ(majority(4).str(), "00011");
  EXPECT_EQ(threshold(4, 2).str(), "00111");
  EXPECT_EQ(exact_threshold(4, 2).str(), "00100");
  EXPECT_EQ(mod_family(6, 3, 1).str(), "0100100");
  EXPECT_EQ(make_family("mod:3", 6).str(), "1001001");
  EXPECT_EQ(make_family("ethr:2", 4), exact_threshold(4, 2));
  EXPECT_EQ(make_family("maj", 5), majority(5));
  EXPECT_THROW(make_family("nope", 4), std::invalid_argument);
  EXPECT_THROW(make_family("thr", 4), std::invalid_argument);
}

TEST(Decomposition, Invariants) {
  for (int n = 3; n <= 13; ++n) {
    const int lo = (n + 2) / 3 + 1, hi = 2 * n / 3;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n + 1)); ++code) {
      auto s = from_code(n, code);
      auto d = standard_decomposition(s);
      EXPECT_EQ(d.window_lo, lo);
      EXPECT_EQ(d.window_hi, hi);
      EXPECT_EQ(d.window_fallback, lo > hi);
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(d.g[i] ^ d.h[i], s[i]);
        if (i >= lo && i <= hi) EXPECT_EQ(d.h[i], 0);
      }
      EXPECT_EQ(d.per_g, period(d.g));
      EXPECT_EQ(d.B_h, bounded_index(d.h));
      EXPECT_LE(d.per_g, std::max(1, n / 3));
      // h may be nonzero at index ceil(n/3), just below the window
      EXPECT_LE(d.B_h, (n + 2) / 3 + 1);
    }
  }
}

TEST(Decomposition, PrintedBoundIsOffByOne) {
  // EThr^2_6: window [3, 4] is zero, g = 0, h = f, B(h) = 3 > ceil(6/3)
  auto d = standard_decomposition(exact_threshold(6, 2));
  EXPECT_EQ(d.g.str(), "0000000");
  EXPECT_EQ(d.h, exact_threshold(6, 2));
  EXPECT_EQ(d.B_h, 3);
}

TEST(Decomposition, SmallArity) {
  EXPECT_THROW(standard_decomposition(Spectrum::parse("010")), std::invalid_argument);
  auto d = standard_decomposition(Spectrum::parse("01011"));
  EXPECT_TRUE(d.window_fallback);
  EXPECT_EQ(d.g.str(), "00000");
  EXPECT_EQ(d.per_g, 1);
}

TEST(Pdeg, BranchTable) {
  EXPECT_EQ(pdeg_branch(3, 0, 2), PdegBranch::kAperiodicOrBadPeriod);
  EXPECT_EQ(pdeg_branch(6, 2, 3), PdegBranch::kAperiodicOrBadPeriod);
  EXPECT_EQ(pdeg_branch(4, 0, 2), PdegBranch::kPurePPowerPeriod);
  EXPECT_EQ(pdeg_branch(1, 0, 2), PdegBranch::kPurePPowerPeriod);
  EXPECT_EQ(pdeg_branch(9, 3, 3), PdegBranch::kMixed);
  EXPECT_EQ(pdeg_branch(1, 2, 5), PdegBranch::kMixed);
}

TEST(Pdeg, Classify) {
  for (int n : {12, 13, 14}) {
    EXPECT_EQ(classify_pdeg(mod_family(n, 3, 0), 2, 0.25).branch, PdegBranch::kAperiodicOrBadPeriod);
    EXPECT_EQ(classify_pdeg(mod_family(n, 2, 0), 2, 0.25).branch, PdegBranch::kPurePPowerPeriod);
    EXPECT_EQ(classify_pdeg(mod_family(n, 3, 0), 3, 0.25).branch, PdegBranch::kPurePPowerPeriod);
    // the window of EThr^{floor(n/2)} holds the single 1, so per(g) is the window length
    auto ce = classify_pdeg(exact_threshold(n, n / 2), 2, 0.25);
    EXPECT_EQ(ce.per_g, 3);
    EXPECT_EQ(ce.branch, PdegBranch::kAperiodicOrBadPeriod);
  }
  // Thr^3_13: constant window, h is 1 exactly on weights 0..2
  auto c = classify_pdeg(threshold(13, 3), 2, 0.25);
  EXPECT_EQ(c.branch, PdegBranch::kMixed);
  EXPECT_EQ(c.per_g, 1);
  EXPECT_EQ(c.B_h, 3);
  const double L = std::log(4.0);
  EXPECT_DOUBLE_EQ(c.value, std::min(std::sqrt(13 * L), 1 + std::sqrt(3 * L) + L));
  EXPECT_THROW(classify_pdeg(majority(13), 2, 0.5), std::invalid_argument);
  EXPECT_THROW(classify_pdeg(majority(4), 2, 1e-3), std::invalid_argument);
}

TEST(PeriodicPoly, ValuesDependOnWeightModQ) {
  for (auto [p, q, n] : std::vector<std::tuple<std::uint32_t, std::uint64_t, int>>{
           {2, 2, 7}, {2, 4, 9}, {2, 8, 11}, {3, 3, 8}, {3, 9, 10}, {5, 5, 7}}) {
    PrimeField F(p);
    for (std::uint64_t pat = 0; pat < 12; ++pat) {
      std::vector<Residue> vals(q);
      for (std::uint64_t i = 0; i < q; ++i) vals[i] = static_cast<Residue>((pat * 7 + i * i * 3 + i) % p);
      auto pp = periodic_exact_poly(n, q, vals, F);
      EXPECT_LT(pp.poly.degree(), static_cast<int>(q));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        ASSERT_EQ(pp.poly.eval(x), vals[std::popcount(x) % q]);
    }
  }
  EXPECT_THROW(periodic_exact_poly(5, 6, std::vector<Residue>(6, 0), PrimeField(2)), std::invalid_argument);
  EXPECT_THROW(periodic_exact_poly(3, 4, std::vector<Residue>(4, 0), PrimeField(2)), std::invalid_argument);
}
