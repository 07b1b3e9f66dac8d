#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slicepoly/cube.hpp"
#include "slicepoly/json_io.hpp"
#include "slicepoly/rng.hpp"
#include "slicepoly/symmetric.hpp"

namespace slicepoly {

// ---- Lucas polynomials ----

/// e_{p^l} - a_l where p^l is the largest p-power dividing q and a_l is digit l of i.
MultilinearPoly lucas_poly(int n, int i, int q, std::uint32_t p);
SymmetricPoly lucas_symmetric(int n, int i, int q, std::uint32_t p);

// ---- weight-window interpolation ----

struct WeightWindow {
  int n;
  int a;
  std::vector<int> targets;  // f(a), f(a+1), ..., each 0 or 1

  int length() const { return static_cast<int>(targets.size()); }
  int last() const { return a + length() - 1; }
  void validate() const;
};

/// Integer interpolant Q = sum_i c_i e_i with Q(x) = f(|x|) for |x| in the window.
struct WindowInterpolant {
  int n;
  int a;
  std::vector<BigInt> differences;  // forward differences of f at a
  std::vector<BigInt> ecoeffs;      // c_0..c_{L-1}

  int integer_degree() const;
  /// sum_i c_i C(w, i) over the integers.
  BigInt value(int w) const;
  SymmetricPoly reduce(PrimeField field) const;
};

WindowInterpolant interpolate_window(const WeightWindow& w);
/// Reduced mod p and expanded; n <= 63.
MultilinearPoly interpolate_window(const WeightWindow& w, PrimeField field);

/// Exact multilinear Maj_l (l odd) over the full weight range.
MultilinearPoly majority_poly(int ell, PrimeField field);

// ---- sampling construction ----

/// Ladder of constants tried when a construction is asked to pick C itself.
inline const std::vector<int>& default_c_ladder() {
  static const std::vector<int> ladder{2, 5, 10, 20, 40};
  return ladder;
}

/// Smallest integer >= x, ignoring a rounding excess below 1e-40.
long long ceil_tolerant(const Real& x);

struct SampledJunta {
  int n, k, q;
  std::uint32_t p;
  Rational alpha, delta;
  Real eps;
  int C;
  int m;
  std::uint64_t seed;
  std::vector<std::uint32_t> indices;  // distinct, draw order
  WindowInterpolant interpolant;
  SymmetricPoly inner;                 // m-variable inner polynomial mod p
  int window_lo, window_hi;            // union window, empty when lo > hi
  std::vector<int> zero_weights, one_weights, free_weights;
  bool without_replacement = true;

  int degree() const { return inner.degree(); }
  /// Inner polynomial composed with the sampled coordinates; n <= 63.
  MultilinearPoly materialize() const;
  /// Value of the composed polynomial at a point of {0,1}^n (n <= 63).
  Residue value_at(std::uint64_t point) const;
};

SampledJunta sampling_poly(int n, int k, int q, std::uint32_t p, const Real& eps, int C, std::uint64_t seed);

enum class Target { kZero, kNonzero };

/// Pr over uniform a in slice w that the composed polynomial misses the target.
Rational junta_exact_slice_error(const SampledJunta& j, int w, Target target);

struct SamplingChoice {
  SampledJunta junta;
  Rational err_k;        // Pr_k[P != 0]
  Rational miss_K;       // Pr_K[P == 0]
  bool passed;
  std::vector<std::pair<int, bool>> tried;  // (C, passed)
};

/// First C on the ladder whose exact slice errors satisfy psi_k <= eps and psi_K >= 1 - eps.
SamplingChoice sampling_choose(int n, int k, int q, std::uint32_t p, const Real& eps, std::uint64_t seed,
                               const std::vector<int>& ladder = default_c_ladder());

// ---- permutation-product error reduction ----

/// x_i -> x_{perm[i]}.
MultilinearPoly relabel(const MultilinearPoly& q, const std::vector<std::uint32_t>& perm);
MultilinearPoly permutation_product(const MultilinearPoly& q,
                                    const std::vector<std::vector<std::uint32_t>>& perms);
MultilinearPoly error_reduce(const MultilinearPoly& q, int r, std::uint64_t seed);

// ---- probabilistic polynomials ----

struct WeightedPoly {
  MultilinearPoly poly;
  Rational prob;
};

class ProbabilisticPoly {
 public:
  using Sampler = std::function<MultilinearPoly(Rng&)>;

  ProbabilisticPoly(int n, PrimeField field, int degree_bound, Sampler sampler, std::string description);
  /// Distribution with finite support; probabilities must sum to 1.
  static ProbabilisticPoly finite(std::vector<WeightedPoly> support, std::string description);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  int degree_bound() const { return degree_bound_; }
  const std::string& description() const { return description_; }
  const std::optional<std::vector<WeightedPoly>>& support() const { return support_; }

  /// Throws std::logic_error if the sampler exceeds the declared degree bound.
  MultilinearPoly sample(Rng& rng) const;

  /// Exact distribution of P(a) over F_p; requires finite support.
  std::vector<Rational> value_distribution(std::uint64_t point) const;

 private:
  int n_;
  PrimeField field_;
  int degree_bound_;
  Sampler sampler_;
  std::string description_;
  std::optional<std::vector<WeightedPoly>> support_;
};

/// Smallest odd l >= 3 ln(1/delta) / ln(1/eps), at least 1.
int amplification_length(const Real& eps, const Real& delta);

struct AmplifiedPoly {
  ProbabilisticPoly poly;
  int ell;
  MultilinearPoly majority;  // on ell variables
};

/// M(P_1, ..., P_l) for independent copies; l = 1 returns P unchanged.
AmplifiedPoly pp_error_reduce(const ProbabilisticPoly& P, const Real& eps, const Real& delta);

/// Substitutes polys[j] for variable j of outer and multilinearizes.
MultilinearPoly compose(const MultilinearPoly& outer, const std::vector<MultilinearPoly>& polys);

/// Exact Pr[M(P_1(a), ..., P_l(a)) != target] from the value distribution of P(a).
Rational amplified_error_at(const std::vector<Rational>& value_dist, const MultilinearPoly& majority,
                            Residue target);

// ---- coin problem ----

struct CoinInstance {
  std::uint32_t p;
  Rational delta;
  Rational eps;
  std::optional<int> C;

  /// Least even n >= C ln(1/eps) / delta^2.
  int sized_n(int C_value) const;
  void validate() const;
};

Json coin_instance_to_json(const CoinInstance& c);
CoinInstance coin_instance_from_json(const Json& j);

struct CoinPolynomial {
  CoinInstance inst;
  int C;
  int n;
  Rational edge0, edge1, edge2;  // n(1/2 - 3d/2), n(1/2 - d/2), n(1/2 + d/2)
  int window_lo, window_hi;
  std::vector<int> free_weights;
  SymmetricPoly poly;
  Rational err_half;    // Pr_{1/2}[P != 1]
  Rational err_biased;  // Pr_{1/2 - d}[P == 1]
  bool passed;
  std::vector<std::pair<int, bool>> tried;

  int window_length() const { return window_hi - window_lo + 1; }
  int degree() const { return poly.degree(); }
};

/// Builds at the given C, or walks the ladder when inst.C is empty.
CoinPolynomial coin_build(const CoinInstance& inst);
/// Fixed n, ignoring the sizing rule.
CoinPolynomial coin_build_at(const CoinInstance& inst, int n);

enum class Side { kAccept, kReject };

/// Mass under mu_alpha^n of weights where table[w] == 1 (kAccept) or != 1 (kReject).
Rational coin_error_exact(const std::vector<Residue>& table, const Rational& alpha, Side side);

/// Each variable of P goes to a uniform variable among y_1..y_n.
MultilinearPoly coin_collapse(const MultilinearPoly& P, int n, std::uint64_t seed);
SubstitutionMap collapse_map(int source, int n, Rng& rng);
MultilinearPoly xor_shift(const MultilinearPoly& P, std::uint64_t y);

// ---- repetition lift ----

class RepetitionLift {
 public:
  /// Requires s >= 1, 0 <= r1 <= s + r2, 0 <= r2 < s.
  RepetitionLift(int n_prime, int s, int r1, int r2);

  int n_prime() const { return n_prime_; }
  int s() const { return s_; }
  int r1() const { return r1_; }
  int r2() const { return r2_; }
  int n() const { return n_prime_ * s_ + s_ + r2_; }
  int image_weight(int w) const { return w * s_ + r1_; }
  /// Whether (n, k) arise from (n', k') under this lift.
  bool consistent(int n, int k, int k_prime) const;

  /// Substitution of Y_{perm[j]} for variable j of an n-variable polynomial.
  SubstitutionMap map(const std::vector<std::uint32_t>& perm) const;
  SubstitutionMap sample(Rng& rng) const;
  /// The n-bit point Y permuted, for an n'-bit x.
  std::vector<std::uint8_t> image(std::uint64_t x, const std::vector<std::uint32_t>& perm) const;

 private:
  int n_prime_, s_, r1_, r2_;
};

// ---- Galvin families ----

struct GalvinItem {
  std::uint64_t u;
  int b;
};

struct GalvinFamily {
  int n;
  std::optional<int> t;
  std::vector<GalvinItem> items;
  bool shifted = false;     // n/4 not an integer: centred on floor(n/4)
  bool degenerate = false;  // t >= n/4
  void validate() const;
};

Json galvin_to_json(const GalvinFamily& f);
GalvinFamily galvin_from_json(const Json& j);

/// t = ceil(C sqrt(n ln(1/eps))), 2t+1 copies of 1^{n/2} 0^{n/2} with b = n/4 - t .. n/4 + t.
GalvinFamily galvin_tight_family(int n, const Real& eps, int C);

struct Coverage {
  Rational value;
  bool exact = true;
  double ci_halfwidth = 0;  // 99% normal interval when estimated
  std::uint64_t samples = 0;
};

/// Fraction of the middle slice covered by some hyperplane <u_i, v> = b_i.
Coverage galvin_coverage(const GalvinFamily& f, bool allow_monte_carlo = false, std::uint64_t seed = 1,
                         std::uint64_t samples = 100000);

struct GalvinChoice {
  GalvinFamily family;
  int C;
  Coverage coverage;
  bool passed;
  std::vector<std::pair<int, bool>> tried;
};

GalvinChoice galvin_choose(int n, const Real& eps, const std::vector<int>& ladder = default_c_ladder());

/// prod over retained i of (<u_i, x> - b_i), multilinearized mod p.
MultilinearPoly galvin_poly(const GalvinFamily& f, std::uint32_t p, bool balance_filter);
std::vector<std::size_t> galvin_retained(const GalvinFamily& f, bool balance_filter);

}  // namespace slicepoly
