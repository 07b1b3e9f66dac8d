#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicepoly/closure.hpp"
#include "slicepoly/cube.hpp"
#include "slicepoly/numeric.hpp"

namespace slicepoly {

struct SliceDistinguishInstance {
  int n;
  std::uint32_t p;
  int k;
  int K;
  int q;
  Rational alpha;
  Rational delta;
  std::uint64_t q_prime;
  std::uint64_t s;
  /// Set when the gap is a power of p: t = q and ell = t^2 / n.
  std::optional<int> t;
  std::optional<Rational> ell;

  static SliceDistinguishInstance make(int n, std::uint32_t p, int k, int K);
};

struct RobustThresholds {
  Real eps0_main, eps1_main;
  Real eps0_ext, eps1_ext;
  Real dij_eps_lo, dij_eps_hi;
  Real dij_ell_lo, dij_ell_hi;  // ell range at the smallest admissible epsilon
  Rational exponent;            // delta^2 n / alpha
  bool main_side_conditions;    // 100q < k < n - 100q
  bool ext_side_conditions;     // 200q < k < n - 200q
};

RobustThresholds thresholds(const SliceDistinguishInstance& inst);

enum class SearchMode { kExact, kHeuristic, kExhaustive };
std::string to_string(SearchMode m);

struct DistinguishReport {
  int n = 0;
  std::uint32_t p = 2;
  int k = 0;
  int K = 0;
  int degree = -1;
  SearchMode mode = SearchMode::kExact;
  /// outside_by_degree[d] = slice-K points outside cl_d of the (reduced) slice k.
  std::vector<std::uint64_t> outside_by_degree;
  std::uint64_t outside_count = 0;
  BigInt slice_k_size, slice_K_size;
  std::optional<MultilinearPoly> witness;
  Rational psi_k, psi_K;
  /// Claim A.1 interval for the best psi_K: [(1-1/p) c / C(n,K), c / C(n,K)].
  Rational psi_K_expected, psi_K_upper;
  std::vector<std::uint64_t> error_set;
  std::uint64_t seed = 0;
  std::string strategy;
  /// exhaustive mode: best degree using error sets of size <= j.
  std::vector<int> per_budget;
  std::optional<Rational> sampled_best_psi_K;
  std::optional<Rational> sampled_mean_psi_K;
};

struct DegreeSearch {
  int degree = -1;
  std::vector<std::uint64_t> outside_by_degree;
  std::uint64_t outside_count = 0;
  std::optional<std::uint64_t> first_outside;
};

/// Smallest d in [d_min, d_max] such that at least `need` target points lie outside
/// cl_d(E); degree = -1 when none does.
DegreeSearch min_separating_degree(int n, PrimeField field, std::span<const std::uint64_t> E,
                                   std::span<const std::uint64_t> targets, int d_min, int d_max,
                                   std::uint64_t need = 1);

DistinguishReport exact_min_degree(int n, std::uint32_t p, int k, int K);

struct SweepRow {
  int n, k, K;
  int degree;
  std::uint64_t expected;
  bool ok;
};

/// Every (n, k, K = k + q) with q <= k <= n - q and q > 0 in the chosen gap class.
/// composite = false: q a power of p; composite = true: q = q' s, s > 1 coprime to p.
std::vector<SweepRow> hegedus_sweep(std::uint32_t p, int n_lo, int n_hi, bool composite = false);

enum class RobustStrategy { kRandom, kGreedy };

struct RobustOptions {
  RobustStrategy strategy = RobustStrategy::kRandom;
  int restarts = 4;
  std::uint64_t seed = 1;
  Rational target_psi = 0;  // 0 means "nonzero somewhere on slice K"
  int confirm_samples = 0;
};

/// Removals allowed by a budget: floor(budget * C(n,k)).
std::uint64_t removals_for_budget(const SliceDistinguishInstance& inst, const Rational& budget);

DistinguishReport robust_search(const SliceDistinguishInstance& inst, const Rational& eps0_budget,
                                const RobustOptions& opts);
/// Same, with an explicit removal count instead of a budget fraction.
DistinguishReport robust_search_removals(const SliceDistinguishInstance& inst, std::uint64_t removals,
                                         const RobustOptions& opts);

DistinguishReport exhaustive_robust(const SliceDistinguishInstance& inst, int max_removals);

struct DijReport {
  int n, t;
  std::uint32_t p;
  int degree;
  Rational psi_mid, psi_low;  // slices floor(n/2) and floor(n/2) - t
  Rational ell;
  bool window_exists;     // some (eps, ell) satisfies the parameter constraints
  bool hypotheses_hold;   // both error hypotheses hold for some valid eps
  bool degree_bound_ok;   // degree >= t/25
  bool consistent;        // !hypotheses_hold || degree_bound_ok
};

DijReport dij_consistency(int n, int t, std::uint32_t p, int degree, const Rational& psi_low,
                          const Rational& psi_mid);
DijReport dij_consistency(int n, int t, std::uint32_t p, const MultilinearPoly& witness);

}  // namespace slicepoly
