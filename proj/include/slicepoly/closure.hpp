#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "slicepoly/cube.hpp"
#include "slicepoly/field.hpp"
#include "slicepoly/rng.hpp"

namespace slicepoly {

/// Number of multilinear monomials of degree at most D in n variables.
BigInt monomial_count(int n, int D);

/// Monomials of degree <= D in canonical order; column i of every evaluation row.
class MonomialBasis {
 public:
  MonomialBasis(int n, int D);

  int n() const { return n_; }
  int degree() const { return D_; }
  std::size_t size() const { return masks_.size(); }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  std::size_t index(std::uint64_t mask) const;

  /// row[i] = 1 iff masks()[i] is contained in point.
  void fill_row(std::uint64_t point, std::vector<Residue>& row) const;
  MultilinearPoly to_poly(const std::vector<Residue>& coeffs, PrimeField field) const;

 private:
  int n_, D_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

struct EvaluationMatrix {
  int n;
  std::vector<std::uint64_t> points;
  MonomialBasis basis;
  FieldMatrix matrix;
};

EvaluationMatrix evaluation_matrix(int n, std::span<const std::uint64_t> points, int D, PrimeField field);

/// A RankOracle frozen on the evaluation rows of a point set at degree D.
class ClosureOracle {
 public:
  ClosureOracle(int n, int D, PrimeField field, std::span<const std::uint64_t> points);

  int n() const { return basis_.n(); }
  int degree() const { return basis_.degree(); }
  std::size_t rank() const { return oracle_.rank(); }
  std::size_t columns() const { return basis_.size(); }
  std::size_t ideal_dimension() const { return columns() - rank(); }
  const MonomialBasis& basis() const { return basis_; }
  const RankOracle& oracle() const { return oracle_; }

  bool contains(std::uint64_t point) const;
  /// Ideal element nonzero at point, or nullopt when point is in the closure.
  std::optional<MultilinearPoly> separating_poly(std::uint64_t point) const;
  MultilinearPoly sample(Rng& rng) const;
  std::vector<MultilinearPoly> basis_polys() const;

  /// For each input point: the number of later rows that reduced against its pivot
  /// row, or -1 when the point's row was dependent on earlier ones.
  std::vector<std::int64_t> point_usage() const;

 private:
  MonomialBasis basis_;
  RankOracle oracle_;
  std::vector<std::int64_t> point_pivot_;  // storage index per point, -1 if dependent
};

struct CandidateSet {
  bool full_cube = true;
  std::vector<int> slices;

  static CandidateSet cube() { return {true, {}}; }
  static CandidateSet of_slices(std::vector<int> s) { return {false, std::move(s)}; }
};

struct ClosureResult {
  int n;
  int D;
  std::size_t e_size;
  std::size_t rank;
  std::size_t n_d;
  CandidateSet candidates;
  std::vector<std::uint64_t> points;
  std::vector<bool> member;
  std::uint64_t closure_count = 0;
  /// weight -> (members, slice size)
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> per_slice;
};

std::vector<MultilinearPoly> ideal_basis(int n, std::span<const std::uint64_t> E, int D, PrimeField field);
ClosureResult closure(int n, std::span<const std::uint64_t> E, int D, PrimeField field,
                      const CandidateSet& candidates);

struct NieWangReport {
  Rational lhs;
  Rational rhs;
  bool holds;
  std::uint64_t closure_count;
};

NieWangReport nie_wang_check(int n, std::span<const std::uint64_t> E, int D, PrimeField field);

std::vector<MultilinearPoly> sample_ideal(int n, std::span<const std::uint64_t> E, int D, PrimeField field,
                                          std::uint64_t seed, std::size_t count);

std::vector<std::uint64_t> hamming_ball(int n, std::uint64_t center, int radius);
bool ball_fact_check(int n, int d, PrimeField field);

}  // namespace slicepoly
