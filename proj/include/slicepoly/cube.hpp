#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "slicepoly/field.hpp"
#include "slicepoly/numeric.hpp"

namespace slicepoly {

constexpr int kMaxVars = 63;

struct CubePoint {
  int n = 0;
  std::uint64_t bits = 0;

  CubePoint() = default;
  CubePoint(int n_, std::uint64_t bits_);
  int weight() const { return std::popcount(bits); }
  bool operator==(const CubePoint&) const = default;
};

/// Weight-k masks of an n-bit cube in increasing numeric order (Gosper's hack).
class SliceRange {
 public:
  class iterator {
   public:
    using value_type = CubePoint;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(int n, std::uint64_t v, bool done) : n_(n), v_(v), done_(done) {}
    CubePoint operator*() const { return CubePoint(n_, v_); }
    iterator& operator++();
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || v_ == o.v_); }

   private:
    int n_ = 0;
    std::uint64_t v_ = 0;
    bool done_ = true;
  };

  SliceRange(int n, int k) : n_(n), k_(k) {}
  iterator begin() const;
  iterator end() const { return {}; }

 private:
  int n_, k_;
};

/// Iterates {0,1}^n_k; throws CapExceeded when C(n,k) exceeds the slice cap.
SliceRange enumerate_slice(int n, int k);
std::vector<std::uint64_t> slice_masks(int n, int k);
/// Next mask of the same popcount (v != 0).
inline std::uint64_t next_same_weight(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

struct Monomial {
  std::uint64_t vars = 0;
  int degree() const { return std::popcount(vars); }
};

/// Graded order, ties by mask value.
inline bool canonical_less(std::uint64_t a, std::uint64_t b) {
  int da = std::popcount(a), db = std::popcount(b);
  return da != db ? da < db : a < b;
}

struct Term {
  std::uint64_t mask;
  Residue coeff;
  bool operator==(const Term&) const = default;
};

class MultilinearPoly {
 public:
  MultilinearPoly(int n, PrimeField field);

  static MultilinearPoly constant(int n, PrimeField field, Residue c);
  static MultilinearPoly variable(int n, PrimeField field, int i);
  /// Sums duplicate masks, drops zeros, sorts canonically.
  static MultilinearPoly from_terms(int n, PrimeField field, std::vector<Term> terms);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : std::popcount(terms_.back().mask); }
  Residue coeff(std::uint64_t mask) const;
  /// Bitwise OR of all term masks.
  std::uint64_t support() const;

  Residue eval(std::uint64_t bits) const;

  /// Weight -> value table attached by symmetric constructors.
  const std::optional<std::vector<Residue>>& certificate() const { return cert_; }
  void set_certificate(std::vector<Residue> table);

  bool operator==(const MultilinearPoly& o) const {
    return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  int n_;
  PrimeField field_;
  std::vector<Term> terms_;
  std::optional<std::vector<Residue>> cert_;
};

Residue eval(const MultilinearPoly& p, const CubePoint& a);

MultilinearPoly add(const MultilinearPoly& a, const MultilinearPoly& b);
MultilinearPoly scale(const MultilinearPoly& a, Residue c);
MultilinearPoly multilinearize_product(const MultilinearPoly& a, const MultilinearPoly& b);

struct VarImage {
  enum Kind { kZero, kOne, kVar, kNegVar };
  Kind kind = kZero;
  int index = -1;

  static VarImage zero() { return {kZero, -1}; }
  static VarImage one() { return {kOne, -1}; }
  static VarImage var(int j) { return {kVar, j}; }
  static VarImage neg(int j) { return {kNegVar, j}; }
};

class SubstitutionMap {
 public:
  SubstitutionMap(int target_arity, std::vector<VarImage> images);
  static SubstitutionMap identity(int n);

  int source_arity() const { return static_cast<int>(images_.size()); }
  int target_arity() const { return target_arity_; }
  const VarImage& operator[](int i) const { return images_[i]; }

 private:
  int target_arity_;
  std::vector<VarImage> images_;
};

MultilinearPoly apply_substitution(const MultilinearPoly& p, const SubstitutionMap& s);

struct SliceStats {
  int m;
  BigInt nonzero_count;
  BigInt slice_size;
  Rational psi;
};

/// Exact NZ_m count and psi_m. Uses the certificate if present, full enumeration
/// if the slice is within the cap, otherwise the support-junta count.
SliceStats slice_stats(const MultilinearPoly& p, int m);
/// Same count restricted to the variables in the support (usable for any n).
SliceStats slice_stats_junta(const MultilinearPoly& p, int m);
SliceStats slice_stats_enumerate(const MultilinearPoly& p, int m);

std::optional<std::vector<Residue>> symmetric_value_table(const MultilinearPoly& p);

MultilinearPoly elementary_symmetric(int n, int j, PrimeField field);

/// Calls fn(subset) for every subset of mask with popcount at most limit.
void for_each_subset_upto(std::uint64_t mask, int limit,
                          const std::function<void(std::uint64_t)>& fn);

}  // namespace slicepoly
