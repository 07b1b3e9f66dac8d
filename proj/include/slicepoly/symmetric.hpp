#pragma once

#include <vector>

#include "slicepoly/cube.hpp"

namespace slicepoly {

// A symmetric multilinear polynomial stored by its weight table and its
// coefficients in the basis e_0..e_n. Arity is unbounded, so this is the
// carrier for constructions on hundreds or thousands of variables.
class SymmetricPoly {
 public:
  static SymmetricPoly from_values(int n, PrimeField field, std::vector<Residue> values);
  static SymmetricPoly from_ebasis(int n, PrimeField field, std::vector<Residue> coeffs);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Residue>& values() const { return values_; }
  const std::vector<Residue>& ebasis() const { return ebasis_; }
  Residue value(int w) const { return values_.at(w); }
  /// Largest i with a nonzero e_i coefficient (0 for the zero polynomial).
  int degree() const;
  bool is_zero() const;

  /// Expands sum_i d_i e_i into terms; requires n <= 63 and the term cap.
  MultilinearPoly to_multilinear() const;

 private:
  SymmetricPoly(int n, PrimeField field) : n_(n), field_(field) {}
  int n_;
  PrimeField field_;
  std::vector<Residue> values_;
  std::vector<Residue> ebasis_;
};

/// d_i = sum_{j<=i} (-1)^{i-j} C(i,j) v_j mod p.
std::vector<Residue> values_to_ebasis(const std::vector<Residue>& values, PrimeField field);
/// v_w = sum_i d_i C(w,i) mod p.
std::vector<Residue> ebasis_to_values(const std::vector<Residue>& coeffs, PrimeField field);

}  // namespace slicepoly
