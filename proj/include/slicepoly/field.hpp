#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace slicepoly {

using Residue = std::uint32_t;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Residue reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  Residue inv(Residue a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  FieldMatrix(PrimeField field, std::size_t cols, const std::vector<std::vector<Residue>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = field_.reduce(v); }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool operator==(const FieldMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Residue> data_;
};

struct RrefResult {
  FieldMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination; pivots chosen by first nonzero entry, columns left to right.
RrefResult rref(const FieldMatrix& m);

/// One basis vector per free column, with that column's entry set to 1.
std::vector<std::vector<Residue>> nullspace_basis(const FieldMatrix& m);

/// Incrementally maintained reduced echelon basis of a row space.
/// Uses a bit-packed store when p = 2.
class RankOracle {
 public:
  RankOracle(PrimeField field, std::size_t cols);

  const PrimeField& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool absorb(std::span<const Residue> row);
  bool member(std::span<const Residue> row) const;

  /// Stored rows sorted by pivot column (this equals rref of the absorbed rows).
  FieldMatrix reduced_form() const;

  /// Number of absorbed rows that were reduced using each stored row, in storage order.
  const std::vector<std::uint64_t>& usage() const { return usage_; }
  /// Storage index of the stored row with the given pivot, or -1.
  std::int64_t row_of_pivot(std::size_t col) const { return pivot_row_[col]; }

  /// A vector v with <r, v> = 0 for every stored row r and <target, v> != 0, in the
  /// canonical nullspace form of nullspace_basis; nullopt when target is a member.
  std::optional<std::vector<Residue>> separating_vector(std::span<const Residue> target) const;

  /// Canonical nullspace basis vector attached to a free column.
  std::vector<Residue> null_vector(std::size_t free_col) const;
  /// Uniformly random element of the annihilator of the row space.
  template <class Draw>
  std::vector<Residue> random_null_vector(Draw&& draw) const {
    std::vector<Residue> v(cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] < 0) v[c] = static_cast<Residue>(draw(field_.p()));
    complete_pivots(v);
    return v;
  }

 private:
  Residue entry(std::size_t i, std::size_t c) const;
  void complete_pivots(std::vector<Residue>& v) const;
  // Reduces r in place against the stored rows; appends used storage indices to *used.
  bool reduce_dense(std::vector<Residue>& r, std::vector<std::size_t>* used) const;
  bool reduce_packed(std::vector<std::uint64_t>& r, std::vector<std::size_t>* used) const;
  std::vector<std::uint64_t> pack(std::span<const Residue> row) const;
  std::vector<Residue> residue(std::span<const Residue> row) const;

  PrimeField field_;
  std::size_t cols_;
  std::size_t words_;
  bool packed_;
  std::vector<std::vector<Residue>> dense_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<std::uint64_t> usage_;
};

}  // namespace slicepoly
