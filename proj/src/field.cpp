#include "slicepoly/field.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "slicepoly/numeric.hpp"

namespace slicepoly {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t cols,
                         const std::vector<std::vector<Residue>>& rows)
    : FieldMatrix(field, rows.size(), cols) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("FieldMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) set(r, c, rows[r][c]);
  }
}

RrefResult rref(const FieldMatrix& m) {
  const PrimeField& F = m.field();
  FieldMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    Residue s = F.inv(a.at(r, c));
    for (auto& x : a.row(r)) x = F.mul(x, s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Residue f = a.at(i, c);
      if (f == 0) continue;
      auto dst = a.row(i);
      auto src = a.row(r);
      for (std::size_t j = c; j < a.cols(); ++j) dst[j] = F.sub(dst[j], F.mul(f, src[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::vector<std::vector<Residue>> nullspace_basis(const FieldMatrix& m) {
  const PrimeField& F = m.field();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivot_cols[i]] = F.neg(red.reduced.at(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

RankOracle::RankOracle(PrimeField field, std::size_t cols)
    : field_(field),
      cols_(cols),
      words_((cols + 63) / 64),
      packed_(field.p() == 2),
      pivot_row_(cols, -1) {}

Residue RankOracle::entry(std::size_t i, std::size_t c) const {
  if (packed_) return (bits_[i][c / 64] >> (c % 64)) & 1u;
  return dense_[i][c];
}

std::vector<std::uint64_t> RankOracle::pack(std::span<const Residue> row) const {
  std::vector<std::uint64_t> w(words_, 0);
  for (std::size_t c = 0; c < cols_; ++c)
    if (row[c] & 1u) w[c / 64] |= std::uint64_t{1} << (c % 64);
  return w;
}

bool RankOracle::reduce_dense(std::vector<Residue>& r, std::vector<std::size_t>* used) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::size_t c = pivots_[i];
    Residue f = r[c];
    if (f == 0) continue;
    const auto& src = dense_[i];
    for (std::size_t j = c; j < cols_; ++j)
      if (src[j]) r[j] = field_.sub(r[j], field_.mul(f, src[j]));
    if (used) used->push_back(i);
  }
  return std::any_of(r.begin(), r.end(), [](Residue x) { return x != 0; });
}

bool RankOracle::reduce_packed(std::vector<std::uint64_t>& r, std::vector<std::size_t>* used) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (!((r[c / 64] >> (c % 64)) & 1u)) continue;
    const auto& src = bits_[i];
    for (std::size_t w = c / 64; w < words_; ++w) r[w] ^= src[w];
    if (used) used->push_back(i);
  }
  return std::any_of(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; });
}

bool RankOracle::absorb(std::span<const Residue> row) {
  if (row.size() != cols_) throw DimensionMismatch("RankOracle::absorb: row length");
  std::vector<std::size_t> used;
  std::size_t lead;
  if (packed_) {
    auto r = pack(row);
    bool grew = reduce_packed(r, &used);
    for (auto i : used) ++usage_[i];
    if (!grew) return false;
    std::size_t w = 0;
    while (r[w] == 0) ++w;
    lead = w * 64 + std::countr_zero(r[w]);
    for (auto& other : bits_)
      if ((other[lead / 64] >> (lead % 64)) & 1u)
        for (std::size_t k = lead / 64; k < words_; ++k) other[k] ^= r[k];
    bits_.push_back(std::move(r));
  } else {
    std::vector<Residue> r(row.begin(), row.end());
    for (auto& x : r) x %= field_.p();
    bool grew = reduce_dense(r, &used);
    for (auto i : used) ++usage_[i];
    if (!grew) return false;
    lead = 0;
    while (r[lead] == 0) ++lead;
    Residue s = field_.inv(r[lead]);
    for (std::size_t j = lead; j < cols_; ++j) r[j] = field_.mul(r[j], s);
    for (auto& other : dense_) {
      Residue f = other[lead];
      if (f == 0) continue;
      for (std::size_t j = lead; j < cols_; ++j)
        if (r[j]) other[j] = field_.sub(other[j], field_.mul(f, r[j]));
    }
    dense_.push_back(std::move(r));
  }
  pivot_row_[lead] = static_cast<std::int64_t>(pivots_.size());
  pivots_.push_back(lead);
  usage_.push_back(0);
  return true;
}

std::vector<Residue> RankOracle::residue(std::span<const Residue> row) const {
  if (row.size() != cols_) throw DimensionMismatch("RankOracle: row length");
  std::vector<Residue> out(cols_, 0);
  if (packed_) {
    auto r = pack(row);
    reduce_packed(r, nullptr);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (r[c / 64] >> (c % 64)) & 1u;
  } else {
    out.assign(row.begin(), row.end());
    for (auto& x : out) x %= field_.p();
    reduce_dense(out, nullptr);
  }
  return out;
}

bool RankOracle::member(std::span<const Residue> row) const {
  if (row.size() != cols_) throw DimensionMismatch("RankOracle::member: row length");
  if (packed_) {
    auto r = pack(row);
    return !reduce_packed(r, nullptr);
  }
  std::vector<Residue> r(row.begin(), row.end());
  for (auto& x : r) x %= field_.p();
  return !reduce_dense(r, nullptr);
}

FieldMatrix RankOracle::reduced_form() const {
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  FieldMatrix m(field_, order.size(), cols_);
  for (std::size_t r = 0; r < order.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, entry(order[r], c));
  return m;
}

void RankOracle::complete_pivots(std::vector<Residue>& v) const {
  std::vector<Residue> vals(pivots_.size(), 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Residue s = 0;
    if (packed_) {
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t x = bits_[i][w];
        while (x) {
          std::size_t c = w * 64 + std::countr_zero(x);
          x &= x - 1;
          s ^= v[c] & 1u;
        }
      }
    } else {
      for (std::size_t c = pivots_[i]; c < cols_; ++c)
        if (dense_[i][c]) s = field_.add(s, field_.mul(dense_[i][c], v[c]));
    }
    vals[i] = field_.neg(s);
  }
  for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = vals[i];
}

std::vector<Residue> RankOracle::null_vector(std::size_t free_col) const {
  if (free_col >= cols_ || pivot_row_[free_col] >= 0)
    throw std::invalid_argument("null_vector: not a free column");
  std::vector<Residue> v(cols_, 0);
  v[free_col] = 1;
  complete_pivots(v);
  return v;
}

std::optional<std::vector<Residue>> RankOracle::separating_vector(
    std::span<const Residue> target) const {
  // The residue of target at a free column f equals <target, null_vector(f)>.
  auto res = residue(target);
  for (std::size_t f = 0; f < cols_; ++f)
    if (pivot_row_[f] < 0 && res[f] != 0) return null_vector(f);
  return std::nullopt;
}

}  // namespace slicepoly
