#include "slicepoly/closure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "slicepoly/parallel.hpp"

namespace slicepoly {

BigInt monomial_count(int n, int D) {
  BigInt s = 0;
  for (int j = 0; j <= std::min(n, D); ++j) s += binomial(n, j);
  return s;
}

MonomialBasis::MonomialBasis(int n, int D) : n_(n), D_(std::min(std::max(D, 0), n)) {
  if (n < 0 || n > kMaxVars || D < 0) throw std::invalid_argument("MonomialBasis: bad arity or degree");
  if (monomial_count(n, D_) > caps().max_columns)
    throw CapExceeded("N_D = " + monomial_count(n, D_).get_str() + " exceeds the column cap");
  binom_.assign(n + 1, std::vector<std::uint64_t>(D_ + 2, 0));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= D_ + 1; ++b) binom_[a][b] = binomial(a, b).get_ui();
  offset_.assign(D_ + 2, 0);
  for (int j = 0; j <= D_; ++j) offset_[j + 1] = offset_[j] + binom_[n][j];
  for (int j = 0; j <= D_; ++j)
    for (auto pt : SliceRange(n, j)) masks_.push_back(pt.bits);
}

std::size_t MonomialBasis::index(std::uint64_t mask) const {
  int d = std::popcount(mask);
  if (d > D_ || (n_ < 64 && (mask >> n_))) throw std::out_of_range("monomial outside the basis");
  // colex rank among masks of equal weight equals their numeric rank
  std::uint64_t r = 0;
  int i = 1;
  for (std::uint64_t m = mask; m; m &= m - 1, ++i) r += binom_[std::countr_zero(m)][i];
  return offset_[d] + r;
}

void MonomialBasis::fill_row(std::uint64_t point, std::vector<Residue>& row) const {
  row.assign(masks_.size(), 0);
  for_each_subset_upto(point, D_, [&](std::uint64_t s) { row[index(s)] = 1; });
}

MultilinearPoly MonomialBasis::to_poly(const std::vector<Residue>& coeffs, PrimeField field) const {
  if (coeffs.size() != masks_.size()) throw DimensionMismatch("coefficient vector length");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) terms.push_back({masks_[i], coeffs[i]});
  return MultilinearPoly::from_terms(n_, field, std::move(terms));
}

EvaluationMatrix evaluation_matrix(int n, std::span<const std::uint64_t> points, int D, PrimeField field) {
  MonomialBasis basis(n, D);
  if (points.size() > caps().max_rows) throw CapExceeded("|E| exceeds the row cap");
  FieldMatrix m(field, points.size(), basis.size());
  std::vector<Residue> row;
  for (std::size_t r = 0; r < points.size(); ++r) {
    basis.fill_row(points[r], row);
    std::copy(row.begin(), row.end(), m.row(r).begin());
  }
  return {n, {points.begin(), points.end()}, std::move(basis), std::move(m)};
}

ClosureOracle::ClosureOracle(int n, int D, PrimeField field, std::span<const std::uint64_t> points)
    : basis_(n, D), oracle_(field, basis_.size()) {
  if (points.size() > caps().max_rows) throw CapExceeded("|E| exceeds the row cap");
  std::vector<Residue> row;
  for (auto pt : points) {
    if (n < 64 && (pt >> n)) throw std::invalid_argument("point outside the cube");
    basis_.fill_row(pt, row);
    std::size_t before = oracle_.rank();
    point_pivot_.push_back(oracle_.absorb(row) ? static_cast<std::int64_t>(before) : -1);
  }
}

bool ClosureOracle::contains(std::uint64_t point) const {
  std::vector<Residue> row;
  basis_.fill_row(point, row);
  return oracle_.member(row);
}

std::optional<MultilinearPoly> ClosureOracle::separating_poly(std::uint64_t point) const {
  std::vector<Residue> row;
  basis_.fill_row(point, row);
  auto v = oracle_.separating_vector(row);
  if (!v) return std::nullopt;
  return basis_.to_poly(*v, oracle_.field());
}

MultilinearPoly ClosureOracle::sample(Rng& rng) const {
  auto v = oracle_.random_null_vector([&](std::uint32_t p) { return rng.below(p); });
  return basis_.to_poly(v, oracle_.field());
}

std::vector<MultilinearPoly> ClosureOracle::basis_polys() const {
  std::vector<MultilinearPoly> out;
  if (static_cast<double>(ideal_dimension()) * static_cast<double>(columns()) >
      static_cast<double>(caps().max_terms) * 10)
    throw CapExceeded("ideal basis too large to materialize");
  for (std::size_t c = 0; c < columns(); ++c)
    if (oracle_.row_of_pivot(c) < 0) out.push_back(basis_.to_poly(oracle_.null_vector(c), oracle_.field()));
  return out;
}

std::vector<std::int64_t> ClosureOracle::point_usage() const {
  std::vector<std::int64_t> out;
  for (auto s : point_pivot_) out.push_back(s < 0 ? -1 : static_cast<std::int64_t>(oracle_.usage()[s]));
  return out;
}

std::vector<MultilinearPoly> ideal_basis(int n, std::span<const std::uint64_t> E, int D, PrimeField field) {
  return ClosureOracle(n, D, field, E).basis_polys();
}

ClosureResult closure(int n, std::span<const std::uint64_t> E, int D, PrimeField field,
                      const CandidateSet& candidates) {
  ClosureOracle oracle(n, D, field, E);
  ClosureResult res;
  res.n = n;
  res.D = D;
  std::vector<std::uint64_t> distinct(E.begin(), E.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  res.e_size = distinct.size();
  res.rank = oracle.rank();
  res.n_d = oracle.columns();
  res.candidates = candidates;
  if (candidates.full_cube) {
    if (n > caps().max_full_cube_n)
      throw CapExceeded("full-cube candidates need n <= " + std::to_string(caps().max_full_cube_n));
    for (int w = 0; w <= n; ++w)
      for (auto pt : SliceRange(n, w)) res.points.push_back(pt.bits);
  } else {
    for (int w : candidates.slices)
      for (auto pt : enumerate_slice(n, w)) res.points.push_back(pt.bits);
  }
  std::vector<char> in(res.points.size(), 0);
  parallel_for(res.points.size(), [&](std::size_t i) { in[i] = oracle.contains(res.points[i]); });
  res.member.assign(in.begin(), in.end());
  for (std::size_t i = 0; i < res.points.size(); ++i) {
    auto& slot = res.per_slice[std::popcount(res.points[i])];
    ++slot.second;
    if (in[i]) {
      ++slot.first;
      ++res.closure_count;
    }
  }
  return res;
}

NieWangReport nie_wang_check(int n, std::span<const std::uint64_t> E, int D, PrimeField field) {
  auto res = closure(n, E, D, field, CandidateSet::cube());
  NieWangReport r;
  r.closure_count = res.closure_count;
  BigInt cube = BigInt(1) << n;
  r.lhs = Rational(BigInt(static_cast<unsigned long>(res.closure_count)), cube);
  r.lhs.canonicalize();
  r.rhs = Rational(BigInt(static_cast<unsigned long>(res.e_size)), BigInt(static_cast<unsigned long>(res.n_d)));
  r.rhs.canonicalize();
  r.holds = r.lhs <= r.rhs;
  return r;
}

std::vector<MultilinearPoly> sample_ideal(int n, std::span<const std::uint64_t> E, int D, PrimeField field,
                                          std::uint64_t seed, std::size_t count) {
  ClosureOracle oracle(n, D, field, E);
  Rng rng(seed);
  std::vector<MultilinearPoly> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle.sample(rng));
  return out;
}

std::vector<std::uint64_t> hamming_ball(int n, std::uint64_t center, int radius) {
  std::vector<std::uint64_t> out;
  for (int r = 0; r <= std::min(radius, n); ++r)
    for (auto pt : enumerate_slice(n, r)) out.push_back(center ^ pt.bits);
  return out;
}

bool ball_fact_check(int n, int d, PrimeField field) {
  auto ball = hamming_ball(n, 0, d);
  ClosureOracle oracle(n, d, field, ball);
  return oracle.ideal_dimension() == 0;
}

}  // namespace slicepoly
