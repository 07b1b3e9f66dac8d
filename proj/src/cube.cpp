#include "slicepoly/cube.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace slicepoly {

CubePoint::CubePoint(int n_, std::uint64_t bits_) : n(n_), bits(bits_) {
  if (n < 0 || n > 64) throw std::invalid_argument("CubePoint: bad arity");
  if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("CubePoint: bit beyond arity");
}

SliceRange::iterator& SliceRange::iterator::operator++() {
  if (v_ == 0) {
    done_ = true;
    return *this;
  }
  std::uint64_t next = next_same_weight(v_);
  if (next <= v_ || (n_ < 64 && (next >> n_) != 0))
    done_ = true;
  else
    v_ = next;
  return *this;
}

SliceRange::iterator SliceRange::begin() const {
  if (k_ < 0 || k_ > n_) return {};
  std::uint64_t first = k_ == 64 ? ~0ull : (std::uint64_t{1} << k_) - 1;
  return {n_, first, false};
}

SliceRange enumerate_slice(int n, int k) {
  if (n < 0 || n > kMaxVars || k < 0 || k > n)
    throw std::invalid_argument("enumerate_slice: need 0 <= k <= n <= 63");
  if (binomial(n, k) > caps().max_slice_points)
    throw CapExceeded("slice C(" + std::to_string(n) + "," + std::to_string(k) +
                      ") exceeds the enumeration cap");
  return {n, k};
}

std::vector<std::uint64_t> slice_masks(int n, int k) {
  std::vector<std::uint64_t> out;
  for (auto pt : enumerate_slice(n, k)) out.push_back(pt.bits);
  return out;
}

MultilinearPoly::MultilinearPoly(int n, PrimeField field) : n_(n), field_(field) {
  if (n < 0 || n > kMaxVars) throw std::invalid_argument("MultilinearPoly: arity out of range");
}

MultilinearPoly MultilinearPoly::constant(int n, PrimeField field, Residue c) {
  MultilinearPoly p(n, field);
  c = field.reduce(c);
  if (c) p.terms_.push_back({0, c});
  p.cert_ = std::vector<Residue>(n + 1, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(int n, PrimeField field, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
  MultilinearPoly p(n, field);
  p.terms_.push_back({std::uint64_t{1} << i, 1});
  return p;
}

MultilinearPoly MultilinearPoly::from_terms(int n, PrimeField field, std::vector<Term> terms) {
  MultilinearPoly p(n, field);
  const std::uint64_t limit = n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1;
  for (auto& t : terms)
    if (t.mask & ~limit) throw DimensionMismatch("term mask beyond arity");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.mask, b.mask); });
  for (std::size_t i = 0; i < terms.size();) {
    std::uint64_t m = terms[i].mask;
    Residue c = 0;
    for (; i < terms.size() && terms[i].mask == m; ++i) c = field.add(c, terms[i].coeff % field.p());
    if (c) p.terms_.push_back({m, c});
  }
  return p;
}

Residue MultilinearPoly::coeff(std::uint64_t mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, std::uint64_t m) { return canonical_less(t.mask, m); });
  return it != terms_.end() && it->mask == mask ? it->coeff : 0;
}

std::uint64_t MultilinearPoly::support() const {
  std::uint64_t s = 0;
  for (auto& t : terms_) s |= t.mask;
  return s;
}

Residue MultilinearPoly::eval(std::uint64_t bits) const {
  std::uint64_t acc = 0;
  const int deg_cap = std::popcount(bits);
  for (auto& t : terms_) {
    if (std::popcount(t.mask) > deg_cap) break;
    if ((t.mask & ~bits) == 0) acc += t.coeff;
  }
  return static_cast<Residue>(acc % field_.p());
}

void MultilinearPoly::set_certificate(std::vector<Residue> table) {
  if (table.size() != static_cast<std::size_t>(n_) + 1)
    throw DimensionMismatch("certificate length must be n+1");
  cert_ = std::move(table);
}

Residue eval(const MultilinearPoly& p, const CubePoint& a) {
  if (a.n != p.n()) throw DimensionMismatch("eval: point arity differs from polynomial arity");
  return p.eval(a.bits);
}

namespace {

void require_compatible(const MultilinearPoly& a, const MultilinearPoly& b) {
  if (a.n() != b.n() || !(a.field() == b.field()))
    throw DimensionMismatch("polynomials over different arities or fields");
}

MultilinearPoly from_map(int n, PrimeField f, const std::unordered_map<std::uint64_t, std::uint64_t>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c % f.p()) terms.push_back({m, static_cast<Residue>(c % f.p())});
  return MultilinearPoly::from_terms(n, f, std::move(terms));
}

std::optional<std::vector<Residue>> combine_certs(const MultilinearPoly& a, const MultilinearPoly& b,
                                                  bool product) {
  if (!a.certificate() || !b.certificate()) return std::nullopt;
  const auto& x = *a.certificate();
  const auto& y = *b.certificate();
  std::vector<Residue> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = product ? a.field().mul(x[i], y[i]) : a.field().add(x[i], y[i]);
  return out;
}

}  // namespace

MultilinearPoly add(const MultilinearPoly& a, const MultilinearPoly& b) {
  require_compatible(a, b);
  std::vector<Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  auto out = MultilinearPoly::from_terms(a.n(), a.field(), std::move(terms));
  if (auto c = combine_certs(a, b, false)) out.set_certificate(std::move(*c));
  return out;
}

MultilinearPoly scale(const MultilinearPoly& a, Residue c) {
  std::vector<Term> terms;
  for (auto& t : a.terms()) terms.push_back({t.mask, a.field().mul(t.coeff, a.field().reduce(c))});
  auto out = MultilinearPoly::from_terms(a.n(), a.field(), std::move(terms));
  if (a.certificate()) {
    auto table = *a.certificate();
    for (auto& v : table) v = a.field().mul(v, a.field().reduce(c));
    out.set_certificate(std::move(table));
  }
  return out;
}

MultilinearPoly multilinearize_product(const MultilinearPoly& a, const MultilinearPoly& b) {
  require_compatible(a, b);
  const auto& F = a.field();
  if (static_cast<double>(a.size()) * static_cast<double>(b.size()) >
      100.0 * static_cast<double>(caps().max_terms))
    throw CapExceeded("multilinearize_product: term pairs exceed the cap");
  std::unordered_map<std::uint64_t, std::uint64_t> acc;
  for (auto& s : a.terms())
    for (auto& t : b.terms()) {
      auto& slot = acc[s.mask | t.mask];
      slot = (slot + static_cast<std::uint64_t>(F.mul(s.coeff, t.coeff))) % F.p();
      if (acc.size() > caps().max_terms) throw CapExceeded("multilinearize_product: term cap");
    }
  auto out = from_map(a.n(), F, acc);
  if (auto c = combine_certs(a, b, true)) out.set_certificate(std::move(*c));
  return out;
}

SubstitutionMap::SubstitutionMap(int target_arity, std::vector<VarImage> images)
    : target_arity_(target_arity), images_(std::move(images)) {
  if (target_arity < 0 || target_arity > kMaxVars) throw std::invalid_argument("bad target arity");
  for (auto& im : images_)
    if ((im.kind == VarImage::kVar || im.kind == VarImage::kNegVar) &&
        (im.index < 0 || im.index >= target_arity))
      throw std::out_of_range("substitution target index out of range");
}

SubstitutionMap SubstitutionMap::identity(int n) {
  std::vector<VarImage> im;
  for (int i = 0; i < n; ++i) im.push_back(VarImage::var(i));
  return {n, std::move(im)};
}

MultilinearPoly apply_substitution(const MultilinearPoly& p, const SubstitutionMap& s) {
  if (s.source_arity() != p.n())
    throw DimensionMismatch("substitution does not cover every variable exactly once");
  const auto& F = p.field();
  std::unordered_map<std::uint64_t, std::uint64_t> acc;
  for (auto& t : p.terms()) {
    std::uint64_t pos = 0, neg = 0;
    bool vanish = false;
    for (std::uint64_t m = t.mask; m; m &= m - 1) {
      const auto& im = s[std::countr_zero(m)];
      switch (im.kind) {
        case VarImage::kZero: vanish = true; break;
        case VarImage::kOne: break;
        case VarImage::kVar: pos |= std::uint64_t{1} << im.index; break;
        case VarImage::kNegVar: neg |= std::uint64_t{1} << im.index; break;
      }
      if (vanish) break;
    }
    // x (1 - x) = 0 on the cube
    if (vanish || (pos & neg)) continue;
    if (std::popcount(neg) > 30) throw CapExceeded("apply_substitution: negation expansion");
    // prod_{j in neg} (1 - x_j) = sum_{T subset neg} (-1)^|T| x_T
    for (std::uint64_t sub = neg;; sub = (sub - 1) & neg) {
      Residue c = std::popcount(sub) % 2 ? F.neg(t.coeff) : t.coeff;
      auto& slot = acc[pos | sub];
      slot = (slot + c) % F.p();
      if (sub == 0) break;
    }
    if (acc.size() > caps().max_terms) throw CapExceeded("apply_substitution: term cap");
  }
  return from_map(s.target_arity(), F, acc);
}

namespace {

std::uint64_t compress(std::uint64_t x, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (std::uint64_t m = mask; m; m &= m - 1, ++k)
    if (x & (m & -m)) out |= std::uint64_t{1} << k;
  return out;
}

SliceStats make_stats(int n, int m, BigInt count) {
  SliceStats s{m, std::move(count), binomial(n, m), Rational()};
  if (s.slice_size != 0) {
    s.psi = Rational(s.nonzero_count, s.slice_size);
    s.psi.canonicalize();
  }
  return s;
}

}  // namespace

SliceStats slice_stats_enumerate(const MultilinearPoly& p, int m) {
  std::uint64_t count = 0;
  for (auto pt : enumerate_slice(p.n(), m))
    if (p.eval(pt.bits)) ++count;
  return make_stats(p.n(), m, BigInt(static_cast<unsigned long>(count)));
}

SliceStats slice_stats_junta(const MultilinearPoly& p, int m) {
  if (m < 0 || m > p.n()) throw std::invalid_argument("slice_stats: weight out of range");
  const std::uint64_t supp = p.support();
  const int s = std::popcount(supp);
  if (s > 24) throw CapExceeded("slice_stats: support too large for the junta route");
  const std::size_t size = std::size_t{1} << s;
  std::vector<std::uint64_t> val(size, 0);
  for (auto& t : p.terms()) val[compress(t.mask, supp)] += t.coeff;
  // zeta transform: val[b] = sum over sub-masks
  for (int i = 0; i < s; ++i)
    for (std::size_t b = 0; b < size; ++b)
      if (b >> i & 1) val[b] = (val[b] + val[b ^ (std::size_t{1} << i)]) % p.field().p();
  std::vector<std::uint64_t> by_weight(s + 1, 0);
  for (std::size_t b = 0; b < size; ++b)
    if (val[b] % p.field().p()) ++by_weight[std::popcount(b)];
  BigInt count = 0;
  for (int w = 0; w <= s; ++w)
    if (by_weight[w] && m - w >= 0)
      count += BigInt(static_cast<unsigned long>(by_weight[w])) * binomial(p.n() - s, m - w);
  return make_stats(p.n(), m, std::move(count));
}

SliceStats slice_stats(const MultilinearPoly& p, int m) {
  if (m < 0 || m > p.n()) throw std::invalid_argument("slice_stats: weight out of range");
  if (p.certificate())
    return make_stats(p.n(), m, (*p.certificate())[m] ? binomial(p.n(), m) : BigInt(0));
  if (binomial(p.n(), m) <= caps().max_slice_points) return slice_stats_enumerate(p, m);
  return slice_stats_junta(p, m);
}

std::optional<std::vector<Residue>> symmetric_value_table(const MultilinearPoly& p) {
  if (p.certificate()) return p.certificate();
  // A multilinear polynomial is symmetric iff its coefficients depend only on degree.
  const int n = p.n();
  const auto& F = p.field();
  std::vector<Residue> by_degree(n + 1, 0);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (auto& t : p.terms()) {
    int d = std::popcount(t.mask);
    if (counts[d] && by_degree[d] != t.coeff) return std::nullopt;
    by_degree[d] = t.coeff;
    ++counts[d];
  }
  for (int d = 0; d <= n; ++d)
    if (counts[d] && BigInt(static_cast<unsigned long>(counts[d])) != binomial(n, d)) return std::nullopt;
  std::vector<Residue> table(n + 1, 0);
  for (int w = 0; w <= n; ++w) {
    Residue v = 0;
    for (int d = 0; d <= w; ++d)
      if (by_degree[d]) v = F.add(v, F.mul(by_degree[d], binomial_mod(w, d, F.p())));
    table[w] = v;
  }
  return table;
}

MultilinearPoly elementary_symmetric(int n, int j, PrimeField field) {
  if (j < 0 || j > n) throw std::invalid_argument("elementary_symmetric: need 0 <= j <= n");
  if (binomial(n, j) > caps().max_terms) throw CapExceeded("elementary_symmetric: term cap");
  std::vector<Term> terms;
  for (auto pt : SliceRange(n, j)) terms.push_back({pt.bits, 1});
  auto p = MultilinearPoly::from_terms(n, field, std::move(terms));
  std::vector<Residue> table(n + 1);
  for (int w = 0; w <= n; ++w) table[w] = binomial_mod(w, j, field.p());
  p.set_certificate(std::move(table));
  return p;
}

void for_each_subset_upto(std::uint64_t mask, int limit,
                          const std::function<void(std::uint64_t)>& fn) {
  // Recursive over set bits, pruned at the size limit.
  std::vector<int> bits;
  for (std::uint64_t m = mask; m; m &= m - 1) bits.push_back(std::countr_zero(m));
  std::function<void(std::size_t, std::uint64_t, int)> rec = [&](std::size_t i, std::uint64_t cur, int size) {
    if (i == bits.size()) {
      fn(cur);
      return;
    }
    rec(i + 1, cur, size);
    if (size < limit) rec(i + 1, cur | (std::uint64_t{1} << bits[i]), size + 1);
  };
  rec(0, 0, 0);
}

}  // namespace slicepoly
