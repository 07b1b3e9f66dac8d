#include "slicepoly/numeric.hpp"

#include <sstream>

namespace slicepoly {

Caps& caps() {
  static Caps instance;
  return instance;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt binomial_general(const BigInt& x, std::uint64_t k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// C(a, b) mod p for a, b < p.
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  while (k > 0 || n > 0) {
    std::uint64_t a = n % p, b = k % p;
    if (b > a) return 0;
    r = r * small_binomial(a, b, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

bool is_power_of(std::uint64_t q, std::uint32_t p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint64_t largest_power_dividing(std::uint64_t q, std::uint32_t p) {
  if (q == 0) throw std::invalid_argument("largest_power_dividing: q = 0");
  std::uint64_t r = 1;
  while (q % p == 0) {
    q /= p;
    r *= p;
  }
  return r;
}

std::uint32_t reduce_mod(const BigInt& x, std::uint32_t p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

Real to_real(const BigInt& z) { return Real(z.get_str()); }

Real to_real(const Rational& r) {
  return to_real(BigInt(r.get_num())) / to_real(BigInt(r.get_den()));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt num(digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace slicepoly
