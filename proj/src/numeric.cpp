#include "plurigenus/numeric.hpp"

#include <numeric>
#include <tuple>
#include <utility>
#include <ostream>

namespace plurigenus {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

// Strips one leading sign; returns true if it was negative.
bool take_sign(std::string_view& text) {
  if (text.starts_with('-')) {
    text.remove_prefix(1);
    return true;
  }
  if (text.starts_with(kUnicodeMinus)) {
    text.remove_prefix(kUnicodeMinus.size());
    return true;
  }
  return false;
}

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("expected an integer in '" + std::string(whole) + "'");
  for (const char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("invalid character in number '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

BigInt Rational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  const bool negative = take_sign(text);
  const auto slash = text.find('/');
  BigInt num = parse_digits(text.substr(0, slash), whole);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt lcm_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 1) throw DomainError("lcm_range: lower end must be >= 1");
  if (lo > hi) throw DomainError("lcm_range: empty range");
  BigInt acc = 1;
  for (std::int64_t n = lo; n <= hi; ++n) {
    mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return acc;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t r) {
  if (r < 2) throw DomainError("mod_inverse: modulus must be >= 2");
  // Extended Euclid on (a mod r, r).
  std::int64_t old_r = residue(a, r), cur_r = r;
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t q = old_r / cur_r;
    std::tie(old_r, cur_r) = std::pair{cur_r, old_r - q * cur_r};
    std::tie(old_s, cur_s) = std::pair{cur_s, old_s - q * cur_s};
  }
  if (old_r != 1) {
    throw DomainError("mod_inverse: " + std::to_string(a) + " is not a unit modulo " +
                      std::to_string(r));
  }
  return residue(old_s, r);
}

std::int64_t residue(std::int64_t j, std::int64_t r) {
  if (r < 1) throw DomainError("residue: modulus must be >= 1");
  const std::int64_t m = j % r;
  return m < 0 ? m + r : m;
}

std::size_t digit_count(const BigInt& x) {
  if (x == 0) return 1;
  const BigInt mag = abs(x);
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t k = mpz_sizeinbase(mag.get_mpz_t(), 10);
  BigInt low;
  mpz_ui_pow_ui(low.get_mpz_t(), 10, k - 1);
  if (mag < low) --k;
  return k;
}

BigInt pow_by_squaring(const BigInt& base, const BigInt& exponent) {
  if (exponent < 0) throw DomainError("pow_by_squaring: negative exponent");
  BigInt result = 1;
  BigInt square = base;
  BigInt e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= square;
    e >>= 1;
    if (e > 0) square *= square;
  }
  return result;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigInt parse_integer(std::string_view text) {
  const std::string_view whole = text;
  const bool negative = take_sign(text);
  BigInt v = parse_digits(text, whole);
  return negative ? BigInt(-v) : v;
}

}  // namespace plurigenus
