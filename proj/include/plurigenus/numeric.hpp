// Exact integer and rational arithmetic plus the small amount of elementary
// number theory the rest of the library needs.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plurigenus {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when input data is internally inconsistent (e.g. a non-integral
/// Euler characteristic that must be an integer).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two independent computations of the same quantity disagree.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                    // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}           // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigInt floor() const;
  BigInt ceil() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Accepts "p", "p/q", with an optional leading '-' (ASCII or U+2212).
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

/// lcm of every integer in [lo, hi].
BigInt lcm_range(std::int64_t lo, std::int64_t hi);

/// b in [1, r-1] with a*b = 1 (mod r). r = 1 is allowed only in the trivial
/// sense and rejected; gcd(a, r) != 1 is a domain error.
std::int64_t mod_inverse(std::int64_t a, std::int64_t r);

/// Smallest nonnegative residue of j modulo r.
std::int64_t residue(std::int64_t j, std::int64_t r);

/// Number of decimal digits of |x|; digit_count(0) == 1.
std::size_t digit_count(const BigInt& x);

/// base^exponent by binary repeated squaring. exponent must be >= 0.
BigInt pow_by_squaring(const BigInt& base, const BigInt& exponent);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Parses a decimal integer with optional leading '-' (ASCII or U+2212).
BigInt parse_integer(std::string_view text);

}  // namespace plurigenus
