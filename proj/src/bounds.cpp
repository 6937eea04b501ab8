#include "plurigenus/bounds.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "plurigenus/basket.hpp"
#include "plurigenus/riemann_roch.hpp"

namespace plurigenus {

namespace {

BigInt integral_or_throw(const Rational& q, const std::string& what) {
  if (!q.is_integer()) throw DataError(what + " = " + q.to_string() + " is not an integer");
  return q.num();
}

// log10(x) for x >= 1, from GMP's mantissa/exponent split so it works at any size.
long double log10_big(const BigInt& x) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log10(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * std::log10(2.0L);
}

}  // namespace

ChernData::ChernData(int n_, std::vector<BigInt> v_) : n(n_), v(std::move(v_)) {
  if (n < 1) throw DomainError("ChernData: dimension must be >= 1");
  if (v.size() != static_cast<std::size_t>(n) + 1) {
    throw DomainError("ChernData: expected " + std::to_string(n + 1) + " intersection numbers, got " +
                      std::to_string(v.size()));
  }
  if (v.back() < 1) throw DomainError("ChernData: degree term c_1(L)^n must be positive");
}

HodgeData::HodgeData(int n_, std::vector<BigInt> h_) : n(n_), h(std::move(h_)) {
  if (n < 1) throw DomainError("HodgeData: dimension must be >= 1");
  const std::size_t needed = static_cast<std::size_t>(n) / 2 + 1;
  if (h.size() < needed || h.size() > static_cast<std::size_t>(n) + 1) {
    throw DomainError("HodgeData: expected between " + std::to_string(needed) + " and " +
                      std::to_string(n + 1) + " values h^i(O), got " + std::to_string(h.size()));
  }
  if (h.front() != 1) throw DomainError("HodgeData: h^0(O) must be 1 for a connected variety");
  for (const auto& x : h) {
    if (x < 0) throw DomainError("HodgeData: h^i(O) must be nonnegative");
  }
}

std::uint64_t power_digits_estimate(const BigInt& base, const BigInt& exponent) {
  if (base < 1) throw DomainError("power_digits_estimate: base must be >= 1");
  if (exponent < 0) throw DomainError("power_digits_estimate: exponent must be >= 0");
  if (base == 1 || exponent == 0) return 1;
  const long double e = mpz_get_d(exponent.get_mpz_t());
  const long double lg = e * log10_big(base);
  return static_cast<std::uint64_t>(std::floor(lg)) + 1;
}

BoundReport make_bound_report(const BigInt& base, const BigInt& exponent,
                              std::uint64_t expand_threshold) {
  BoundReport report;
  report.base = base;
  report.exponent = exponent;
  report.digits_estimate = power_digits_estimate(base, exponent);
  if (report.digits_estimate <= expand_threshold) {
    report.expanded = pow_by_squaring(base, exponent);
  }
  return report;
}

std::string BoundReport::to_text(bool prefer_expanded) const {
  if (prefer_expanded && expanded) return expanded->get_str();
  const std::size_t digits = expanded ? digit_count(*expanded) : digits_estimate;
  return base.get_str() + "^" + exponent.get_str() + " (" + std::to_string(digits) + " digits)";
}

BigInt dual_degree(const ChernData& c) {
  BigInt total = 0;
  for (int i = 0; i <= c.n; ++i) {
    const BigInt term = BigInt(1 + i) * c.v[static_cast<std::size_t>(i)];
    if ((c.n + i) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt bezout_bound(const BigInt& a, const BigInt& d, std::uint64_t i) {
  return a * pow_by_squaring(d, BigInt(static_cast<unsigned long>(i)));
}

BoundReport map_count_bound(const BigInt& base, const BigInt& h0, std::uint64_t expand_threshold) {
  if (base < 1) throw DomainError("map_count_bound: base must be >= 1, got " + base.get_str());
  if (h0 < 1) throw DomainError("map_count_bound: h0 must be >= 1, got " + h0.get_str());
  return make_bound_report(base, BigInt(h0 * h0 - 1), expand_threshold);
}

DeFranchisBound defranchis_threefold_bound(std::int64_t s, const Rational& K3, const BigInt& c1c2,
                                           const BigInt& c3, const BigInt& chi_O,
                                           std::uint64_t expand_threshold) {
  if (s < 2) throw DomainError("defranchis: s must be >= 2, got " + std::to_string(s));
  if (K3.sign() <= 0) throw DomainError("defranchis: K^3 must be positive");
  const BigInt ss = s;
  const Rational c1_cubed = -K3;
  const Rational sum = Rational(c3) + Rational(BigInt(2 * ss * c1c2)) +
                       Rational(BigInt(3 * ss * ss + 4 * ss * ss * ss)) * c1_cubed;
  const BigInt base = integral_or_throw(-sum, "dual degree base");
  if (base <= 0) {
    throw DataError("defranchis: dual degree base " + base.get_str() +
                    " is not positive; inconsistent Chern data");
  }
  const ThreefoldData smooth(chi_O, K3, Basket{});
  const Rational h0q = chi_mK(smooth, s);
  const BigInt h0 = integral_or_throw(h0q, "h^0(" + std::to_string(s) + "K)");
  if (h0 < 1) {
    throw DataError("defranchis: h^0(" + std::to_string(s) + "K) = " + h0.get_str() +
                    " is not positive; inconsistent data");
  }
  return DeFranchisBound{base, h0, map_count_bound(base, h0, expand_threshold)};
}

std::int64_t hanamura_m0(std::int64_t r) {
  if (r < 1) throw DomainError("hanamura_m0: index must be >= 1, got " + std::to_string(r));
  if (r <= 2) return 4 * r + 5;
  if (r <= 5) return 4 * r + 4;
  return 4 * r + 3;
}

std::int64_t kollar_exponent(std::int64_t l) {
  if (l < 1) throw DomainError("kollar_exponent: l must be >= 1, got " + std::to_string(l));
  return 11 * l + 5;
}

BirationalityExponent birationality_exponent(std::int64_t C) {
  if (C < 1) throw DomainError("birationality_exponent: C must be >= 1, got " + std::to_string(C));
  BirationalityExponent out;
  out.R = lcm_range(2, 26 * C - 1);
  out.m = lcm(BigInt(4 * out.R + 3), BigInt(kollar_exponent(13 * C)));
  return out;
}

BirationalityCertificate birationality_certificate(std::int64_t C) {
  if (C < 1) throw DomainError("birationality_certificate: C must be >= 1, got " + std::to_string(C));
  const BigInt c = C;
  BirationalityCertificate cert;
  cert.linear_term = Rational(BigInt((1 - 26 * c) * c));
  cert.l_term = l_onewave(26 * C, 13 * C);
  cert.lower_bound = cert.linear_term + cert.l_term;
  const Rational closed(BigInt(52 * c * c - 15 * c - 1), 24);
  if (closed != cert.lower_bound) {
    throw InternalError("birationality_certificate: basket evaluation " + cert.lower_bound.to_string() +
                        " disagrees with closed form " + closed.to_string());
  }
  cert.ok = cert.lower_bound >= Rational(3, 2);
  return cert;
}

BigInt chi_upper_bound(const HodgeData& h) {
  BigInt total = 0;
  for (std::size_t i = 0; i < h.h.size() && 2 * i <= static_cast<std::size_t>(h.n); ++i) {
    total += h.h[i];
  }
  return total;
}

bool validate_p(std::int64_t p, std::int64_t r) {
  if (p < 1 || r < 1) return false;
  return p % r == 0 && p >= 9 * r;
}

EmbeddingBounds embedding_bounds(std::int64_t r, const Rational& K3, std::int64_t p) {
  if (r < 1) throw DomainError("embedding_bounds: index r must be >= 1");
  if (K3.sign() <= 0) throw DomainError("embedding_bounds: K^3 must be positive");
  if (!validate_p(p, r)) {
    throw DomainError("embedding_bounds: p = " + std::to_string(p) + " must be divisible by r = " +
                      std::to_string(r) + " and at least 9r = " + std::to_string(9 * r));
  }
  const BigInt rr = r;
  const BigInt pp = p;
  const BigInt r3k = integral_or_throw(Rational(BigInt(rr * rr * rr)) * K3, "r^3 K^3");
  const BigInt p3k = integral_or_throw(Rational(BigInt(pp * pp * pp)) * K3, "p^3 K^3");
  EmbeddingBounds out;
  out.degX_max = 729 * r3k;
  out.N_max = out.degX_max + 3;
  out.degY_max = p3k;
  out.graph_deg_max = 8 * p3k;
  return out;
}

}  // namespace plurigenus
