// Effective bounds: pluricanonical birationality exponents, dual variety
// degrees, Bezout-type degree bounds, map-count bounds and the embedding
// bounds for canonical threefolds of fixed index and volume.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plurigenus/numeric.hpp"

namespace plurigenus {

/// Intersection numbers v[i] = c_1(L)^i . c_{n-i}(Z) of a line bundle L on an
/// n-dimensional smooth projective Z. v[n] is the degree of Z under L.
struct ChernData {
  int n = 0;
  std::vector<BigInt> v;

  ChernData(int n, std::vector<BigInt> v);
};

/// h^i(X, O_X) for the indices with 2i <= n. h[0] must be 1.
struct HodgeData {
  int n = 0;
  std::vector<BigInt> h;

  HodgeData(int n, std::vector<BigInt> h);
};

inline constexpr std::uint64_t kDefaultExpandThreshold = 1'000'000;

/// base^exponent, expanded only when its digit estimate is at most the
/// threshold it was built with.
struct BoundReport {
  BigInt base;
  BigInt exponent;
  std::uint64_t digits_estimate = 0;
  std::optional<BigInt> expanded;

  /// "178^15 (34 digits)", or the full decimal value when expanded and
  /// `prefer_expanded` is set.
  std::string to_text(bool prefer_expanded = false) const;
};

/// Builds the report for base^exponent; base >= 1, exponent >= 0.
BoundReport make_bound_report(const BigInt& base, const BigInt& exponent,
                              std::uint64_t expand_threshold = kDefaultExpandThreshold);

/// Decimal digits of base^exponent, from floor(exponent * log10(base)) + 1.
std::uint64_t power_digits_estimate(const BigInt& base, const BigInt& exponent);

/// deg Z^V = sum_i (-1)^{n+i} (1+i) c_1(L)^i c_{n-i}(Z). Degenerate inputs may
/// give a value <= 0; it is returned unchanged.
BigInt dual_degree(const ChernData& c);

/// a * d^i.
BigInt bezout_bound(const BigInt& a, const BigInt& d, std::uint64_t i);

/// base^(h0^2 - 1).
BoundReport map_count_bound(const BigInt& base, const BigInt& h0,
                            std::uint64_t expand_threshold = kDefaultExpandThreshold);

/// Components of the threefold de Franchis-type bound for smooth X with
/// s K_X very ample.
struct DeFranchisBound {
  BigInt base;  // -[c3 + 2s c1c2 + (3s^2 + 4s^3) c1^3], c1^3 = -K^3
  BigInt h0;    // h^0(sK) = chi(sK)
  BoundReport report;
};

DeFranchisBound defranchis_threefold_bound(std::int64_t s, const Rational& K3, const BigInt& c1c2,
                                           const BigInt& c3, const BigInt& chi_O,
                                           std::uint64_t expand_threshold = kDefaultExpandThreshold);

/// Smallest m0 such that mK is birational for all m >= m0 on a threefold of
/// general type whose canonical model has index r.
std::int64_t hanamura_m0(std::int64_t r);

/// 11 l + 5.
std::int64_t kollar_exponent(std::int64_t l);

struct BirationalityExponent {
  BigInt R;  // lcm(2, ..., 26C - 1)
  BigInt m;  // lcm(4R + 3, 143C + 5)
};

BirationalityExponent birationality_exponent(std::int64_t C);

struct BirationalityCertificate {
  Rational linear_term;  // (1 - 26C) C
  Rational l_term;       // l(1/26C(1,-1,1), 13C)
  Rational lower_bound;  // their sum; equals (52C^2 - 15C - 1) / 24
  bool ok = false;       // lower_bound >= 3/2
};

/// Lower bound for h^0(13C K) on the canonical model when the index does
/// not divide R. Both routes are computed and compared.
BirationalityCertificate birationality_certificate(std::int64_t C);

/// Upper bound for chi(O_Y) of any target of a dominant map from X.
BigInt chi_upper_bound(const HodgeData& h);

struct EmbeddingBounds {
  BigInt N_max;          // 729 r^3 K^3 + 3
  BigInt degX_max;       // 729 r^3 K^3
  BigInt degY_max;       // p^3 K^3
  BigInt graph_deg_max;  // 8 p^3 K^3
};

/// True iff r divides p and p >= 9r.
bool validate_p(std::int64_t p, std::int64_t r);

EmbeddingBounds embedding_bounds(std::int64_t r, const Rational& K3, std::int64_t p);

}  // namespace plurigenus
