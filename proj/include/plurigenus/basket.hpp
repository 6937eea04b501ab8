// Baskets of cyclic quotient singularities of type 1/r(a,-a,1) and their
// local contributions l(Q, m) to the plurigenus formula.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "plurigenus/numeric.hpp"

namespace plurigenus {

/// A singularity of type 1/r(a, -a, 1). Holds r >= 2, 1 <= a < r with
/// gcd(a, r) = 1, and the derived inverse b = a^{-1} mod r.
class QuotientSingularity {
 public:
  QuotientSingularity(std::int64_t r, std::int64_t a);

  std::int64_t order() const { return r_; }
  std::int64_t weight() const { return a_; }
  std::int64_t inverse_weight() const { return b_; }

  /// Same singularity with the weight replaced by min(a, r - a).
  QuotientSingularity canonical() const;

  friend auto operator<=>(const QuotientSingularity& x, const QuotientSingularity& y) {
    if (auto c = x.r_ <=> y.r_; c != 0) return c;
    return x.a_ <=> y.a_;
  }
  friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;

 private:
  std::int64_t r_;
  std::int64_t a_;
  std::int64_t b_;
};

struct BasketEntry {
  QuotientSingularity point;
  std::int64_t count;

  friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
};

/// Multiset of quotient singularities, stored sorted with weights
/// canonicalized to min(a, r - a) so equal baskets compare equal.
class Basket {
 public:
  Basket() = default;
  Basket(std::initializer_list<BasketEntry> entries);

  /// Adds `count` copies of `q`. count must be >= 1.
  void add(const QuotientSingularity& q, std::int64_t count = 1);

  std::span<const BasketEntry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Basket&, const Basket&) = default;

 private:
  std::vector<BasketEntry> entries_;
};

/// l(Q, m) as the raw sum over k = 1..m-1 of  b*k (r - b*k) / (2r), residues mod r.
Rational l_direct(const QuotientSingularity& q, std::int64_t m);

/// l(Q, m) split into complete periods and one partial sum:
///   (r^2 - 1)/12 * floor(m / r) + sum_{k=1}^{(m mod r) - 1} ...
Rational l_closed(const QuotientSingularity& q, std::int64_t m);

/// Closed form of l for the type 1/r(1, -1, 1). r = 1 is a smooth point and gives 0.
Rational l_onewave(std::int64_t r, std::int64_t m);

/// Checks l(1/alpha(a,-a,1), m) >= l(1/beta(1,-1,1), m) for every weight a
/// of order alpha. Requires 0 <= beta <= alpha and 1 <= m <= (alpha+1)/2.
bool fletcher_dominates(std::int64_t alpha, std::int64_t beta, std::int64_t m);

/// lcm of entry orders; 1 for the empty basket.
std::int64_t basket_index(const Basket& basket);

/// Multiplicity-weighted sum of l(Q, m) over the basket.
Rational basket_l_sum(const Basket& basket, std::int64_t m);

}  // namespace plurigenus
