#include "plurigenus/basket.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace plurigenus {

namespace {

void require_nonnegative(std::int64_t m) {
  if (m < 0) throw DomainError("l(Q, m) requires m >= 0, got " + std::to_string(m));
}

// 2r * sum_{k=1}^{upto-1} bk(r - bk) with residues mod r, as an integer numerator.
BigInt partial_numerator(std::int64_t r, std::int64_t b, std::int64_t upto) {
  BigInt acc = 0;
  std::int64_t bk = 0;
  for (std::int64_t k = 1; k < upto; ++k) {
    bk += b;
    if (bk >= r) bk -= r;
    const auto term = static_cast<unsigned __int128>(bk) * static_cast<unsigned __int128>(r - bk);
    if (term <= static_cast<unsigned __int128>(~0UL)) {
      acc += static_cast<unsigned long>(term);
    } else {
      acc += BigInt(bk) * BigInt(r - bk);
    }
  }
  return acc;
}

}  // namespace

QuotientSingularity::QuotientSingularity(std::int64_t r, std::int64_t a) : r_(r), a_(a), b_(0) {
  if (r < 2) throw DomainError("quotient singularity order must be >= 2, got " + std::to_string(r));
  if (a < 1 || a >= r) {
    throw DomainError("quotient singularity weight must satisfy 1 <= a < r, got a=" +
                      std::to_string(a) + ", r=" + std::to_string(r));
  }
  if (std::gcd(a, r) != 1) {
    throw DomainError("quotient singularity weight a=" + std::to_string(a) +
                      " is not coprime to r=" + std::to_string(r));
  }
  b_ = mod_inverse(a, r);
}

QuotientSingularity QuotientSingularity::canonical() const {
  return {r_, std::min(a_, r_ - a_)};
}

Basket::Basket(std::initializer_list<BasketEntry> entries) {
  for (const auto& e : entries) add(e.point, e.count);
}

void Basket::add(const QuotientSingularity& q, std::int64_t count) {
  if (count < 1) throw DomainError("basket multiplicity must be >= 1, got " + std::to_string(count));
  const QuotientSingularity key = q.canonical();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const BasketEntry& e, const QuotientSingularity& k) {
                               return e.point < k;
                             });
  if (it != entries_.end() && it->point == key) {
    it->count += count;
  } else {
    entries_.insert(it, BasketEntry{key, count});
  }
}

Rational l_direct(const QuotientSingularity& q, std::int64_t m) {
  require_nonnegative(m);
  const std::int64_t r = q.order();
  return Rational(partial_numerator(r, q.inverse_weight(), m), BigInt(2 * r));
}

Rational l_closed(const QuotientSingularity& q, std::int64_t m) {
  require_nonnegative(m);
  const std::int64_t r = q.order();
  const std::int64_t periods = m / r;
  const std::int64_t rest = m % r;
  const Rational full = Rational(BigInt(r) * r - 1, 12) * Rational(BigInt(periods));
  return full + Rational(partial_numerator(r, q.inverse_weight(), rest), BigInt(2 * r));
}

Rational l_onewave(std::int64_t r, std::int64_t m) {
  require_nonnegative(m);
  if (r < 1) throw DomainError("l_onewave requires r >= 1, got " + std::to_string(r));
  if (r == 1) return 0;
  const BigInt mb = m % r;
  const BigInt rr = r;
  const Rational partial(mb * (mb - 1) * (3 * rr + 1 - 2 * mb), 12 * rr);
  return partial + Rational(rr * rr - 1, 12) * Rational(BigInt(m / r));
}

bool fletcher_dominates(std::int64_t alpha, std::int64_t beta, std::int64_t m) {
  if (alpha < 2) throw DomainError("fletcher_dominates requires alpha >= 2");
  if (beta < 0 || beta > alpha) throw DomainError("fletcher_dominates requires 0 <= beta <= alpha");
  const std::int64_t m_max = (alpha + 1) / 2;
  if (m < 1 || m > m_max) {
    throw DomainError("fletcher_dominates requires 1 <= m <= " + std::to_string(m_max) +
                      ", got m=" + std::to_string(m));
  }
  const Rational rhs = beta <= 1 ? Rational(0) : l_onewave(beta, m);
  for (std::int64_t a = 1; a < alpha; ++a) {
    if (std::gcd(a, alpha) != 1) continue;
    if (l_closed(QuotientSingularity(alpha, a), m) < rhs) return false;
  }
  return true;
}

std::int64_t basket_index(const Basket& basket) {
  std::int64_t idx = 1;
  for (const auto& e : basket.entries()) idx = std::lcm(idx, e.point.order());
  return idx;
}

Rational basket_l_sum(const Basket& basket, std::int64_t m) {
  require_nonnegative(m);
  Rational total;
  for (const auto& e : basket.entries()) {
    total += Rational(BigInt(e.count)) * l_closed(e.point, m);
  }
  return total;
}

}  // namespace plurigenus
