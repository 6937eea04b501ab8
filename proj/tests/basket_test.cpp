#include <doctest.h>

#include <numeric>

#include "plurigenus/basket.hpp"
#include "plurigenus/oracle.hpp"

using namespace plurigenus;

namespace {

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

template <typename F>
void for_each_singularity(std::int64_t r_max, F&& f) {
  for (std::int64_t r = 2; r <= r_max; ++r) {
    for (std::int64_t a = 1; a < r; ++a) {
      if (std::gcd(a, r) == 1) f(QuotientSingularity(r, a));
    }
  }
}

}  // namespace

TEST_CASE("QuotientSingularity") {
  const QuotientSingularity p(26, 3);
  CHECK(p.inverse_weight() == 9);
  CHECK(p.canonical().weight() == 3);
  CHECK(QuotientSingularity(26, 23).canonical().weight() == 3);
  CHECK_THROWS_AS(QuotientSingularity(1, 1), DomainError);
  CHECK_THROWS_AS(QuotientSingularity(4, 2), DomainError);
  CHECK_THROWS_AS(QuotientSingularity(5, 0), DomainError);
  CHECK_THROWS_AS(QuotientSingularity(5, 5), DomainError);
}

TEST_CASE("l_direct") {
  CHECK(l_direct({2, 1}, 0) == 0);
  CHECK(l_direct({2, 1}, 1) == 0);
  CHECK(l_direct({2, 1}, 2) == q(1, 4));
  CHECK(l_direct({26, 1}, 13) == q(53, 2));
  CHECK(oracle::l_raw_sum(26, 1, 13) == q(53, 2));
  CHECK_THROWS_AS(l_direct({2, 1}, -1), DomainError);
}

TEST_CASE("l_closed") {
  CHECK(l_closed({3, 1}, 5) == 1);
  CHECK(l_closed({2, 1}, 4) == q(1, 2));
  CHECK(l_closed({26, 1}, 13) == q(53, 2));
  // Without the 1/r on the period term the same point gives 7/3.
  CHECK(oracle::l_closed_as_printed(3, 1, 5) == q(7, 3));
  CHECK(oracle::l_raw_sum(3, 1, 5) == 1);
}

TEST_CASE("l_onewave") {
  CHECK(l_onewave(1, 7) == 0);
  CHECK(l_onewave(26, 13) == q(53, 2));
  CHECK(l_onewave(3, 5) == 1);
  CHECK(l_onewave(3, 5) == l_direct({3, 1}, 5));
  CHECK_THROWS_AS(l_onewave(0, 3), DomainError);
}

TEST_CASE("closed forms equal the raw sum") {
  for_each_singularity(60, [](const QuotientSingularity& p) {
    const std::int64_t r = p.order();
    for (std::int64_t m = 0; m <= 3 * r; ++m) {
      const Rational raw = oracle::l_raw_sum(r, p.weight(), m);
      REQUIRE(l_direct(p, m) == raw);
      REQUIRE(l_closed(p, m) == raw);
      if (p.weight() == 1) REQUIRE(l_onewave(r, m) == raw);
    }
  });
}

TEST_CASE("l is periodic up to (r^2 - 1)/12") {
  for_each_singularity(40, [](const QuotientSingularity& p) {
    const std::int64_t r = p.order();
    const Rational period(BigInt(r * r - 1), BigInt(12));
    for (std::int64_t m = 0; m <= 2 * r; ++m) {
      REQUIRE(l_direct(p, m + r) - l_direct(p, m) == period);
    }
  });
}

TEST_CASE("l is linear on multiples of the index") {
  for_each_singularity(12, [](const QuotientSingularity& p) {
    const std::int64_t r = p.order();
    for (const std::int64_t R : {r, 2 * r, 60 * r / std::gcd<std::int64_t>(60, r)}) {
      for (std::int64_t m = 0; m <= 20; ++m) {
        const Rational expected =
            Rational(BigInt(r * r - 1), BigInt(12)) * Rational(BigInt(R / r)) * Rational(BigInt(m));
        REQUIRE(l_direct(p, R * m) == expected);
      }
    }
  });
}

TEST_CASE("l is symmetric under a -> r - a") {
  for_each_singularity(60, [](const QuotientSingularity& p) {
    const std::int64_t r = p.order();
    const QuotientSingularity mirror(r, r - p.weight());
    for (std::int64_t m = 0; m <= 3 * r; ++m) REQUIRE(l_direct(p, m) == l_direct(mirror, m));
  });
}

TEST_CASE("fletcher_dominates") {
  CHECK(fletcher_dominates(26, 26, 13));
  CHECK(fletcher_dominates(26, 25, 13));
  CHECK(fletcher_dominates(26, 0, 1));
  CHECK(fletcher_dominates(26, 1, 5));
  CHECK_THROWS_AS(fletcher_dominates(26, 25, 14), DomainError);
  CHECK_THROWS_AS(fletcher_dominates(26, 25, 0), DomainError);
  CHECK_THROWS_AS(fletcher_dominates(26, 27, 1), DomainError);
  CHECK_THROWS_AS(fletcher_dominates(1, 0, 1), DomainError);
  // Equality at a = 1 and beta = alpha.
  CHECK(l_closed({26, 1}, 13) == l_onewave(26, 13));
}

TEST_CASE("fletcher_dominates holds on its whole domain for alpha <= 40") {
  for (std::int64_t alpha = 2; alpha <= 40; ++alpha) {
    for (std::int64_t beta = 0; beta <= alpha; ++beta) {
      for (std::int64_t m = 1; m <= (alpha + 1) / 2; ++m) {
        CAPTURE(alpha);
        CAPTURE(beta);
        CAPTURE(m);
        REQUIRE(fletcher_dominates(alpha, beta, m));
      }
    }
  }
}

TEST_CASE("basket canonicalization and index") {
  CHECK(basket_index(Basket{}) == 1);
  CHECK(basket_index(Basket{{{2, 1}, 1}, {{3, 1}, 1}}) == 6);
  CHECK(basket_index(Basket{{{26, 1}, 1}}) == 26);

  Basket a{{{5, 2}, 1}, {{3, 1}, 2}};
  Basket b;
  b.add({3, 2}, 1);
  b.add({5, 3});
  b.add({3, 1});
  CHECK(a == b);
  REQUIRE(a.entries().size() == 2);
  CHECK(a.entries()[0].point.order() == 3);
  CHECK(a.entries()[0].count == 2);
  CHECK(a.entries()[1].point.weight() == 2);
  CHECK_THROWS_AS(b.add({3, 1}, 0), DomainError);
}

TEST_CASE("basket_l_sum") {
  CHECK(basket_l_sum(Basket{}, 5) == 0);
  CHECK(basket_l_sum(Basket{{{26, 1}, 1}}, 13) == q(53, 2));
  CHECK(basket_l_sum(Basket{{{2, 1}, 3}}, 2) == q(3, 4));
  CHECK(basket_l_sum(Basket{{{2, 1}, 1}, {{3, 1}, 1}}, 0) == 0);
}
