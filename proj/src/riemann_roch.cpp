#include "plurigenus/riemann_roch.hpp"

#include <string>
#include <utility>

namespace plurigenus {

namespace {

Rational volume_term(const Rational& K3, std::int64_t m) {
  const BigInt mm = m;
  return Rational((2 * mm - 1) * mm * (mm - 1), 12) * K3;
}

Rational euler_term(const BigInt& chi_O, std::int64_t m) {
  const BigInt mm = m;
  return Rational(BigInt(-(2 * mm - 1) * chi_O));
}

}  // namespace

ThreefoldData::ThreefoldData(BigInt chi_O, Rational K3, Basket basket)
    : chi_O_(std::move(chi_O)),
      K3_(std::move(K3)),
      basket_(std::move(basket)),
      index_(basket_index(basket_)) {
  if (K3_.sign() <= 0) {
    throw DomainError("K^3 must be positive for a threefold of general type, got " +
                      K3_.to_string());
  }
  const BigInt r = index_;
  if (!(Rational(BigInt(r * r * r)) * K3_).is_integer()) {
    throw DataError("r^3 K^3 must be an integer (r = " + r.get_str() + ", K^3 = " +
                    K3_.to_string() + ")");
  }
}

Rational chi_mK(const ThreefoldData& x, std::int64_t m) {
  if (m < 0) throw DomainError("chi(mK) requires m >= 0, got " + std::to_string(m));
  return volume_term(x.K3(), m) + euler_term(x.chi_O(), m) + basket_l_sum(x.basket(), m);
}

BigInt plurigenus(const ThreefoldData& x, std::int64_t m, PlurigenusMode mode) {
  if (m < 2) throw DomainError("plurigenus requires m >= 2, got " + std::to_string(m));
  if (mode == PlurigenusMode::drop_volume_term) {
    return (euler_term(x.chi_O(), m) + basket_l_sum(x.basket(), m)).ceil();
  }
  const Rational value = chi_mK(x, m);
  if (!value.is_integer()) {
    throw DataError("chi(" + std::to_string(m) + "K) = " + value.to_string() +
                    " is not an integer; inconsistent (chi(O), K^3, basket)");
  }
  if (value.sign() < 0) {
    throw DataError("chi(" + std::to_string(m) + "K) = " + value.to_string() +
                    " is negative; inconsistent (chi(O), K^3, basket)");
  }
  return value.num();
}

ValidationReport validate(const ThreefoldData& x) {
  ValidationReport report;
  const BigInt r = x.index();
  const Rational r3K3 = Rational(BigInt(r * r * r)) * x.K3();
  if (!r3K3.is_integer()) {
    report.passed = false;
    report.failed_check = "r^3 K^3 integral";
    report.failed_value = r3K3;
    return report;
  }
  const Rational chi0 = chi_mK(x, 0);
  if (chi0 != Rational(x.chi_O())) {
    report.passed = false;
    report.failed_check = "chi(0K) = chi(O)";
    report.failed_m = 0;
    report.failed_value = chi0;
    return report;
  }
  const Rational chi1 = chi_mK(x, 1);
  if (chi1 != -Rational(x.chi_O())) {
    report.passed = false;
    report.failed_check = "chi(K) = -chi(O)";
    report.failed_m = 1;
    report.failed_value = chi1;
    return report;
  }
  const std::int64_t last = 4 * x.index() - 1;
  for (std::int64_t m = 0; m <= last; ++m) {
    report.swept_to = m;
    const Rational v = chi_mK(x, m);
    if (!v.is_integer()) {
      report.passed = false;
      report.failed_check = "chi(mK) integral";
      report.failed_m = m;
      report.failed_value = v;
      return report;
    }
  }
  return report;
}

HilbertCoefficients hilbert_coefficients(const ThreefoldData& x) {
  // chi(rtK): the cubic part expands to K^3/12 (2 r^3 t^3 - 3 r^2 t^2 + r t),
  // and l(Q, r t) = (r_Q^2 - 1)/12 * (r / r_Q) * t since r_Q | r.
  const BigInt r = x.index();
  const Rational& K3 = x.K3();
  HilbertCoefficients h;
  h.c3 = Rational(BigInt(r * r * r), 6) * K3;
  h.c2 = Rational(BigInt(-r * r), 4) * K3;
  h.c1 = Rational(r, 12) * K3 - Rational(BigInt(2 * r * x.chi_O()));
  for (const auto& e : x.basket().entries()) {
    const BigInt rq = e.point.order();
    h.c1 += Rational(BigInt(e.count * (rq * rq - 1) * r), BigInt(12 * rq));
  }
  h.c0 = Rational(x.chi_O());
  return h;
}

}  // namespace plurigenus
