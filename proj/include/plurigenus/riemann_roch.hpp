// The plurigenus formula for projective threefolds with canonical
// singularities:
//
//   chi(mK) = (2m-1) m (m-1) K^3 / 12 - (2m-1) chi(O) + sum_Q l(Q, m)
//
// where Q runs over the basket.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plurigenus/basket.hpp"
#include "plurigenus/numeric.hpp"

namespace plurigenus {

/// chi(O), K^3 and the basket of a canonical threefold. Construction
/// enforces K^3 > 0 and r^3 K^3 integral for r the basket index.
/// Integrality of chi(mK) is checked by validate(), not here.
class ThreefoldData {
 public:
  ThreefoldData(BigInt chi_O, Rational K3, Basket basket);

  const BigInt& chi_O() const { return chi_O_; }
  const Rational& K3() const { return K3_; }
  const Basket& basket() const { return basket_; }
  std::int64_t index() const { return index_; }

 private:
  BigInt chi_O_;
  Rational K3_;
  Basket basket_;
  std::int64_t index_;
};

Rational chi_mK(const ThreefoldData& x, std::int64_t m);

enum class PlurigenusMode {
  full,
  /// Omit the (positive) K^3 term and round up: the conservative integer
  /// lower bound for h^0(mK) used when K^3 is unknown.
  drop_volume_term,
};

/// h^0(mK) = chi(mK) for m >= 2. Throws DataError when chi(mK) is not a
/// nonnegative integer at this m.
BigInt plurigenus(const ThreefoldData& x, std::int64_t m,
                  PlurigenusMode mode = PlurigenusMode::full);

struct ValidationReport {
  bool passed = true;
  /// Name of the first violated check ("r^3 K^3 integral", "chi(0K) = chi(O)",
  /// "chi(K) = -chi(O)", "chi(mK) integral").
  std::string failed_check;
  /// The offending m for the integrality sweep.
  std::optional<std::int64_t> failed_m;
  std::optional<Rational> failed_value;
  /// Largest m examined by the integrality sweep.
  std::int64_t swept_to = 0;
};

/// Sweeps m = 0 .. 4r-1. For fixed m mod r, chi(mK) is a cubic in m div r,
/// so integrality at four consecutive periods implies it for every m >= 0.
ValidationReport validate(const ThreefoldData& x);

/// Coefficients of the cubic t -> chi(r t K), r the index, valid for all t >= 0.
struct HilbertCoefficients {
  Rational c3;
  Rational c2;
  Rational c1;
  Rational c0;

  Rational operator()(const Rational& t) const { return ((c3 * t + c2) * t + c1) * t + c0; }
};

HilbertCoefficients hilbert_coefficients(const ThreefoldData& x);

}  // namespace plurigenus
