// Brute-force reference implementations and the sweeps that check the main
// library against them. Nothing here calls the function it is checking:
// l-values are summed directly, lcms come from a prime sieve, powers from
// repeated multiplication. Only BigInt/Rational and the data types are shared.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plurigenus/basket.hpp"
#include "plurigenus/numeric.hpp"
#include "plurigenus/riemann_roch.hpp"

namespace plurigenus::oracle {

struct VerificationReport {
  std::string check;
  std::string ranges;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> counterexample;  // first failure in sweep order
  std::optional<std::uint64_t> seed;
  std::string note;

  bool passed() const { return !counterexample.has_value(); }
};

// Reference computations.

/// sum_{k=1}^{m-1} bk(r - bk)/(2r), with b found by search and residues by %.
Rational l_raw_sum(std::int64_t r, std::int64_t a, std::int64_t m);

/// The closed form exactly as it is usually printed, without the 1/r on the
/// period term. Wrong for m >= r; kept to demonstrate the discrepancy.
Rational l_closed_as_printed(std::int64_t r, std::int64_t a, std::int64_t m);

/// Product over primes p <= hi of the largest power of p not exceeding hi.
BigInt lcm_by_factorization(std::int64_t hi);

/// base * base * ... * base, exponent times.
BigInt naive_power(const BigInt& base, std::uint64_t exponent);

/// chi(mK) from l_raw_sum.
Rational chi_raw(const ThreefoldData& x, std::int64_t m);

/// True iff chi_raw(x, m) is an integer for m = 0 .. 4r-1.
bool integral_everywhere(const ThreefoldData& x);

// Random instances.

struct RandomInstance {
  ThreefoldData data;
  bool expected_valid;
  bool negative_control;
};

/// Draws a basket, then chi(O) in [-20, 20], then K^3 = t / r^3 with t in
/// [1, 100 r^3] chosen so that every chi(mK) is integral. About 5% of draws
/// are negative controls with t uniform; their validity is decided by
/// integral_everywhere.
RandomInstance random_threefold(std::mt19937_64& rng);

// Sweeps.

enum class ClosedForm { corrected, as_printed };

VerificationReport verify_l_equivalence(std::int64_t r_max, std::int64_t m_span,
                                        ClosedForm form = ClosedForm::corrected);
VerificationReport verify_basket_domination(std::int64_t alpha_max);
VerificationReport verify_lcm_factorization(std::int64_t hi_max);
VerificationReport verify_chi_identities(std::uint64_t samples, std::uint64_t seed);
VerificationReport verify_chi_identities(const ThreefoldData& x);
VerificationReport verify_power_expansion(std::int64_t base_max, std::int64_t exp_max);

/// Every check at its default size, in a fixed order.
std::vector<VerificationReport> verify_all(std::uint64_t seed);

/// Names accepted by verify_named.
std::vector<std::string> check_names();
VerificationReport verify_named(const std::string& name, std::uint64_t seed);

}  // namespace plurigenus::oracle
