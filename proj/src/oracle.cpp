#include "plurigenus/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plurigenus/bounds.hpp"

namespace plurigenus::oracle {

namespace {

std::int64_t brute_inverse(std::int64_t a, std::int64_t r) {
  for (std::int64_t b = 1; b < r; ++b) {
    if ((a * b) % r == 1) return b;
  }
  throw DomainError("no inverse of " + std::to_string(a) + " modulo " + std::to_string(r));
}

std::vector<std::int64_t> primes_up_to(std::int64_t hi) {
  std::vector<bool> composite(static_cast<std::size_t>(std::max<std::int64_t>(hi, 1)) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= hi; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (std::int64_t q = p * p; q <= hi; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

std::size_t decimal_length(const BigInt& x) {
  const BigInt mag = abs(x);
  const std::string s = mag.get_str();
  return s.size();
}

void record(VerificationReport& report, const std::string& what) {
  ++report.failures;
  if (!report.counterexample) report.counterexample = what;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

BigInt uniform_big(std::mt19937_64& rng, const BigInt& lo, const BigInt& hi) {
  // Ranges here stay far below 2^63.
  return BigInt(uniform(rng, lo.get_si(), hi.get_si()));
}

Basket random_basket(std::mt19937_64& rng) {
  Basket basket;
  const std::int64_t kinds = uniform(rng, 0, 3);
  for (std::int64_t i = 0; i < kinds; ++i) {
    const std::int64_t r = uniform(rng, 2, 8);
    std::vector<std::int64_t> weights;
    for (std::int64_t a = 1; a < r; ++a) {
      if (std::gcd(a, r) == 1) weights.push_back(a);
    }
    const std::int64_t a = weights[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(weights.size()) - 1))];
    basket.add(QuotientSingularity(r, a), uniform(rng, 1, 3));
  }
  return basket;
}

std::int64_t lcm_of_orders(const Basket& basket) {
  std::int64_t r = 1;
  for (const auto& e : basket.entries()) r = std::lcm(r, e.point.order());
  return r;
}

Rational l_raw_basket(const Basket& basket, std::int64_t m) {
  Rational total;
  for (const auto& e : basket.entries()) {
    total += Rational(BigInt(e.count)) * l_raw_sum(e.point.order(), e.point.weight(), m);
  }
  return total;
}

struct Progression {
  BigInt start;
  BigInt step;
};

// Solves for the residue class of t such that (2m-1)m(m-1) t / (12 r^3) + L(m)
// is an integer for m = 0 .. 4r-1, where L is the basket sum.
std::optional<Progression> integral_volumes(const Basket& basket, std::int64_t r) {
  const BigInt rr = r;
  const BigInt twelve_r3 = 12 * rr * rr * rr;
  BigInt t0 = 0;
  BigInt step = 1;
  for (std::int64_t m = 0; m < 4 * r; ++m) {
    const BigInt mm = m;
    const BigInt A = (2 * mm - 1) * mm * (mm - 1);
    const Rational L = l_raw_basket(basket, m);
    const BigInt p = L.num();
    const BigInt q = L.den();
    const BigInt modulus = twelve_r3 * q;
    // A q (t0 + step k) + 12 r^3 p = 0 (mod modulus)
    BigInt coeff = A * q * step;
    BigInt rhs = -(twelve_r3 * p + A * q * t0);
    mpz_mod(coeff.get_mpz_t(), coeff.get_mpz_t(), modulus.get_mpz_t());
    mpz_mod(rhs.get_mpz_t(), rhs.get_mpz_t(), modulus.get_mpz_t());
    const BigInt g = gcd(coeff == 0 ? modulus : coeff, modulus);
    if (rhs % g != 0) return std::nullopt;
    const BigInt reduced = modulus / g;
    BigInt k0 = 0;
    if (reduced > 1) {
      BigInt inv;
      const BigInt c = coeff / g;
      mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), reduced.get_mpz_t());
      k0 = (rhs / g) * inv;
      mpz_mod(k0.get_mpz_t(), k0.get_mpz_t(), reduced.get_mpz_t());
    }
    t0 += step * k0;
    step *= reduced;
    mpz_mod(t0.get_mpz_t(), t0.get_mpz_t(), step.get_mpz_t());
  }
  return Progression{t0, step};
}

// Everything verify_chi_identities checks on one instance, except the final
// integrality verdict. Returns a description of the first failure.
std::optional<std::string> check_identities(const ThreefoldData& x, bool expect_valid) {
  const Rational chi(x.chi_O());
  if (chi_mK(x, 0) != chi) return "chi(0K) != chi(O)";
  if (chi_mK(x, 1) != -chi) return "chi(K) != -chi(O)";
  const std::int64_t r = x.index();
  for (std::int64_t m = 0; m < 4 * r; ++m) {
    const Rational expected = chi_raw(x, m);
    const Rational got = chi_mK(x, m);
    if (got != expected) {
      return "chi_mK(m=" + std::to_string(m) + ") = " + got.to_string() + ", raw sum gives " +
             expected.to_string();
    }
  }
  const bool module_valid = validate(x).passed;
  if (module_valid != expect_valid) {
    return std::string("validate() says ") + (module_valid ? "pass" : "fail") +
           ", raw integrality sweep says " + (expect_valid ? "pass" : "fail");
  }
  const BigInt rr = r;
  const HilbertCoefficients h = hilbert_coefficients(x);
  if (h.c3 != Rational(BigInt(rr * rr * rr)) * x.K3() / Rational(6)) return "c3 != r^3 K^3 / 6";
  if (h.c2 != -Rational(BigInt(rr * rr)) * x.K3() / Rational(4)) return "c2 != -r^2 K^3 / 4";
  for (std::int64_t t = 0; t <= 6; ++t) {
    if (h(Rational(BigInt(t))) != chi_raw(x, r * t)) {
      return "Hilbert cubic differs from raw chi(rtK) at t=" + std::to_string(t);
    }
  }
  return std::nullopt;
}

std::string describe(const ThreefoldData& x) {
  std::ostringstream os;
  os << "(chi=" << x.chi_O().get_str() << ", K3=" << x.K3() << ", basket={";
  bool first = true;
  for (const auto& e : x.basket().entries()) {
    os << (first ? "" : ", ") << "1/" << e.point.order() << "(" << e.point.weight() << ")x"
       << e.count;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace

Rational l_raw_sum(std::int64_t r, std::int64_t a, std::int64_t m) {
  const std::int64_t b = brute_inverse(a, r);
  BigInt total = 0;
  for (std::int64_t k = 1; k <= m - 1; ++k) {
    const std::int64_t bk = (b * k) % r;
    total += BigInt(bk) * BigInt(r - bk);
  }
  return Rational(total, BigInt(2 * r));
}

Rational l_closed_as_printed(std::int64_t r, std::int64_t a, std::int64_t m) {
  const std::int64_t mbar = m % r;
  return Rational(BigInt(r * r - 1), 12) * Rational(BigInt(m - mbar)) + l_raw_sum(r, a, mbar);
}

BigInt lcm_by_factorization(std::int64_t hi) {
  BigInt out = 1;
  for (const std::int64_t p : primes_up_to(hi)) {
    std::int64_t pk = p;
    while (pk <= hi / p) pk *= p;
    out *= BigInt(pk);
  }
  return out;
}

BigInt naive_power(const BigInt& base, std::uint64_t exponent) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

Rational chi_raw(const ThreefoldData& x, std::int64_t m) {
  const BigInt mm = m;
  const Rational cubic = Rational((2 * mm - 1) * mm * (mm - 1), 12) * x.K3();
  const Rational euler(BigInt(-(2 * mm - 1) * x.chi_O()));
  return cubic + euler + l_raw_basket(x.basket(), m);
}

bool integral_everywhere(const ThreefoldData& x) {
  const std::int64_t r = lcm_of_orders(x.basket());
  for (std::int64_t m = 0; m < 4 * r; ++m) {
    if (!chi_raw(x, m).is_integer()) return false;
  }
  return true;
}

RandomInstance random_threefold(std::mt19937_64& rng) {
  const bool negative = std::uniform_int_distribution<int>(1, 100)(rng) <= 5;
  for (;;) {
    Basket basket = random_basket(rng);
    const std::int64_t r = lcm_of_orders(basket);
    const BigInt r3 = BigInt(r) * r * r;
    const BigInt chi = uniform(rng, -20, 20);
    const BigInt upper = 100 * r3;
    if (negative) {
      ThreefoldData x(chi, Rational(uniform_big(rng, 1, upper), r3), std::move(basket));
      const bool valid = integral_everywhere(x);
      return RandomInstance{std::move(x), valid, true};
    }
    const auto progression = integral_volumes(basket, r);
    if (!progression) continue;
    BigInt first = progression->start;
    if (first == 0) first = progression->step;
    BigInt t = first;
    if (first <= upper) {
      const BigInt choices = (upper - first) / progression->step;
      t += progression->step * uniform_big(rng, 0, choices);
    }
    ThreefoldData x(chi, Rational(t, r3), std::move(basket));
    return RandomInstance{std::move(x), true, false};
  }
}

VerificationReport verify_l_equivalence(std::int64_t r_max, std::int64_t m_span, ClosedForm form) {
  if (r_max < 2) throw DomainError("verify_l_equivalence: r_max must be >= 2");
  VerificationReport report;
  report.check = form == ClosedForm::corrected ? "l_equivalence" : "l_equivalence_as_printed";
  report.ranges = "2 <= r <= " + std::to_string(r_max) + ", gcd(a,r)=1, 0 <= m <= " +
                  std::to_string(m_span) + "r";
  for (std::int64_t r = 2; r <= r_max; ++r) {
    for (std::int64_t a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      const QuotientSingularity q(r, a);
      for (std::int64_t m = 0; m <= m_span * r; ++m) {
        ++report.cases;
        const Rational raw = l_raw_sum(r, a, m);
        const std::string at = "(r=" + std::to_string(r) + ",a=" + std::to_string(a) +
                               ",m=" + std::to_string(m) + ")";
        const Rational direct = l_direct(q, m);
        if (direct != raw) {
          record(report, "l_direct" + at + " = " + direct.to_string() + " vs raw " + raw.to_string());
          continue;
        }
        const Rational closed =
            form == ClosedForm::corrected ? l_closed(q, m) : l_closed_as_printed(r, a, m);
        if (closed != raw) {
          record(report, "closed form" + at + " = " + closed.to_string() + " vs raw " + raw.to_string());
          continue;
        }
        if (a == 1 && l_onewave(r, m) != raw) {
          record(report, "l_onewave" + at + " = " + l_onewave(r, m).to_string() + " vs raw " +
                             raw.to_string());
        }
      }
    }
  }
  return report;
}

VerificationReport verify_basket_domination(std::int64_t alpha_max) {
  if (alpha_max < 2) throw DomainError("verify_basket_domination: alpha_max must be >= 2");
  VerificationReport report;
  report.check = "basket_domination";
  report.ranges = "2 <= alpha <= " + std::to_string(alpha_max) +
                  ", 0 <= beta <= alpha, gcd(a,alpha)=1, 1 <= m <= (alpha+1)/2";
  std::uint64_t ties = 0;
  for (std::int64_t alpha = 2; alpha <= alpha_max; ++alpha) {
    for (std::int64_t m = 1; m <= (alpha + 1) / 2; ++m) {
      for (std::int64_t beta = 0; beta <= alpha; ++beta) {
        const Rational rhs = beta <= 1 ? Rational(0) : l_raw_sum(beta, 1, m);
        bool all_hold = true;
        for (std::int64_t a = 1; a < alpha; ++a) {
          if (std::gcd(a, alpha) != 1) continue;
          ++report.cases;
          const Rational lhs = l_raw_sum(alpha, a, m);
          if (lhs == rhs) ++ties;
          if (lhs < rhs) {
            all_hold = false;
            record(report, "l(1/" + std::to_string(alpha) + "(" + std::to_string(a) + "), " +
                               std::to_string(m) + ") = " + lhs.to_string() + " < " +
                               rhs.to_string() + " (beta=" + std::to_string(beta) + ")");
          }
        }
        if (fletcher_dominates(alpha, beta, m) != all_hold) {
          record(report, "fletcher_dominates(" + std::to_string(alpha) + "," + std::to_string(beta) +
                             "," + std::to_string(m) + ") disagrees with enumeration");
        }
      }
    }
  }
  report.note = std::to_string(ties) + " equality cases";
  return report;
}

VerificationReport verify_lcm_factorization(std::int64_t hi_max) {
  if (hi_max < 2) throw DomainError("verify_lcm_factorization: hi_max must be >= 2");
  VerificationReport report;
  report.check = "lcm_factorization";
  report.ranges = "2 <= h <= " + std::to_string(hi_max);
  for (std::int64_t h = 2; h <= hi_max; ++h) {
    ++report.cases;
    const BigInt running = lcm_range(2, h);
    const BigInt sieve = lcm_by_factorization(h);
    if (running != sieve) {
      record(report, "h=" + std::to_string(h) + ": lcm_range " + running.get_str() + " vs sieve " +
                         sieve.get_str());
    }
  }
  return report;
}

VerificationReport verify_chi_identities(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify_chi_identities: samples must be >= 1");
  VerificationReport report;
  report.check = "chi_identities";
  report.ranges = std::to_string(samples) + " random instances, m <= 4r";
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uint64_t controls = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const RandomInstance inst = random_threefold(rng);
    ++report.cases;
    if (!inst.expected_valid) ++controls;
    if (auto why = check_identities(inst.data, inst.expected_valid)) {
      record(report, describe(inst.data) + ": " + *why);
    }
  }
  report.note = std::to_string(controls) + " non-integral negative controls";
  return report;
}

VerificationReport verify_chi_identities(const ThreefoldData& x) {
  VerificationReport report;
  report.check = "chi_identities";
  report.ranges = describe(x) + ", m <= 4r";
  report.cases = 1;
  const bool integral = integral_everywhere(x);
  if (auto why = check_identities(x, integral)) {
    record(report, describe(x) + ": " + *why);
  } else if (!integral) {
    const std::int64_t r = x.index();
    for (std::int64_t m = 0; m < 4 * r; ++m) {
      const Rational v = chi_raw(x, m);
      if (!v.is_integer()) {
        record(report, describe(x) + ": chi(" + std::to_string(m) + "K) = " + v.to_string() +
                           " is not an integer");
        break;
      }
    }
  }
  return report;
}

VerificationReport verify_power_expansion(std::int64_t base_max, std::int64_t exp_max) {
  VerificationReport report;
  report.check = "power_expansion";
  report.ranges = "1 <= base <= " + std::to_string(base_max) + ", 0 <= exponent <= " +
                  std::to_string(exp_max);
  for (std::int64_t base = 1; base <= base_max; ++base) {
    BigInt naive = 1;
    for (std::int64_t e = 0; e <= exp_max; ++e) {
      ++report.cases;
      if (e > 0) naive *= base;
      const BoundReport rep = make_bound_report(BigInt(base), BigInt(e));
      const std::string at = std::to_string(base) + "^" + std::to_string(e);
      if (!rep.expanded || *rep.expanded != naive) {
        record(report, at + ": repeated squaring disagrees with repeated multiplication");
        continue;
      }
      const auto len = static_cast<std::int64_t>(decimal_length(naive));
      const auto est = static_cast<std::int64_t>(rep.digits_estimate);
      if (est < len - 1 || est > len + 1) {
        record(report, at + ": digit estimate " + std::to_string(est) + " vs " + std::to_string(len));
      }
    }
  }
  return report;
}

std::vector<std::string> check_names() {
  return {"l_equivalence", "basket_domination", "lcm_factorization", "chi_identities", "power_expansion"};
}

VerificationReport verify_named(const std::string& name, std::uint64_t seed) {
  if (name == "l_equivalence") return verify_l_equivalence(60, 3);
  if (name == "basket_domination") return verify_basket_domination(40);
  if (name == "lcm_factorization") return verify_lcm_factorization(200);
  if (name == "chi_identities") return verify_chi_identities(200, seed);
  if (name == "power_expansion") return verify_power_expansion(100, 50);
  throw DomainError("unknown check '" + name + "'");
}

std::vector<VerificationReport> verify_all(std::uint64_t seed) {
  std::vector<VerificationReport> out;
  for (const auto& name : check_names()) out.push_back(verify_named(name, seed));
  return out;
}

}  // namespace plurigenus::oracle
