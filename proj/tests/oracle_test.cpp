#include <doctest.h>

#include "plurigenus/oracle.hpp"

using namespace plurigenus;
using namespace plurigenus::oracle;

namespace {

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("reference computations") {
  CHECK(lcm_by_factorization(2) == 2);
  CHECK(lcm_by_factorization(10) == 2520);
  CHECK(lcm_by_factorization(1) == 1);
  CHECK(naive_power(1, 1000) == 1);
  CHECK(naive_power(288, 0) == 1);
  CHECK(l_raw_sum(2, 1, 2) == q(1, 4));
  CHECK(l_raw_sum(26, 25, 13) == q(53, 2));
}

TEST_CASE("verify_l_equivalence") {
  const VerificationReport full = verify_l_equivalence(60, 3);
  CHECK(full.passed());
  CHECK(full.failures == 0);

  const VerificationReport tiny = verify_l_equivalence(2, 1);
  CHECK(tiny.passed());
  CHECK(tiny.cases == 3);  // r = 2, a = 1, m in {0, 1, 2}

  const VerificationReport printed = verify_l_equivalence(3, 2, ClosedForm::as_printed);
  CHECK_FALSE(printed.passed());
  CHECK(printed.failures > 0);
  // First mismatch in sweep order is already at r = 2.
  CHECK(printed.counterexample->find("(r=2,a=1,m=2) = 1/2 vs raw 1/4") != std::string::npos);

  CHECK_THROWS_AS(verify_l_equivalence(1, 3), DomainError);
}

TEST_CASE("verify_basket_domination") {
  const VerificationReport two = verify_basket_domination(2);
  CHECK(two.passed());
  CHECK(two.cases == 3);
  CHECK(verify_basket_domination(40).passed());
  CHECK_THROWS_AS(verify_basket_domination(1), DomainError);
}

TEST_CASE("verify_lcm_factorization") {
  const VerificationReport r = verify_lcm_factorization(200);
  CHECK(r.passed());
  CHECK(r.cases == 199);
}

TEST_CASE("verify_power_expansion") {
  const VerificationReport r = verify_power_expansion(100, 50);
  CHECK(r.passed());
  CHECK(r.cases == 100 * 51);
}

TEST_CASE("verify_chi_identities on random data") {
  const VerificationReport a = verify_chi_identities(200, 12345);
  CHECK(a.passed());
  CHECK(a.cases == 200);
  CHECK(a.seed == 12345u);
  const VerificationReport b = verify_chi_identities(200, 12345);
  CHECK(a.note == b.note);
}

TEST_CASE("verify_chi_identities on single instances") {
  CHECK(verify_chi_identities(ThreefoldData(BigInt(-1), 2, Basket{})).passed());

  const VerificationReport control = verify_chi_identities(ThreefoldData(BigInt(-1), 1, Basket{}));
  CHECK_FALSE(control.passed());
  CHECK(control.counterexample->find("chi(2K) = 7/2") != std::string::npos);

  // chi(2K) = -5/2 for this data, so it is a negative instance too.
  const VerificationReport x26 =
      verify_chi_identities(ThreefoldData(BigInt(1), q(1, 26), Basket{{{26, 1}, 1}}));
  CHECK_FALSE(x26.passed());
  CHECK(x26.counterexample->find("chi(2K) = -5/2") != std::string::npos);
}

TEST_CASE("random_threefold") {
  std::mt19937_64 rng(77);
  std::mt19937_64 twin(77);
  int controls = 0;
  for (int i = 0; i < 400; ++i) {
    const RandomInstance inst = random_threefold(rng);
    const RandomInstance again = random_threefold(twin);
    REQUIRE(inst.data.K3() == again.data.K3());
    REQUIRE(inst.data.basket() == again.data.basket());
    const BigInt r = inst.data.index();
    REQUIRE(inst.data.K3().sign() > 0);
    REQUIRE(inst.data.K3() <= Rational(100));
    REQUIRE(inst.data.chi_O() >= -20);
    REQUIRE(inst.data.chi_O() <= 20);
    REQUIRE(integral_everywhere(inst.data) == inst.expected_valid);
    if (!inst.negative_control) REQUIRE(inst.expected_valid);
    if (inst.negative_control) ++controls;
  }
  // About 5% of 400.
  CHECK(controls > 5);
  CHECK(controls < 45);
}

TEST_CASE("verify_named") {
  for (const auto& name : check_names()) {
    if (name == "l_equivalence" || name == "basket_domination") continue;  // covered above
    CHECK(verify_named(name, 1).passed());
  }
  CHECK_THROWS_AS(verify_named("nope", 1), DomainError);
}
