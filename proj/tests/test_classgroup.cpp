#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycert/classgroup.hpp"
#include "cycert/realquad.hpp"
#include "oracles.hpp"

using namespace cycert;

TEST_CASE("class numbers: frozen values") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-47) == 5);
  CHECK(class_number(-163) == 1);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(class_number(-12), std::domain_error);  // not fundamental
  CHECK_THROWS_AS(class_number(-5), std::domain_error);   // 3 mod 4
  CHECK_THROWS_AS(class_number(5), std::domain_error);
  CHECK_THROWS_AS(class_number(mpz_class("-2000000000")), std::domain_error);
}

TEST_CASE("reduced-form counts match the character-sum formula") {
  for (long d = -3; d >= -10000; --d) {
    mpz_class disc(d);
    std::uint64_t h;
    try {
      h = class_number(disc);
    } catch (const std::domain_error&) {
      continue;  // not fundamental
    }
    CHECK(h == oracles::class_number_by_charsum(disc));
  }
}

TEST_CASE("fundamental discriminants") {
  CHECK(imag_quad_field(-3).fundamental_discriminant == -3);
  CHECK(imag_quad_field(-4).fundamental_discriminant == -4);
  CHECK(imag_quad_field(-12).fundamental_discriminant == -3);
  CHECK(imag_quad_field(-5).fundamental_discriminant == -20);
  CHECK(imag_quad_field(-18).fundamental_discriminant == -8);
  CHECK_THROWS_AS(imag_quad_field(4), std::domain_error);
}

TEST_CASE("divisibility probe") {
  FundamentalUnit u13 = fundamental_unit(13);
  auto a = divisibility_probe(u13, 15, 55, mpz_class(1000000000));
  CHECK(a.field_D == Divisibility::infeasible);   // 44-digit radicand
  CHECK(a.field_pD == Divisibility::infeasible);

  FundamentalUnit u5 = fundamental_unit(5);
  auto b = divisibility_probe(u5, 1, 97, mpz_class(1000000000));
  CHECK(b.field_D == Divisibility::infeasible);   // |2 - F(97)| ~ 8.4e19
  CHECK(b.field_pD == Divisibility::infeasible);

  // small radicand: D(1,5) = -3 for p = 5, so the layers are Q(sqrt(-3))
  // and Q(sqrt(-15)) with h = 1 and 2
  auto c = divisibility_probe(u5, 1, 5, mpz_class(1000000000));
  CHECK(c.radicand_value == -3);
  CHECK(c.field_D == Divisibility::not_divisible);
  CHECK(c.field_pD == Divisibility::not_divisible);
  REQUIRE(c.K_D.has_value());
  CHECK(c.K_D->fundamental_discriminant == -3);
  CHECK(c.K_D->class_number == 1);
  REQUIRE(c.K_pD.has_value());
  CHECK(c.K_pD->fundamental_discriminant == -15);
  CHECK(c.K_pD->class_number == 2);
}
