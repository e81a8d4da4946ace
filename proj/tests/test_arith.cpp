#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cycert/arith.hpp"
#include "cycert/realquad.hpp"
#include "oracles.hpp"

using namespace cycert;

TEST_CASE("is_prime basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(45));
  CHECK(is_prime_u64(2147483647));          // 2^31 - 1
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
  CHECK_THROWS_AS(is_prime(1), std::domain_error);
  CHECK_THROWS_AS(is_prime(mpz_class(-7)), std::domain_error);
}

TEST_CASE("jacobi symbol against exhaustive squares") {
  CHECK(jacobi_symbol(5, 61) == 1);
  CHECK(jacobi_symbol(1, 9) == 1);
  CHECK(jacobi_symbol(13, 53) == 1);
  CHECK_THROWS_AS(jacobi_symbol(3, 8), std::domain_error);

  for (std::uint64_t n : {3ull, 11ull, 53ull, 61ull, 97ull}) {
    for (std::uint64_t a = 0; a < n; ++a) {
      CHECK(jacobi_symbol(mpz_class(static_cast<unsigned long>(a)),
                          mpz_class(static_cast<unsigned long>(n))) ==
            oracles::jacobi_by_squares(a, n));
    }
  }
}

TEST_CASE("two_squares frozen examples") {
  TwoSquares a = two_squares(5, 1);
  CHECK(a.A == -1);
  CHECK(a.B == -2);
  CHECK(a.x0 == 0);
  CHECK(a.y0 == 1);  // Bt - 2A = 0 fixes the + sign

  TwoSquares b = two_squares(13, 3);
  CHECK(b.A == 3);
  CHECK(b.B == 2);
  CHECK(b.x0 == 1);
  CHECK(b.y0 == 0);

  TwoSquares c = two_squares(37, 12);
  CHECK(c.A == -1);
  CHECK(c.B == 6);
  CHECK(c.x0 == 1);
  CHECK(c.y0 == 1);
}

TEST_CASE("two_squares invariants over p < 10^4") {
  for (std::uint64_t p = 5; p < 10000; p += 8) {
    if (!is_prime_u64(p)) continue;
    FundamentalUnit u = fundamental_unit(p);
    TwoSquares ts = two_squares(p, u.t);

    auto scan = oracles::two_squares_by_scan(p);
    REQUIRE(scan.has_value());
    CHECK(static_cast<std::uint64_t>(ts.A < 0 ? -ts.A : ts.A) == scan->first);
    CHECK(static_cast<std::uint64_t>(ts.B < 0 ? -ts.B : ts.B) == scan->second);

    mpz_class A(static_cast<long>(ts.A)), B(static_cast<long>(ts.B));
    CHECK(A * A + B * B == static_cast<unsigned long>(p));
    CHECK(((ts.A % 4) + 4) % 4 == 3);
    CHECK(ts.B % 2 == 0);

    mpz_class at2b = A * u.t + 2 * B;
    mpz_class at2b_m = A * u.t - 2 * B;
    bool plus = at2b % static_cast<unsigned long>(p) == 0;
    bool minus = at2b_m % static_cast<unsigned long>(p) == 0;
    CHECK(plus);
    CHECK_FALSE(minus);  // exactly one sign works

    mpz_class bp = u.b * static_cast<unsigned long>(p);
    CHECK((bp * bp - at2b * at2b) == (B * u.t - 2 * A) * (B * u.t - 2 * A));
    CHECK((bp * bp - at2b_m * at2b_m) == (B * u.t + 2 * A) * (B * u.t + 2 * A));
    CHECK(bp >= abs(at2b));
    CHECK(bp >= abs(at2b_m));

    // exact square data, coprimality
    mpz_class x2 = ts.x0 * ts.x0, y2 = ts.y0 * ts.y0;
    CHECK(2 * static_cast<unsigned long>(p) * x2 == bp + at2b);
    CHECK(2 * static_cast<unsigned long>(p) * y2 == bp - at2b);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x2.get_mpz_t(), y2.get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("two_squares above the brute-force cutoff") {
  // 1000037 = 5 (mod 8) exercises the sqrt(-1) descent path
  FundamentalUnit u = fundamental_unit(1000037);
  TwoSquares ts = two_squares(1000037, u.t);
  mpz_class A(static_cast<long>(ts.A)), B(static_cast<long>(ts.B));
  CHECK(A * A + B * B == 1000037);
  CHECK(((ts.A % 4) + 4) % 4 == 3);
  CHECK((A * u.t + 2 * B) % 1000037 == 0);
  mpz_class bp = u.b * mpz_class(1000037);
  CHECK(2 * mpz_class(1000037) * ts.x0 * ts.x0 == bp + A * u.t + 2 * B);
  CHECK(2 * mpz_class(1000037) * ts.y0 * ts.y0 == bp - (A * u.t + 2 * B));
}

TEST_CASE("two_squares domain errors") {
  CHECK_THROWS_AS(two_squares(7, 1), std::domain_error);   // 7 != 5 mod 8
  CHECK_THROWS_AS(two_squares(13, 1), std::domain_error);  // 1^2+4 != 0 mod 13
}

TEST_CASE("squarefree_part") {
  SUBCASE("frozen") {
    auto a = squarefree_part(1);
    CHECK(a.s == 1);
    CHECK(a.A == 1);
    auto b = squarefree_part(-12);
    CHECK(b.s == -3);
    CHECK(b.A == 2);
    auto c = squarefree_part(360);
    CHECK(c.s == 10);
    CHECK(c.A == 6);
  }
  SUBCASE("ranges against trial factorization") {
    for (long v = -500; v <= 500; ++v) {
      if (v == 0) continue;
      auto d = squarefree_part(v);
      CHECK(d.s * d.A * d.A == v);
      CHECK(d.A > 0);
      // square-free: no prime square divides s
      mpz_class s = abs(d.s);
      for (long f = 2; f * f <= s; ++f)
        CHECK(s % (f * f) != 0);
    }
  }
  SUBCASE("seeded constructed decompositions") {
    const long primes[] = {2, 3, 5, 7, 11, 13, 97, 101};
    std::uint64_t state = 0x853c49e6748fea9bull;
    auto next = [&]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int trial = 0; trial < 40; ++trial) {
      // build s * A^2 with square-free s from distinct primes
      mpz_class s = (next() & 1) ? 1 : -1, A = 1;
      for (int i = 0; i < 8; ++i)
        if (next() & 1) s *= primes[i];
      for (int i = 0; i < 4; ++i) A *= primes[next() % 8];
      mpz_class v = s * A * A;
      auto d = squarefree_part(v);
      CHECK(d.s == s);
      CHECK(d.A == A);
    }
  }
  SUBCASE("large prime cofactor") {
    mpz_class big("2725164213221");  // prime > trial bound
    auto d = squarefree_part(big * 4, 1000);
    CHECK(d.s == big);
    CHECK(d.A == 2);
  }
  SUBCASE("uncertifiable cofactor") {
    mpz_class p1("2725164213221"), p2("681089630669633");
    CHECK_THROWS_AS(squarefree_part(p1 * p2 * p2, 1000), unfactored_error);
  }
  CHECK_THROWS_AS(squarefree_part(0), std::domain_error);
}
