#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycert/arith.hpp"
#include "cycert/lucas.hpp"
#include "cycert/realquad.hpp"
#include "oracles.hpp"

using namespace cycert;

TEST_CASE("exact values and sign laws") {
  auto a = lucas_pair(1, 0);
  CHECK(a.F == 0);
  CHECK(a.L == 2);

  auto b = lucas_pair(3, 5);
  CHECK(b.F == 109);
  CHECK(b.L == 393);
  CHECK(b.L * b.L - 13 * b.F * b.F == -4);

  auto c = lucas_pair(1, -3);
  CHECK(c.F == 2);
  CHECK(c.L == -4);

  for (mpz_class t : {1, 3, 12}) {
    for (long long n = -60; n <= 60; ++n) {
      auto got = lucas_pair(t, n);
      auto want = oracles::naive_lucas(t, n);
      CHECK(got.F == want.first);
      CHECK(got.L == want.second);
    }
  }
}

TEST_CASE("negative-index sign laws up to 500") {
  for (mpz_class t : {1, 3}) {
    for (long long n = 0; n <= 500; ++n) {
      auto pos = lucas_pair(t, n);
      auto neg = lucas_pair(t, -n);
      int sign = n % 2 == 0 ? 1 : -1;
      CHECK(neg.F == -sign * pos.F);
      CHECK(neg.L == sign * pos.L);
    }
  }
}

TEST_CASE("modular evaluation matches naive recurrence") {
  CHECK(lucas_pair_mod(1, 97, 25).first == 2);
  CHECK(lucas_pair_mod(1, 7, 11) == std::pair<std::uint64_t, std::uint64_t>{2, 7});
  CHECK(lucas_pair_mod(3, 15, 53) ==
        std::pair<std::uint64_t, std::uint64_t>{24, 8});

  for (std::uint64_t m : {2ull, 3ull, 4ull, 5ull, 7ull, 9ull, 11ull, 25ull,
                          169ull, 9973ull, 10000ull}) {
    for (mpz_class t : {1, 3, 12}) {
      for (long long n = -2000; n <= 2000; n += 13) {
        auto got = lucas_pair_mod(t, n, m);
        auto want = oracles::naive_lucas(t, n);
        mpz_class fw = want.first % m,
                  lw = want.second % m;
        if (fw < 0) fw += m;
        if (lw < 0) lw += m;
        CHECK(got.first == fw.get_ui());
        CHECK(got.second == lw.get_ui());
      }
    }
  }
}

TEST_CASE("periods: paper values and divisibility bounds") {
  CHECK(period(1, 25, Seq::F).period == 100);
  CHECK(period(1, 11, Seq::F).period == 10);
  CHECK(period(3, 169, Seq::F).period == 676);

  SUBCASE("least-period minimality against naive scan") {
    for (std::uint64_t m : {2ull, 5ull, 11ull, 25ull, 49ull, 121ull, 169ull}) {
      for (mpz_class t : {1, 3, 5}) {
        CHECK(period(t, m, Seq::F).period == oracles::naive_period(t, m, false));
        CHECK(period(t, m, Seq::L).period == oracles::naive_period(t, m, true));
      }
    }
  }

  SUBCASE("mod p^2 bounds") {
    for (std::uint64_t p : {5ull, 13ull, 29ull, 37ull, 53ull}) {
      FundamentalUnit u = fundamental_unit(p);
      std::uint64_t p2 = p * p;
      CHECK(p2 * (p - 1) % period(u.t, p2, Seq::F).period == 0);
      CHECK(p * (p - 1) % period(u.t, p2, Seq::L).period == 0);
    }
  }

  SUBCASE("mod q bounds per the quadratic character") {
    for (std::uint64_t p : {5ull, 13ull, 29ull}) {
      FundamentalUnit u = fundamental_unit(p);
      for (std::uint64_t q : {11ull, 53ull, 61ull}) {
        if (q == p) continue;
        int chi = jacobi_symbol(mpz_class(static_cast<unsigned long>(p)),
                                mpz_class(static_cast<unsigned long>(q)));
        std::uint64_t bound = chi == 1 ? q - 1 : 2 * (q + 1);
        CHECK(bound % period(u.t, q, Seq::F).period == 0);
        CHECK(bound % period(u.t, q, Seq::L).period == 0);
      }
    }
  }
}

TEST_CASE("period scan cap") {
  // composite modulus without a divisibility bound and a period beyond
  // 10^7 steps: the fallback scan must refuse rather than spin
  std::uint64_t m = 10007ull * 10007ull;
  CHECK_THROWS_AS(period(1, m, Seq::F), std::runtime_error);
}

TEST_CASE("identity suite") {
  FundamentalUnit u5 = fundamental_unit(5);
  CHECK(identity_suite(u5, -10, 10, -10, 10).ok());

  FundamentalUnit u13 = fundamental_unit(13);
  CHECK(identity_suite(u13, 0, 0, 0, 0).ok());

  FundamentalUnit u37 = fundamental_unit(37);
  CHECK(identity_suite(u37, -6, 6, -6, 6).ok());
}

TEST_CASE("index divisibility law") {
  CHECK(valuation_law_check(1, 5, 1, 5));    // F(5) = 5
  CHECK(valuation_law_check(1, 5, 2, 25));   // F(25) = 75025 = 5^2 * 3001
  CHECK(valuation_law_check(3, 13, 1, 13));
  CHECK(valuation_law_check(1, 5, 3, 1000));
  CHECK_THROWS_AS(valuation_law_check(1, 5, 2, 30), std::domain_error);
}
