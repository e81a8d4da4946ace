#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cycert/arith.hpp"
#include "cycert/family.hpp"
#include "cycert/lucas.hpp"
#include "cycert/realquad.hpp"

using namespace cycert;

TEST_CASE("alpha params: frozen quartics") {
  FundamentalUnit u5 = fundamental_unit(5);
  auto a = alpha_params(u5, 1, 1);
  CHECK(a.trace == 1);
  CHECK(a.norm == -1);
  CHECK(a.quartic == std::array<mpz_class, 5>{1, -1, 1, -1, 1});
  CHECK(a.nonrational);
  CHECK(a.shift_nonsquare);

  // reductions mod q of alpha(m, n) for class representatives
  auto reduce = [](const AlphaParams& ap, std::uint64_t q) {
    std::array<std::uint64_t, 5> out{};
    for (int i = 0; i < 5; ++i) {
      mpz_class r = ap.quartic[i] % q;
      if (r < 0) r += q;
      out[i] = r.get_ui();
    }
    return out;
  };
  auto b = alpha_params(u5, 7, 31);
  CHECK(reduce(b, 11) == std::array<std::uint64_t, 5>{1, 4, 3, 4, 1});

  FundamentalUnit u13 = fundamental_unit(13);
  auto c = alpha_params(u13, 15, 55);
  CHECK(reduce(c, 53) == std::array<std::uint64_t, 5>{1, 30, 26, 30, 1});

  CHECK_THROWS_AS(alpha_params(u5, 2, 1), std::domain_error);
}

TEST_CASE("radicand values") {
  FundamentalUnit u13 = fundamental_unit(13);
  mpz_class d = radicand(u13.t, u13.b, 15, 55);
  CHECK(d == mpz_class("-35297949870282964311195913270006746882588864"));

  // t = b = 1: D(1, n) = 2 - F(n)
  for (long long n : {1, 5, 9, 97}) {
    mpz_class expect = 2 - lucas_pair(1, n).F;
    CHECK(radicand(1, 1, 1, n) == expect);
  }

  // D(1, 1) = t(2 - t) b
  for (std::uint64_t p : {5ull, 13ull, 37ull}) {
    FundamentalUnit u = fundamental_unit(p);
    CHECK(radicand(u.t, u.b, 1, 1) == u.t * (2 - u.t) * u.b);
  }
  CHECK_THROWS_AS(radicand(1, 1, 2, 5), std::domain_error);
}

TEST_CASE("radicand is negative and the sign facts hold on the grid") {
  for (std::uint64_t p : {5ull, 13ull, 29ull}) {
    FundamentalUnit u = fundamental_unit(p);
    for (long long m = -49; m <= 49; m += 2) {
      for (long long n = 5; n <= 49; n += 2) {
        mpz_class d = radicand(u.t, u.b, m, n);
        CHECK(d < 0);
        auto pm = lucas_pair(u.t, m);
        auto pn = lucas_pair(u.t, n);
        CHECK(pm.L * (pm.L * pn.F - 2 * pm.F) * u.b > 0);
      }
    }
  }
}

TEST_CASE("family modulus") {
  FundamentalUnit u5 = fundamental_unit(5);
  FundamentalUnit u13 = fundamental_unit(13);
  CHECK(family_modulus(u5, 61) == 300);
  CHECK(family_modulus(u5, 11) == 100);
  CHECK(family_modulus(u13, 53) == 2028);
  CHECK_THROWS_AS(family_modulus(u5, 5), std::domain_error);
  CHECK_THROWS_AS(family_modulus(u5, 2), std::domain_error);
}

TEST_CASE("condition (i)") {
  FundamentalUnit u5 = fundamental_unit(5);
  FundamentalUnit u13 = fundamental_unit(13);
  CHECK(check_condition_i(u5, 7, 31).holds);
  CHECK(check_condition_i(u13, 15, 55).holds);
  auto bad = check_condition_i(u5, 7, 33);
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness != 0);
  CHECK_THROWS_AS(check_condition_i(u5, 4, 31), std::domain_error);
}

TEST_CASE("condition (A1)") {
  FundamentalUnit u5 = fundamental_unit(5);
  FundamentalUnit u13 = fundamental_unit(13);
  CHECK(check_condition_A1(u5, 1, 97));
  CHECK_FALSE(check_condition_A1(u5, 1, 1));  // alpha = (1 - sqrt5)/2
  CHECK(check_condition_A1(u13, 15, 55));
}

TEST_CASE("condition (ii)") {
  FundamentalUnit u5 = fundamental_unit(5);
  FundamentalUnit u13 = fundamental_unit(13);

  FieldTower t11(11);
  auto a = check_condition_ii(u5, 7, 31, 11, t11);
  REQUIRE(a.has_value());
  CHECK(a->ext_degree == 1);
  CHECK(a->root.c[0] == 5);

  FieldTower t53(53);
  auto b = check_condition_ii(u13, 15, 55, 53, t53);
  REQUIRE(b.has_value());
  CHECK(b->ext_degree == 1);
  CHECK(b->root.c[0] == 22);

  FieldTower t61(61);
  auto c = check_condition_ii(u5, 1, 97, 61, t61);
  REQUIRE(c.has_value());
  CHECK(c->ext_degree == 1);
  CHECK(c->root.c[0] == 10);

  // q = 3 has ord_13(3) = 3, so 13 divides no q^i - 1 with i in {1,2,4}:
  // every element is a 13th power and no witness can exist
  FieldTower t3(3);
  CHECK_FALSE(check_condition_ii(u13, 15, 55, 3, t3).has_value());

  CHECK_THROWS_AS(check_condition_ii(u5, 1, 97, 5, t61), std::domain_error);
}

TEST_CASE("certify") {
  auto good = certify(13, 15, 55, 53);
  CHECK(good.passed);
  CHECK(good.cert.ext_degree == 1);
  CHECK(good.cert.root.c[0] == 22);
  REQUIRE(good.cert.root_set.size() == 4);
  CHECK(good.cert.root_set[0].c[0] == 22);
  CHECK(good.cert.root_set[1].c[0] == 24);
  CHECK(good.cert.root_set[2].c[0] == 41);
  CHECK(good.cert.root_set[3].c[0] == 42);
  CHECK(good.cert.condition_i_ok);
  CHECK(good.cert.condition_i_witness == 0);
  CHECK(good.cert.pth_power_check);
  CHECK(good.cert.parity_check);
  CHECK(good.cert.nq == 2028);

  CHECK(certify(5, 7, 31, 11).passed);
  CHECK(certify(5, 1, 97, 61).passed);

  auto bad = certify(5, 7, 33, 11);
  CHECK_FALSE(bad.passed);
  CHECK(bad.failed_check == "condition_i");

  CHECK_THROWS_AS(certify(7, 1, 1, 11), std::domain_error);
  CHECK_THROWS_AS(certify(5, 2, 31, 11), std::domain_error);
  CHECK_THROWS_AS(certify(5, 7, 31, 10), std::domain_error);
  CHECK_THROWS_AS(certify(5, 7, 31, 5), std::domain_error);
}

TEST_CASE("search: complete class lists and the table slice") {
  FundamentalUnit u5 = fundamental_unit(5);
  auto hits = search(5, {11});
  CHECK(hits.size() == 10);  // five radicand families, two classes each
  for (const auto& h : hits) {
    CHECK(h.m_modulus == 50);
    CHECK(h.n_modulus == 100);
    CHECK(h.nq == 100);
    CHECK(h.cert.passed);
    CHECK(h.witness_m == h.witness_n);  // condition (i) at class level
  }

  auto sliced = table_slice(u5, hits, 11);
  REQUIRE(sliced.size() == 5);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto& h : sliced) pairs.emplace_back(h.m0, h.n0);
  CHECK(pairs == std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                     {7, 31}, {17, 11}, {27, 91}, {37, 71}, {47, 51}});

  // q = 61: the four classes behind the Fibonacci specialization
  auto hits61 = search(5, {61});
  std::set<std::pair<std::uint64_t, std::uint64_t>> got;
  for (const auto& h : hits61)
    if (h.m0 == 1) got.insert({h.m0, h.n0});
  for (std::uint64_t n0 : {97ull, 103ull, 197ull, 203ull})
    CHECK(got.count({1, n0}) == 1);

  CHECK_THROWS_AS(search(5, {}), std::domain_error);
  CHECK_THROWS_AS(search(5, {10}), std::domain_error);
  SearchOptions tight;
  tight.scan_bound = 10;
  CHECK_THROWS_AS(search(5, {11}, tight), std::runtime_error);
}

TEST_CASE("search: thirteen table classes for p=13, q=53") {
  FundamentalUnit u13 = fundamental_unit(13);
  auto hits = search(13, {53});
  auto sliced = table_slice(u13, hits, 53);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto& h : sliced) pairs.emplace_back(h.m0, h.n0);
  CHECK(pairs == std::vector<std::pair<std::uint64_t, std::uint64_t>>{
                     {15, 55},
                     {41, 263},
                     {67, 471},
                     {93, 3},
                     {119, 211},
                     {145, 419},
                     {171, 627},
                     {197, 159},
                     {223, 367},
                     {249, 575},
                     {275, 107},
                     {301, 315},
                     {327, 523}});
}

TEST_CASE("class stability: members of a certified class keep passing") {
  for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {5, 11}, {13, 53}}) {
    FundamentalUnit u = fundamental_unit(p);
    auto hits = search(p, {q});
    REQUIRE(!hits.empty());
    auto reduce = [&](const AlphaParams& ap) {
      std::array<std::uint64_t, 5> out{};
      for (int i = 0; i < 5; ++i) {
        mpz_class r = ap.quartic[i] % q;
        if (r < 0) r += q;
        out[i] = r.get_ui();
      }
      return out;
    };
    for (const SearchHit& h : table_slice(u, hits, q)) {
      auto base_red = reduce(alpha_params(u, static_cast<long long>(h.m0),
                                          static_cast<long long>(h.n0)));
      int samples = 0;
      for (long long k = 1; samples < 20; ++k) {
        long long m = static_cast<long long>(h.m0) +
                      k * static_cast<long long>(h.nq);
        long long n = static_cast<long long>(h.n0) +
                      k * static_cast<long long>(h.nq);
        if (n <= 3) continue;
        CHECK(check_condition_i(u, m, n).holds);
        CHECK(reduce(alpha_params(u, m, n)) == base_red);
        ++samples;
      }
    }
  }
}

TEST_CASE("field pair labels") {
  auto a = field_pair_label(97);
  CHECK(a.n_mod_4 == 1);
  CHECK(a.K == DiscKind::D);
  CHECK(a.Kprime == DiscKind::pD);

  auto b = field_pair_label(55);
  CHECK(b.n_mod_4 == 3);
  CHECK(b.K == DiscKind::pD);
  CHECK(b.Kprime == DiscKind::D);

  auto c = field_pair_label(1);
  CHECK(c.K == DiscKind::D);

  auto d = field_pair_label(-3);  // -3 = 1 (mod 4)
  CHECK(d.n_mod_4 == 1);
  CHECK(d.K == DiscKind::D);

  CHECK_THROWS_AS(field_pair_label(4), std::domain_error);
}

TEST_CASE("square-form identity behind condition A1 on the grid") {
  for (std::uint64_t p : {5ull, 13ull, 29ull}) {
    FundamentalUnit u = fundamental_unit(p);
    mpz_class b2p = u.b * u.b * static_cast<unsigned long>(p);
    for (long long m = -15; m <= 15; m += 2) {
      for (long long n = -15; n <= 15; n += 2) {
        auto ap = alpha_params(u, m, n);
        auto pm = lucas_pair(u.t, m);
        auto pn = lucas_pair(u.t, n);
        mpz_class inner = pm.L * pn.F - 2 * pm.F;
        mpz_class lhs =
            (ap.norm + 4) * (ap.norm + 4) - 4 * ap.trace * ap.trace;
        CHECK(lhs == pm.L * pm.L * b2p * inner * inner);
      }
    }
  }
}
