#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <set>

#include "cycert/arith.hpp"
#include "cycert/charsums.hpp"
#include "cycert/classgroup.hpp"
#include "cycert/curves.hpp"
#include "cycert/family.hpp"
#include "cycert/lucas.hpp"
#include "document.hpp"

namespace cycert::cli {

namespace {

int guard(const std::function<int()>& body, std::ostream& err = std::cerr) {
  try {
    return body();
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const unfactored_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

// exact check of count >= target + 1 - w*sqrt(target)
bool weil_floor_ok(std::uint64_t count, std::uint64_t card, std::uint64_t w) {
  if (count >= card + 1) return true;
  std::uint64_t deficit = card + 1 - count;
  return deficit * deficit <= w * w * card;
}

}  // namespace

int cmd_unit(std::uint64_t p, std::ostream& out) {
  return guard([&] {
    FundamentalUnit u = fundamental_unit(p);
    out << unit_document(u).dump() << '\n';
    return 0;
  });
}

int cmd_search(std::uint64_t p, const std::vector<std::uint64_t>& qs,
               bool emit_tables, std::uint64_t scan_bound, std::ostream& out) {
  return guard([&] {
    SearchOptions opt;
    if (scan_bound != 0) opt.scan_bound = scan_bound;
    FundamentalUnit u = fundamental_unit(p);
    auto hits = search(p, qs, opt);
    if (emit_tables) {
      std::set<std::uint64_t> seen;
      bool first = true;
      for (const SearchHit& h : hits) {
        if (!seen.insert(h.q).second) continue;
        if (!first) out << '\n';
        first = false;
        out << render_tables(u, h.q, hits);
      }
      for (std::uint64_t q : qs)
        if (!seen.count(q)) {
          if (!first) out << '\n';
          first = false;
          out << render_tables(u, q, hits);
        }
    } else {
      out << search_document(u, hits).dump(2) << '\n';
    }
    return 0;
  });
}

int cmd_certify(std::uint64_t p, long long m0, long long n0, std::uint64_t q,
                const std::string& out_file, std::ostream& out) {
  return guard([&] {
    CertifyResult res = certify(p, m0, n0, q);
    FieldTower tower(q);
    ordered_json doc = certificate_document(res, tower);
    std::string text = doc.dump(2);
    out << text << '\n';
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) throw std::invalid_argument("cannot open output file: " + out_file);
      f << text << '\n';
    }
    return res.passed ? 0 : 1;
  });
}

namespace {

int verify_identities(const FundamentalUnit& u, std::ostream& out) {
  IdentityReport rep = identity_suite(u, -50, 50, -50, 50);
  out << "suite identities p=" << u.p << ": checks=" << rep.checks
      << " violations=" << rep.violations.size() << '\n';
  for (const auto& v : rep.violations)
    out << "  violation " << v.identity << " n=" << v.n << " m=" << v.m
        << '\n';
  return rep.ok() ? 0 : 1;
}

int verify_gauss(const FundamentalUnit& u, std::ostream& out) {
  IotaChoice iota = choose_iota(u.p, u.t);
  GaussSumReport rep = gauss_sum_report(iota);
  GaussianInt js = jacobi_sum(iota);
  TwoSquares ts = two_squares(u.p, u.t);
  bool match = js.re == ts.A && js.im == ts.B;
  out << "suite gauss p=" << u.p << ": iota=" << iota.iota
      << " jacobi_sum=" << js.re.get_str() << (js.im >= 0 ? "+" : "")
      << js.im.get_str() << "i"
      << " matches_two_squares=" << (match ? "yes" : "no")
      << " identities_ok=" << (rep.all_ok() ? "yes" : "no")
      << " max_err=" << rep.max_abs_error << '\n';
  return (match && rep.all_ok()) ? 0 : 1;
}

int verify_square_decomposition(const FundamentalUnit& u, std::ostream& out) {
  TwoSquares ts = two_squares(u.p, u.t);
  unsigned violations = 0;
  for (long long n = -50; n <= 50; ++n)
    if (!check_square_decomposition(u, ts, n)) ++violations;
  out << "suite lemma47 p=" << u.p << ": indices=[-50,50] violations="
      << violations << '\n';
  return violations == 0 ? 0 : 1;
}

int verify_curves(std::ostream& out) {
  unsigned fields = 0, violations = 0;
  for (std::uint64_t q = 3; q <= 1999; q += 2) {
    if (!is_prime_u64(q)) continue;
    for (int r = 1; r <= 2; ++r) {
      unsigned __int128 card128 = q;
      if (r == 2) card128 *= q;
      if (card128 <= 45 || card128 > 2000) continue;
      auto card = static_cast<std::uint64_t>(card128);
      ++fields;
      if (!y_set_is_full(q, r)) {
        ++violations;
        out << "  value set not full for q^r=" << card << '\n';
      }
      FieldTower tower(q);
      for (const CurveCount& c : curve_sweep(q, r)) {
        FieldElem two = tower.from_residue(2, r);
        bool special = c.k == two || c.k == tower.neg(two);
        bool bound_ok = weil_floor_ok(c.affine_points, card, special ? 2 : 6);
        if (!bound_ok || !c.s_k_nonempty) {
          ++violations;
          out << "  curve check failed q^r=" << card << '\n';
        }
      }
    }
  }
  out << "suite curves: fields=" << fields << " violations=" << violations
      << '\n';
  return violations == 0 ? 0 : 1;
}

int verify_periods(const FundamentalUnit& u, std::ostream& out) {
  unsigned violations = 0;
  std::uint64_t p2 = u.p * u.p;
  std::uint64_t f_period = period(u.t, p2, Seq::F).period;
  std::uint64_t l_period = period(u.t, p2, Seq::L).period;
  bool ok_f = (p2 * (u.p - 1)) % f_period == 0;
  bool ok_l = (u.p * (u.p - 1)) % l_period == 0;
  if (!ok_f) ++violations;
  if (!ok_l) ++violations;
  out << "period F mod " << p2 << " = " << f_period
      << (ok_f ? " divides " : " DOES NOT divide ") << p2 * (u.p - 1) << '\n';
  out << "period L mod " << p2 << " = " << l_period
      << (ok_l ? " divides " : " DOES NOT divide ") << u.p * (u.p - 1) << '\n';
  for (std::uint64_t q : {11ull, 53ull, 61ull}) {
    if (q == u.p || mpz_divisible_ui_p(u.b.get_mpz_t(), q)) continue;
    int chi = jacobi_symbol(mpz_class(static_cast<unsigned long>(u.p)),
                            mpz_class(static_cast<unsigned long>(q)));
    std::uint64_t bound = chi == 1 ? q - 1 : 2 * (q + 1);
    for (Seq s : {Seq::F, Seq::L}) {
      std::uint64_t per = period(u.t, q, s).period;
      bool ok = bound % per == 0;
      if (!ok) ++violations;
      out << "period " << (s == Seq::F ? 'F' : 'L') << " mod " << q << " = "
          << per << (ok ? " divides " : " DOES NOT divide ") << bound << '\n';
    }
  }
  out << "suite periods p=" << u.p << ": violations=" << violations << '\n';
  return violations == 0 ? 0 : 1;
}

}  // namespace

int cmd_verify(std::uint64_t p, const std::string& suite, std::ostream& out) {
  return guard([&]() -> int {
    if (suite == "curves") return verify_curves(out);
    FundamentalUnit u = fundamental_unit(p);
    if (suite == "identities") return verify_identities(u, out);
    if (suite == "gauss") return verify_gauss(u, out);
    if (suite == "lemma47") return verify_square_decomposition(u, out);
    if (suite == "periods") return verify_periods(u, out);
    throw std::invalid_argument("unknown suite: " + suite);
  });
}

int cmd_disc(std::uint64_t p, long long m, long long n, std::ostream& out) {
  return guard([&] {
    FundamentalUnit u = fundamental_unit(p);
    mpz_class d = radicand(u.t, u.b, m, n);

    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "radicand";
    doc["p"] = p;
    doc["m"] = m;
    doc["n"] = n;
    doc["t"] = u.t.get_str();
    doc["b"] = u.b.get_str();
    doc["D"] = d.get_str();

    // partial factorization by trial division
    ordered_json factors = ordered_json::array();
    mpz_class rest = abs(d);
    if (rest > 1) {
      auto strip = [&](std::uint64_t f) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), f)) {
          mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), f);
          ++e;
        }
        if (e > 0)
          factors.push_back(ordered_json{{"prime", f}, {"exponent", e}});
      };
      strip(2);
      strip(3);
      for (std::uint64_t f = 5; f <= 1000000 && rest > 1; f += 6) {
        strip(f);
        strip(f + 2);
      }
    }
    doc["factors"] = std::move(factors);
    doc["cofactor"] = rest.get_str();
    doc["fully_factored"] = rest == 1;

    FieldPairLabel label = field_pair_label(n);
    doc["label"] =
        ordered_json{{"n_mod_4", label.n_mod_4},
                     {"K", label.K == DiscKind::D ? "D" : "pD"},
                     {"Kprime", label.Kprime == DiscKind::D ? "D" : "pD"}};
    out << doc.dump(2) << '\n';
    return 0;
  });
}

}  // namespace cycert::cli
