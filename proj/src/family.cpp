#include "cycert/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cycert/arith.hpp"
#include "cycert/lucas.hpp"

namespace cycert {

namespace {

void require_odd(long long m, long long n, const char* who) {
  if ((m % 2 + 2) % 2 == 0 || (n % 2 + 2) % 2 == 0)
    throw std::domain_error(std::string(who) + ": indices must be odd");
}

// sign of U + V*sqrt(p) - c, exact (p is not a square)
int quad_sign(const mpz_class& U, const mpz_class& V, std::uint64_t p,
              long c) {
  mpz_class W = c - U;
  if (V == 0) return W == 0 ? 0 : (W < 0 ? 1 : -1);
  if (V > 0) {
    if (W <= 0) return 1;
    mpz_class lhs = V * V * static_cast<unsigned long>(p);
    mpz_class rhs = W * W;
    if (lhs == rhs) throw std::logic_error("quad_sign: sqrt(p) rational");
    return lhs > rhs ? 1 : -1;
  }
  if (W >= 0) return -1;
  mpz_class lhs = V * V * static_cast<unsigned long>(p);
  mpz_class rhs = W * W;
  if (lhs == rhs) throw std::logic_error("quad_sign: sqrt(p) rational");
  return lhs < rhs ? 1 : -1;
}

std::uint64_t modinv_u64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t0 = 0, t1 = 1;
  std::uint64_t r0 = m, r1 = a % m;
  while (r1 != 0) {
    std::uint64_t qt = r0 / r1;
    std::int64_t t2 = t0 - static_cast<std::int64_t>(qt) * t1;
    t0 = t1;
    t1 = t2;
    std::uint64_t r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
  }
  if (r0 != 1) throw std::domain_error("modinv: not invertible");
  return t0 < 0 ? static_cast<std::uint64_t>(t0 + static_cast<std::int64_t>(m))
                : static_cast<std::uint64_t>(t0);
}

std::uint64_t mod_u64(const mpz_class& x, std::uint64_t m) {
  mpz_class r = x % m;
  if (r < 0) r += m;
  return r.get_ui();
}

void validate_prime_p(std::uint64_t p, const char* who) {
  if (p >= (1ull << 31))
    throw std::domain_error(std::string(who) + ": p too large");
  if (p % 8 != 5 || !is_prime_u64(p))
    throw std::domain_error(std::string(who) +
                            ": p must be a prime = 5 (mod 8)");
}

bool q_divides_2bp(const FundamentalUnit& u, std::uint64_t q) {
  if (q == 2 || q == u.p) return true;
  return mpz_divisible_ui_p(u.b.get_mpz_t(), q) != 0;
}

}  // namespace

AlphaParams alpha_params(const FundamentalUnit& u, long long m, long long n) {
  require_odd(m, n, "alpha_params");
  AlphaParams out;
  out.p = u.p;
  out.t = u.t;
  out.b = u.b;
  out.m = m;
  out.n = n;

  auto pm = lucas_pair(u.t, m);
  auto pn = lucas_pair(u.t, n);
  mpz_class b2p = u.b * u.b * static_cast<unsigned long>(u.p);
  mpz_class inner = pm.L * pn.F - 2 * pm.F;  // L(m) F(n) - 2 F(m)

  out.trace = pn.L * pm.L;
  out.norm = pm.F * b2p * inner + 4;
  out.quartic = {mpz_class(1), -out.trace, out.norm + 2, -out.trace,
                 mpz_class(1)};

  mpz_class V = inner * u.b;  // alpha = (trace + V sqrt(p)) / 2
  out.nonrational = V != 0;
  if (V != 0) {
    out.shift_nonsquare = true;  // alpha^2 has an irrational part
  } else if (mpz_odd_p(out.trace.get_mpz_t())) {
    out.shift_nonsquare = true;  // alpha^2 - 4 is not an integer
  } else {
    mpz_class val = out.trace / 2;
    val = val * val - 4;
    out.shift_nonsquare =
        val < 0 || mpz_perfect_square_p(val.get_mpz_t()) == 0;
  }
  return out;
}

mpz_class radicand(const mpz_class& t, const mpz_class& b, long long m,
                   long long n) {
  require_odd(m, n, "radicand");
  auto pm = lucas_pair(t, m);
  auto pn = lucas_pair(t, n);
  return pm.L * (2 * pm.F - pn.F * pm.L) * b;
}

std::uint64_t family_modulus(const FundamentalUnit& u, std::uint64_t q) {
  if (!is_prime_u64(q)) throw std::domain_error("family_modulus: q not prime");
  if (q_divides_2bp(u, q))
    throw std::domain_error("family_modulus: q divides 2bp");
  if (u.p > 2000000)
    throw std::domain_error("family_modulus: p^2(p-1) exceeds 64 bits");
  std::uint64_t base = u.p * u.p * (u.p - 1);
  int chi = jacobi_symbol(mpz_class(static_cast<unsigned long>(u.p)),
                          mpz_class(static_cast<unsigned long>(q)));
  return chi == 1 ? lcm_u64(base, q - 1) : lcm_u64(base, 2 * (q + 1));
}

ConditionI check_condition_i(const FundamentalUnit& u, long long m0,
                             long long n0) {
  require_odd(m0, n0, "check_condition_i");
  std::uint64_t p2 = u.p * u.p;
  auto [fm, lm] = lucas_pair_mod(u.t, m0, p2);
  auto [fn, ln] = lucas_pair_mod(u.t, n0, p2);
  (void)ln;
  std::uint64_t inner =
      (mulmod_u64(lm, fn, p2) + p2 - (2 * fm) % p2) % p2;
  std::uint64_t w = mulmod_u64(inner, mod_u64(u.b, p2), p2);
  return {w == 0, w};
}

bool check_condition_A1(const FundamentalUnit& u, long long m, long long n) {
  require_odd(m, n, "check_condition_A1");
  auto ap = alpha_params(u, m, n);
  mpz_class V = (lucas_pair(u.t, m).L * lucas_pair(u.t, n).F -
                 2 * lucas_pair(u.t, m).F) *
                u.b;
  // (norm+4)^2 - 4 trace^2 = L(m)^2 b^2 p (L(m)F(n) - 2F(m))^2 exactly;
  // the closed form exhibits the value as p times a rational square.
  mpz_class lhs = (ap.norm + 4) * (ap.norm + 4) - 4 * ap.trace * ap.trace;
  mpz_class lm = lucas_pair(u.t, m).L;
  mpz_class rhs = lm * lm * V * V * static_cast<unsigned long>(u.p);
  if (lhs != rhs)
    throw std::logic_error("check_condition_A1: square form mismatch");
  bool positive_shift = quad_sign(ap.trace, V, u.p, 4) > 0 ||
                        quad_sign(ap.trace, V, u.p, -4) < 0;
  return positive_shift;
}

std::optional<ConditionII> check_condition_ii(const FundamentalUnit& u,
                                              long long m0, long long n0,
                                              std::uint64_t q,
                                              const FieldTower& tower) {
  require_odd(m0, n0, "check_condition_ii");
  if (!is_prime_u64(q) || q_divides_2bp(u, q))
    throw std::domain_error("check_condition_ii: q must be prime, q coprime to 2bp");

  auto [fm, lm] = lucas_pair_mod(u.t, m0, q);
  auto [fn, ln] = lucas_pair_mod(u.t, n0, q);
  std::uint64_t bq = mod_u64(u.b, q);
  std::uint64_t b2p = mulmod_u64(mulmod_u64(bq, bq, q), u.p % q, q);
  std::uint64_t trace = mulmod_u64(ln, lm, q);
  std::uint64_t inner = (mulmod_u64(lm, fn, q) + q - (2 * fm) % q) % q;
  std::uint64_t mid = (mulmod_u64(fm, mulmod_u64(b2p, inner, q), q) + 6) % q;

  std::array<mpz_class, 5> coeffs{
      mpz_class(1), mpz_class(static_cast<unsigned long>((q - trace) % q)),
      mpz_class(static_cast<unsigned long>(mid)),
      mpz_class(static_cast<unsigned long>((q - trace) % q)), mpz_class(1)};

  for (int level : {1, 2, 4}) {
    auto roots = quartic_roots(coeffs, tower, level);
    for (const FieldElem& a : roots) {
      if (tower.is_zero(a)) continue;
      if (!is_pth_power(a, u.p, tower)) {
        ConditionII out;
        out.ext_degree = level;
        out.root = a;
        out.root_set = roots;
        return out;
      }
    }
  }
  return std::nullopt;
}

namespace {

CertifyResult certify_with(const FundamentalUnit& u, const FieldTower& tower,
                           long long m0, long long n0, std::uint64_t q) {
  CertifyResult res;
  Certificate& c = res.cert;
  c.p = u.p;
  c.t = u.t;
  c.b = u.b;
  c.q = q;
  c.m0 = m0;
  c.n0 = n0;
  c.nq = family_modulus(u, q);
  c.parity_check = true;

  ConditionI ci = check_condition_i(u, m0, n0);
  c.condition_i_ok = ci.holds;
  c.condition_i_witness = ci.witness;
  if (!ci.holds) {
    res.passed = false;
    res.failed_check = "condition_i";
    return res;
  }

  auto cii = check_condition_ii(u, m0, n0, q, tower);
  if (!cii) {
    res.passed = false;
    res.failed_check = "condition_ii";
    return res;
  }
  c.ext_degree = cii->ext_degree;
  c.root = cii->root;
  c.root_set = cii->root_set;
  c.pth_power_check = !is_pth_power(cii->root, u.p, tower);
  res.passed = c.pth_power_check;
  if (!res.passed) res.failed_check = "condition_ii";
  return res;
}

}  // namespace

CertifyResult certify(std::uint64_t p, long long m0, long long n0,
                      std::uint64_t q) {
  validate_prime_p(p, "certify");
  require_odd(m0, n0, "certify");
  if (!is_prime_u64(q)) throw std::domain_error("certify: q must be prime");

  FundamentalUnit u = fundamental_unit(p);
  if (q_divides_2bp(u, q)) throw std::domain_error("certify: q divides 2bp");
  FieldTower tower(q);
  return certify_with(u, tower, m0, n0, q);
}

std::vector<SearchHit> search(std::uint64_t p,
                              const std::vector<std::uint64_t>& q_candidates,
                              const SearchOptions& options) {
  validate_prime_p(p, "search");
  if (q_candidates.empty())
    throw std::domain_error("search: empty candidate list");

  FundamentalUnit u = fundamental_unit(p);
  std::uint64_t p2 = p * p;
  std::vector<SearchHit> hits;

  for (std::uint64_t q : q_candidates) {
    if (!is_prime_u64(q) || q_divides_2bp(u, q))
      throw std::domain_error("search: q must be prime and coprime to 2bp");
    FieldTower tower(q);
    std::uint64_t nq = family_modulus(u, q);

    std::uint64_t M = 2;
    for (Seq s : {Seq::F, Seq::L}) {
      M = lcm_u64(M, period(u.t, p2, s).period);
      M = lcm_u64(M, period(u.t, q, s).period);
    }
    if (M > options.scan_bound)
      throw std::runtime_error("search: scan modulus exceeds bound");

    // sequence tables over one full scan period
    std::vector<std::uint64_t> fp2(M + 2), lp2(M + 2), fq(M + 2), lq(M + 2);
    {
      std::uint64_t tp2 = mod_u64(u.t, p2), tq = mod_u64(u.t, q);
      fp2[0] = 0;
      fp2[1] = 1 % p2;
      lp2[0] = 2 % p2;
      lp2[1] = tp2;
      fq[0] = 0;
      fq[1] = 1 % q;
      lq[0] = 2 % q;
      lq[1] = tq;
      for (std::uint64_t i = 2; i < M + 2; ++i) {
        fp2[i] = (mulmod_u64(tp2, fp2[i - 1], p2) + fp2[i - 2]) % p2;
        lp2[i] = (mulmod_u64(tp2, lp2[i - 1], p2) + lp2[i - 2]) % p2;
        fq[i] = (mulmod_u64(tq, fq[i - 1], q) + fq[i - 2]) % q;
        lq[i] = (mulmod_u64(tq, lq[i - 1], q) + lq[i - 2]) % q;
      }
    }

    // condition (i) collapses to F(n) = 2 F(m) / L(m) modulo p^2 / gcd(b, p^2)
    std::uint64_t g = gcd_u64(mod_u64(u.b, p2), p2);
    if (g == 0) g = p2;
    std::uint64_t pp = p2 / g;

    std::map<std::uint64_t, std::vector<std::uint64_t>> by_fn;
    for (std::uint64_t n = 1; n <= M; n += 2) by_fn[fp2[n] % pp].push_back(n);

    std::uint64_t bq = mod_u64(u.b, q);
    std::uint64_t b2p_q = mulmod_u64(mulmod_u64(bq, bq, q), p % q, q);

    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> cond_ii_cache;
    auto cond_ii_ok = [&](std::uint64_t m, std::uint64_t n) {
      std::uint64_t trace = mulmod_u64(lq[n], lq[m], q);
      std::uint64_t inner = (mulmod_u64(lq[m], fq[n], q) + q - (2 * fq[m]) % q) % q;
      std::uint64_t mid =
          (mulmod_u64(fq[m], mulmod_u64(b2p_q, inner, q), q) + 6) % q;
      auto key = std::make_pair(trace, mid);
      auto it = cond_ii_cache.find(key);
      if (it != cond_ii_cache.end()) return it->second;
      std::array<mpz_class, 5> coeffs{
          mpz_class(1), mpz_class(static_cast<unsigned long>((q - trace) % q)),
          mpz_class(static_cast<unsigned long>(mid)),
          mpz_class(static_cast<unsigned long>((q - trace) % q)),
          mpz_class(1)};
      bool ok = false;
      for (int level : {1, 2, 4}) {
        for (const FieldElem& a : quartic_roots(coeffs, tower, level)) {
          if (tower.is_zero(a)) continue;
          if (!is_pth_power(a, p, tower)) {
            ok = true;
            break;
          }
        }
        if (ok) break;
      }
      cond_ii_cache.emplace(key, ok);
      return ok;
    };

    std::set<std::pair<std::uint64_t, std::uint64_t>> passing;
    for (std::uint64_t m = 1; m <= M; m += 2) {
      std::uint64_t target =
          pp == 1 ? 0
                  : mulmod_u64((2 * fp2[m]) % pp,
                               modinv_u64(lp2[m] % pp, pp), pp);
      auto it = by_fn.find(target);
      if (it == by_fn.end()) continue;
      for (std::uint64_t n : it->second)
        if (cond_ii_ok(m, n)) passing.insert({m, n});
    }

    // minimal even shift-invariance granularity per coordinate
    auto shift_invariant = [&](std::uint64_t d, bool on_m) {
      for (const auto& [m, n] : passing) {
        std::uint64_t m2 = on_m ? (m - 1 + d) % M + 1 : m;
        std::uint64_t n2 = on_m ? n : (n - 1 + d) % M + 1;
        if (!passing.count({m2, n2})) return false;
      }
      return true;
    };
    std::uint64_t mod_m = M, mod_n = M;
    for (std::uint64_t d = 2; d < M; d += 2) {
      if (M % d == 0 && shift_invariant(d, true)) {
        mod_m = d;
        break;
      }
    }
    for (std::uint64_t d = 2; d < M; d += 2) {
      if (M % d == 0 && shift_invariant(d, false)) {
        mod_n = d;
        break;
      }
    }

    std::set<std::pair<std::uint64_t, std::uint64_t>> classes;
    for (const auto& [m, n] : passing)
      classes.insert({(m - 1) % mod_m + 1, (n - 1) % mod_n + 1});

    for (const auto& [m0, n0] : classes) {
      SearchHit hit;
      hit.q = q;
      hit.nq = nq;
      hit.m_modulus = mod_m;
      hit.n_modulus = mod_n;
      hit.m0 = m0;
      hit.n0 = n0;
      hit.has_split_witness = mod_u64(u.b, p) != 0;
      if (hit.has_split_witness) {
        hit.witness_m = mulmod_u64((2 * fp2[m0]) % p2,
                                   modinv_u64(lp2[m0], p2), p2);
        hit.witness_n = fp2[n0];
      }
      hit.cert = certify_with(u, tower, static_cast<long long>(m0),
                              static_cast<long long>(n0), q);
      if (!hit.cert.passed)
        throw std::logic_error("search: certified class failed replay");
      hits.push_back(std::move(hit));
    }
  }

  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    return std::tie(a.q, a.m0, a.n0) < std::tie(b.q, b.m0, b.n0);
  });
  return hits;
}

std::vector<SearchHit> table_slice(const FundamentalUnit& u,
                                   const std::vector<SearchHit>& hits,
                                   std::uint64_t q) {
  std::vector<SearchHit> keep;
  for (const SearchHit& h : hits)
    if (h.q == q && h.n0 % 4 == 3) keep.push_back(h);
  if (keep.empty()) {
    for (const SearchHit& h : hits)
      if (h.q == q) keep.push_back(h);
    return keep;
  }
  std::uint64_t pi = lcm_u64(period(u.t, q, Seq::F).period,
                             period(u.t, q, Seq::L).period);
  const SearchHit* anchor = &keep.front();
  for (const SearchHit& h : keep)
    if (std::tie(h.n0, h.m0) < std::tie(anchor->n0, anchor->m0)) anchor = &h;
  std::vector<SearchHit> out;
  for (const SearchHit& h : keep)
    if (h.m0 % pi == anchor->m0 % pi && h.n0 % pi == anchor->n0 % pi)
      out.push_back(h);
  return out;
}

FieldPairLabel field_pair_label(long long n) {
  if ((n % 2 + 2) % 2 == 0)
    throw std::domain_error("field_pair_label: n must be odd");
  FieldPairLabel out;
  out.n_mod_4 = static_cast<int>((n % 4 + 4) % 4);
  if (out.n_mod_4 == 1) {
    out.K = DiscKind::D;
    out.Kprime = DiscKind::pD;
  } else {
    out.K = DiscKind::pD;
    out.Kprime = DiscKind::D;
  }
  return out;
}

}  // namespace cycert
