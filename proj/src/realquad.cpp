#include "cycert/realquad.hpp"

#include <stdexcept>

#include "cycert/arith.hpp"

namespace cycert {

namespace {

// Minimal solution of x^2 - p y^2 = -1 from the continued fraction of
// sqrt(p).  The expansion of a non-square has state (m, d) with
//   a_k = floor((a0 + m_k) / d_k),  m_{k+1} = d_k a_k - m_k,
//   d_{k+1} = (p - m_{k+1}^2) / d_k,
// and the period closes when the state returns to (a0, 1).  For a prime
// p = 1 (mod 4) the period length is odd, so the convergent just before
// the closing step solves the negative Pell equation.
std::pair<mpz_class, mpz_class> negative_pell(std::uint64_t p) {
  mpz_class root;
  mpz_class P(static_cast<unsigned long>(p));
  mpz_sqrt(root.get_mpz_t(), P.get_mpz_t());
  mpz_class a0 = root;

  mpz_class m = 0, d = 1, a = a0;
  mpz_class h_prev = 1, h = a0;  // numerators
  mpz_class k_prev = 0, k = 1;   // denominators
  while (true) {
    m = d * a - m;
    d = (P - m * m) / d;
    a = (a0 + m) / d;
    if (d == 1 && m == a0) break;  // state repetition: period boundary
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  if (h * h - P * k * k != -1)
    throw std::logic_error("fundamental_unit: Pell convergent has norm +1");
  return {h, k};
}

}  // namespace

FundamentalUnit fundamental_unit(std::uint64_t p) {
  if (p % 8 != 5 || !is_prime_u64(p))
    throw std::domain_error(
        "fundamental_unit: p must be a prime = 5 (mod 8)");

  auto [x1, y1] = negative_pell(p);

  // x1 + y1 sqrt(p) generates the units of Z[sqrt(p)]; the maximal order
  // Z[(1+sqrt(p))/2] may contain its cube root (t + b sqrt(p))/2, which
  // solves t(t^2 + 3) = 2 x1.
  mpz_class target = 2 * x1;
  mpz_class t;
  mpz_root(t.get_mpz_t(), target.get_mpz_t(), 3);
  bool found = false;
  for (mpz_class cand = t - 1; cand <= t + 1; ++cand) {
    if (cand > 0 && cand * (cand * cand + 3) == target) {
      t = cand;
      found = true;
      break;
    }
  }

  FundamentalUnit u;
  u.p = p;
  if (found) {
    mpz_class denom = t * t + 1;
    mpz_class b2y = 2 * y1;
    if (b2y % denom == 0) {
      u.t = t;
      u.b = b2y / denom;
      if (u.t * u.t + 4 == u.b * u.b * static_cast<unsigned long>(p)) return u;
    }
  }
  u.t = 2 * x1;
  u.b = 2 * y1;
  return u;
}

}  // namespace cycert
