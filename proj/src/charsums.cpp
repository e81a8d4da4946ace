#include "cycert/charsums.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cycert/ffield.hpp"
#include "cycert/lucas.hpp"

namespace cycert {

namespace {

// discrete logs to base iota; dlog[a] = k with iota^k = a (mod p)
std::vector<std::uint32_t> dlog_table(std::uint64_t p, std::uint64_t iota) {
  std::vector<std::uint32_t> dlog(p, 0);
  std::uint64_t pw = 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k) {
    dlog[pw] = static_cast<std::uint32_t>(k);
    pw = mulmod_u64(pw, iota, p);
  }
  if (pw != 1) throw std::logic_error("dlog_table: iota is not primitive");
  return dlog;
}

}  // namespace

IotaChoice choose_iota(std::uint64_t p, const mpz_class& t) {
  if (p % 8 != 5 || !is_prime_u64(p))
    throw std::domain_error("choose_iota: p must be a prime = 5 (mod 8)");
  mpz_class tsq = (t * t + 4) % static_cast<unsigned long>(p);
  if (tsq != 0)
    throw std::domain_error("choose_iota: t^2 must be -4 (mod p)");
  mpz_class tm = t % static_cast<unsigned long>(p);
  if (tm < 0) tm += static_cast<unsigned long>(p);
  std::uint64_t tp = tm.get_ui();

  auto factors = prime_factors_u64(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t f : factors)
      if (powmod_u64(g, (p - 1) / f, p) == 1) {
        primitive = false;
        break;
      }
    if (!primitive) continue;
    std::uint64_t g0 = powmod_u64(g, (p - 1) / 4, p);
    if ((2 * g0 + tp) % p == 0) return {p, g};  // t = -2 g0 (mod p)
  }
  throw std::logic_error("choose_iota: no normalized primitive root");
}

GaussianInt jacobi_sum(const IotaChoice& iota) {
  std::uint64_t p = iota.p;
  auto dlog = dlog_table(p, iota.iota);
  // chi(iota^k) = i^k; accumulate chi(a) chi(1-a) over a != 0, 1
  long long re = 0, im = 0;
  for (std::uint64_t a = 2; a < p; ++a) {
    std::uint32_t k = (dlog[a] + dlog[p + 1 - a]) & 3;
    switch (k) {
      case 0: ++re; break;
      case 1: ++im; break;
      case 2: --re; break;
      case 3: --im; break;
    }
  }
  GaussianInt out{mpz_class(static_cast<long>(re)),
                  mpz_class(static_cast<long>(im))};
  if (out.re * out.re + out.im * out.im != static_cast<unsigned long>(p))
    throw std::logic_error("jacobi_sum: modulus identity failed");
  mpz_class m4 = out.re % 4;
  if (m4 < 0) m4 += 4;
  if (m4 != 3) throw std::logic_error("jacobi_sum: real part not -1 mod 4");
  return out;
}

GaussSumReport gauss_sum_report(const IotaChoice& iota) {
  std::uint64_t p = iota.p;
  if (p > 10000)
    throw std::runtime_error("gauss_sum_report: p exceeds the evaluation budget");
  GaussSumReport rep;
  rep.p = p;
  rep.tolerance = 1e-9 * static_cast<double>(p);

  auto dlog = dlog_table(p, iota.iota);
  const double tau = 2.0 * std::acos(-1.0);
  const std::complex<double> chi_pow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  std::complex<double> G(0.0, 0.0), Gbar(0.0, 0.0);
  for (std::uint64_t a = 1; a < p; ++a) {
    std::complex<double> zeta =
        std::polar(1.0, tau * static_cast<double>(a) / static_cast<double>(p));
    std::complex<double> chi = chi_pow[dlog[a] & 3];
    G += chi * zeta;
    Gbar += std::conj(chi) * zeta;
  }

  // t mod p recovered from the normalization; fixes the signed pair (A, B)
  std::uint64_t g0 = powmod_u64(iota.iota, (p - 1) / 4, p);
  std::uint64_t tp = (2 * (p - g0)) % p;
  auto [A, B] = two_squares_ab(p, tp);
  double sp = std::sqrt(static_cast<double>(p));
  double dp = static_cast<double>(p);
  double dA = static_cast<double>(A), dB = static_cast<double>(B);

  double e1 = std::abs(G * Gbar - std::complex<double>(-dp, 0.0));
  double e2 = std::abs(G * G - std::complex<double>(sp * dA, sp * dB));
  double e3 = std::abs(Gbar * Gbar - std::complex<double>(sp * dA, -sp * dB));
  double e4 = std::abs((G + Gbar) * (G + Gbar) -
                       std::complex<double>(2 * sp * dA - 2 * dp, 0.0));
  double e5 = std::abs((G - Gbar) * (G - Gbar) -
                       std::complex<double>(2 * sp * dA + 2 * dp, 0.0));
  rep.product_ok = e1 <= rep.tolerance;
  rep.square_ok = e2 <= rep.tolerance;
  rep.conj_square_ok = e3 <= rep.tolerance;
  rep.sum_square_ok = e4 <= rep.tolerance;
  rep.diff_square_ok = e5 <= rep.tolerance;
  rep.max_abs_error = std::max({e1, e2, e3, e4, e5});
  return rep;
}

std::pair<mpz_class, mpz_class> lambda_mu_squares(const FundamentalUnit& u,
                                                  const TwoSquares& ts,
                                                  long long m, long long n) {
  if ((m % 2 + 2) % 2 == 0 || (n % 2 + 2) % 2 == 0)
    throw std::domain_error("lambda_mu_squares: indices must be odd");
  auto pm = lucas_pair(u.t, m);
  auto pn = lucas_pair(u.t, n);
  mpz_class bp = u.b * static_cast<unsigned long>(u.p);
  mpz_class front = (pn.F * pm.L - 2 * pm.F) * bp * pm.L;
  mpz_class lam_tail = bp * pn.F - pn.L * ts.A - 2 * ts.B;
  mpz_class mu_tail = bp * pn.F + pn.L * ts.A - 2 * ts.B;
  mpz_class lam2 = front * lam_tail;
  mpz_class mu2 = front * mu_tail;
  if (mpz_odd_p(lam2.get_mpz_t()) || mpz_odd_p(mu2.get_mpz_t()))
    throw std::logic_error("lambda_mu_squares: parity assertion failed");
  return {-lam2 / 2, -mu2 / 2};
}

bool check_square_decomposition(const FundamentalUnit& u, const TwoSquares& ts,
                                long long n) {
  mpz_class bp = u.b * static_cast<unsigned long>(u.p);
  mpz_class twop = 2 * mpz_class(static_cast<unsigned long>(u.p));
  auto F = [&](long long k) { return lucas_pair(u.t, k).F; };
  auto L = [&](long long k) { return lucas_pair(u.t, k).L; };

  mpz_class lhs_plus = bp * F(4 * n + 1) - L(4 * n + 1) * ts.A - 2 * ts.B;
  mpz_class inner_plus = ts.x0 * F(2 * n) + ts.y0 * F(2 * n + 1);
  mpz_class lhs_minus = bp * F(4 * n - 1) + L(4 * n - 1) * ts.A - 2 * ts.B;
  mpz_class inner_minus = ts.x0 * F(2 * n) - ts.y0 * F(2 * n - 1);
  return lhs_plus == twop * inner_plus * inner_plus &&
         lhs_minus == twop * inner_minus * inner_minus;
}

}  // namespace cycert
