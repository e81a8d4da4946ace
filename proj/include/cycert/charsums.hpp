#ifndef CYCERT_CHARSUMS_HPP
#define CYCERT_CHARSUMS_HPP

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "cycert/arith.hpp"
#include "cycert/realquad.hpp"

namespace cycert {

struct GaussianInt {
  mpz_class re;
  mpz_class im;
};

// Primitive root iota mod p normalized by t = -2 * iota^((p-1)/4) (mod p);
// one of a primitive root or its negative always satisfies this.
struct IotaChoice {
  std::uint64_t p = 0;
  std::uint64_t iota = 0;
};

// Least primitive root satisfying the normalization congruence.
// Requires p = 5 (mod 8) prime and t^2 = -4 (mod p).
IotaChoice choose_iota(std::uint64_t p, const mpz_class& t);

// Exact Jacobi sum of the order-4 character chi with chi(iota) = i,
// J = sum over a of chi(a) chi(1-a).  The result c + di satisfies
// c^2 + d^2 = p, c = -1 (mod 4), and (c, d) matches two_squares.
GaussianInt jacobi_sum(const IotaChoice& iota);

// Floating-point verification of the Gauss-sum identities for the order-4
// character and its conjugate: the product G * Gbar = -p, the squares
// G^2 = sqrt(p)(A + iB), Gbar^2 = sqrt(p)(A - iB), and the squared sum and
// difference 2 sqrt(p) A -/+ 2p.  Absolute tolerance 1e-9 * p; p <= 10^4.
struct GaussSumReport {
  std::uint64_t p = 0;
  double tolerance = 0.0;
  double max_abs_error = 0.0;
  bool product_ok = false;
  bool square_ok = false;
  bool conj_square_ok = false;
  bool sum_square_ok = false;
  bool diff_square_ok = false;
  bool all_ok() const {
    return product_ok && square_ok && conj_square_ok && sum_square_ok &&
           diff_square_ok;
  }
};

GaussSumReport gauss_sum_report(const IotaChoice& iota);

// Exact integer values of the squared quadratic-layer elements:
//   lambda^2 = -1/2 (F(n)L(m) - 2F(m)) b p L(m) (b p F(n) - L(n)A - 2B),
//   mu^2     = -1/2 (F(n)L(m) - 2F(m)) b p L(m) (b p F(n) + L(n)A - 2B).
std::pair<mpz_class, mpz_class> lambda_mu_squares(const FundamentalUnit& u,
                                                  const TwoSquares& ts,
                                                  long long m, long long n);

// Exact check of both sign variants of
//   b p F(4n+-1) -+ L(4n+-1) A - 2B = 2p (x0 F(2n) +- y0 F(2n+-1))^2
// at the given index n.
bool check_square_decomposition(const FundamentalUnit& u, const TwoSquares& ts,
                                long long n);

}  // namespace cycert

#endif
