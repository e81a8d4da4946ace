#ifndef CYCERT_ARITH_HPP
#define CYCERT_ARITH_HPP

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace cycert {

// Thrown when squarefree_part cannot certify the square-free part of its
// input within the trial-division budget.
struct unfactored_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// p = A^2 + B^2 with A = -1 (mod 4), B even, and p | A*t + 2*B for the
// unit trace t supplied at construction.  x0 >= 0 and y0 carry the exact
// square data
//   2p*x0^2 = b*p + (A*t + 2*B),
//   2p*y0^2 = b*p - (A*t + 2*B),
//   2p*x0*y0 = B*t - 2*A,
// where b is recovered from t^2 + 4 = b^2 * p.  The sign of y0 follows
// B*t - 2*A; when that quantity vanishes the sign is fixed to +1.
struct TwoSquares {
  std::uint64_t p = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
  mpz_class x0;
  mpz_class y0;
};

// s square-free with sign(s) = sign(input), input = s * A^2, A > 0.
struct SquarefreeDecomp {
  mpz_class s;
  mpz_class A;
};

// Deterministic for n < 2^64; larger inputs use a Baillie-PSW test plus
// extra Miller-Rabin rounds.  Throws std::domain_error for n < 2.
bool is_prime(const mpz_class& n);
bool is_prime_u64(std::uint64_t n);

// Standard Jacobi symbol (a/n); n must be odd and positive.
int jacobi_symbol(const mpz_class& a, const mpz_class& n);

// Requires p prime, p = 5 (mod 8), and t^2 + 4 = 0 (mod p) with
// (t^2 + 4)/p a perfect square (the unit trace condition).
TwoSquares two_squares(std::uint64_t p, const mpz_class& t);

// Sign normalization of the sum-of-two-squares pair alone: needs only
// t mod p, no exact square data.
std::pair<std::int64_t, std::int64_t> two_squares_ab(std::uint64_t p,
                                                     std::uint64_t t_mod_p);

// Trial division up to trial_bound, then the cofactor must be 1, a prime,
// or a perfect power; otherwise throws unfactored_error.
SquarefreeDecomp squarefree_part(const mpz_class& a,
                                 std::uint64_t trial_bound = 1000000);

// ---- word-size modular helpers shared across modules ----
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace cycert

#endif
