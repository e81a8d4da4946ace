// Independent test oracles: brute-force and closed-form reference
// computations kept deliberately separate from the library paths they check.
#ifndef CYCERT_TESTS_ORACLES_HPP
#define CYCERT_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracles {

// direct recurrence, O(|n|)
inline std::pair<mpz_class, mpz_class> naive_lucas(const mpz_class& t,
                                                   long long n) {
  mpz_class f0 = 0, f1 = 1, l0 = 2, l1 = t;
  if (n == 0) return {f0, l0};
  long long steps = n > 0 ? n : -n;
  for (long long i = 1; i < steps; ++i) {
    mpz_class f2 = t * f1 + f0;
    mpz_class l2 = t * l1 + l0;
    f0 = f1;
    f1 = f2;
    l0 = l1;
    l1 = l2;
  }
  mpz_class F = f1, L = l1;
  if (n < 0) {
    if (steps % 2 == 0) F = -F;
    if (steps % 2 == 1) L = -L;
  }
  return {F, L};
}

// Legendre symbol for odd prime n by exhaustive squaring
inline int jacobi_by_squares(std::uint64_t a, std::uint64_t n) {
  a %= n;
  if (a == 0) return 0;
  for (std::uint64_t x = 1; x < n; ++x)
    if (x * x % n == a) return 1;
  return -1;
}

// all (A, B) with A^2 + B^2 = p, |A| odd
inline std::optional<std::pair<std::uint64_t, std::uint64_t>>
two_squares_by_scan(std::uint64_t p) {
  for (std::uint64_t a = 1; a * a <= p; ++a)
    for (std::uint64_t b = 0; b * b <= p - a * a; ++b)
      if (a * a + b * b == p) return (a & 1) ? std::pair{a, b} : std::pair{b, a};
  return std::nullopt;
}

// least period of the recurrence value sequence mod m
inline std::uint64_t naive_period(const mpz_class& t, std::uint64_t m,
                                  bool companion) {
  mpz_class tm = t % m;
  if (tm < 0) tm += m;
  std::uint64_t tu = tm.get_ui();
  std::uint64_t a0 = companion ? 2 % m : 0;
  std::uint64_t a1 = companion ? tu : 1 % m;
  std::uint64_t x = a0, y = a1;
  for (std::uint64_t i = 1;; ++i) {
    std::uint64_t z = (static_cast<unsigned __int128>(tu) * y + x) % m;
    x = y;
    y = z;
    if (x == a0 && y == a1) return i;
  }
}

// Dirichlet character-sum class number for fundamental disc < 0:
// h = w/(2|D|) * |sum a * kronecker(D, a)|
inline std::uint64_t class_number_by_charsum(const mpz_class& disc) {
  mpz_class sum = 0;
  mpz_class mag = -disc;
  unsigned long bound = mag.get_ui();
  for (unsigned long a = 1; a < bound; ++a) {
    mpz_class am(a);
    int chi = mpz_kronecker(disc.get_mpz_t(), am.get_mpz_t());
    sum += chi * static_cast<long>(a);
  }
  mpz_class habs = abs(sum);
  unsigned w = disc == -3 ? 6 : (disc == -4 ? 4 : 2);
  mpz_class h = habs * w / (2 * mag);
  return h.get_ui();
}

}  // namespace oracles

#endif
