#ifndef CYCERT_REALQUAD_HPP
#define CYCERT_REALQUAD_HPP

#include <cstdint>

#include <gmpxx.h>

namespace cycert {

// u = (t + b*sqrt(p))/2 > 1 with t, b > 0 and t^2 + 4 = b^2 * p
// (norm -1, forced for primes p = 1 mod 4).
struct FundamentalUnit {
  std::uint64_t p = 0;
  mpz_class t;
  mpz_class b;
};

// Fundamental unit of Q(sqrt(p)) for p prime, p = 5 (mod 8), computed from
// the continued fraction of sqrt(p) with exact integer state.  The minimal
// Pell solution lives in Z[sqrt(p)]; when the maximal order is strictly
// larger the unit is recovered as its exact cube root.
FundamentalUnit fundamental_unit(std::uint64_t p);

}  // namespace cycert

#endif
