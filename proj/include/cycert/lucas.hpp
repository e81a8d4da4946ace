#ifndef CYCERT_LUCAS_HPP
#define CYCERT_LUCAS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cycert/realquad.hpp"

namespace cycert {

// Value pair of the recurrence X^2 - tX - 1:
//   F(0)=0, F(1)=1, L(0)=2, L(1)=t, s(n+2) = t*s(n+1) + s(n),
// extended to negative indices by F(-n) = (-1)^(n+1) F(n),
// L(-n) = (-1)^n L(n).
struct LucasPair {
  mpz_class t;
  long long n = 0;
  mpz_class F;
  mpz_class L;
};

enum class Seq { F, L };

struct PeriodResult {
  std::uint64_t modulus = 0;
  Seq sequence = Seq::F;
  std::uint64_t period = 0;
};

struct IdentityViolation {
  std::string identity;
  long long n = 0;
  long long m = 0;
};

struct IdentityReport {
  unsigned long long checks = 0;
  std::vector<IdentityViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exact values, O(log|n|) big-integer multiplications.
LucasPair lucas_pair(const mpz_class& t, long long n);

// (F(n) mod m, L(n) mod m) by fast doubling; m in [2, 2^63).
std::pair<std::uint64_t, std::uint64_t> lucas_pair_mod(const mpz_class& t,
                                                       long long n,
                                                       std::uint64_t m);

// Least period of F or L modulo m.  When a divisibility bound is known
// (modulus p^2 for p | t^2+4, or an odd prime not dividing 2(t^2+4)) the
// divisors of the bound are enumerated; otherwise a linear scan capped at
// 10^7 steps is used and a std::runtime_error is thrown past the cap.
PeriodResult period(const mpz_class& t, std::uint64_t m, Seq which);

// Exact checks of the norm, addition and companion identities together
// with the negative-index sign laws over the closed index ranges.
IdentityReport identity_suite(const FundamentalUnit& u, long long n_min,
                              long long n_max, long long m_min,
                              long long m_max);

// True iff p^nu | F(n); requires p^nu | n.
bool valuation_law_check(const mpz_class& t, std::uint64_t p, unsigned nu,
                         long long n);

// Exact table of F and L over [lo, hi], used by the identity suites.
class LucasTable {
 public:
  LucasTable(const mpz_class& t, long long lo, long long hi);
  const mpz_class& F(long long n) const;
  const mpz_class& L(long long n) const;

 private:
  long long lo_;
  std::vector<mpz_class> f_, l_;
};

}  // namespace cycert

#endif
