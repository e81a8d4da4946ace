#include "cycert/classgroup.hpp"

#include <stdexcept>
#include <vector>

#include "cycert/arith.hpp"
#include "cycert/family.hpp"

namespace cycert {

namespace {

constexpr long kMaxDiscMagnitude = 1000000000;  // 10^9

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 31623;  // sqrt(10^9)
    std::vector<bool> sieve(limit + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit;
           j += i)
        sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

bool squarefree_u64(std::uint64_t n) {
  for (std::uint32_t pr : small_primes()) {
    std::uint64_t sq = static_cast<std::uint64_t>(pr) * pr;
    if (sq > n) break;
    if (n % sq == 0) return false;
  }
  return true;
}

bool is_fundamental(const mpz_class& disc) {
  if (disc >= 0) return false;
  mpz_class m = disc % 4;
  if (m < 0) m += 4;
  mpz_class a = -disc;
  if (!a.fits_ulong_p()) return false;
  std::uint64_t mag = a.get_ui();
  if (m == 1) return squarefree_u64(mag);
  if (m == 0) {
    std::uint64_t k = mag / 4;  // disc = 4k', here k = |disc/4|
    std::uint64_t km = (4 - k % 4) % 4;  // disc/4 mod 4 for negative disc/4
    return (km == 2 || km == 3) && squarefree_u64(k);
  }
  return false;
}

}  // namespace

std::uint64_t class_number(const mpz_class& disc) {
  if (disc >= 0)
    throw std::domain_error("class_number: discriminant must be negative");
  if (-disc > kMaxDiscMagnitude)
    throw std::domain_error("class_number: |disc| exceeds 10^9");
  if (!is_fundamental(disc))
    throw std::domain_error("class_number: discriminant not fundamental");

  std::int64_t D = disc.get_si();
  std::uint64_t count = 0;
  // reduced forms (a, b, c): b^2 - 4ac = D, |b| <= a <= c,
  // b >= 0 when |b| = a or a = c
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (a == c || a == -b)) continue;
      ++count;
    }
  }
  return count;
}

ImagQuadField imag_quad_field(const mpz_class& D) {
  if (D >= 0)
    throw std::domain_error("imag_quad_field: D must be negative");
  ImagQuadField out;
  out.D_input = D;
  SquarefreeDecomp sq = squarefree_part(D);
  mpz_class m = sq.s % 4;
  if (m < 0) m += 4;
  out.fundamental_discriminant = m == 1 ? sq.s : 4 * sq.s;
  return out;
}

ProbeResult divisibility_probe(const FundamentalUnit& u, long long m,
                               long long n, const mpz_class& budget) {
  ProbeResult out;
  out.radicand_value = radicand(u.t, u.b, m, n);
  if (out.radicand_value >= 0) {
    // degenerate or positive radicand: not an imaginary field
    return out;
  }

  auto probe = [&](const mpz_class& D, Divisibility& status,
                   std::optional<ImagQuadField>& field) {
    status = Divisibility::infeasible;
    try {
      ImagQuadField f = imag_quad_field(D);
      if (-f.fundamental_discriminant > budget ||
          -f.fundamental_discriminant > kMaxDiscMagnitude)
        return;
      f.class_number = class_number(f.fundamental_discriminant);
      status = (*f.class_number % u.p == 0) ? Divisibility::divisible
                                            : Divisibility::not_divisible;
      field = std::move(f);
    } catch (const unfactored_error&) {
      // square-free part not certified within budget
    }
  };

  probe(out.radicand_value, out.field_D, out.K_D);
  probe(out.radicand_value * static_cast<unsigned long>(u.p), out.field_pD,
        out.K_pD);
  return out;
}

}  // namespace cycert
