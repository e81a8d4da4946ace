#include "cycert/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>

namespace cycert {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

namespace {

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) throw std::domain_error("is_prime: n must be >= 2");
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // These twelve bases decide primality for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) throw std::domain_error("is_prime: n must be >= 2");
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

int jacobi_symbol(const mpz_class& a, const mpz_class& n) {
  if (n < 1 || mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("jacobi_symbol: n must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// |A| odd, |B| even with A^2 + B^2 = p, by direct scan below 10^6 and by
// Cornacchia's descent from sqrt(-1) above.
std::pair<std::uint64_t, std::uint64_t> sum_of_two_squares(std::uint64_t p) {
  auto exact_sqrt = [](std::uint64_t v) -> std::optional<std::uint64_t> {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > v) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) return r;
    return std::nullopt;
  };
  if (p < 1000000) {
    for (std::uint64_t a = 1; a * a <= p; ++a) {
      if (auto b = exact_sqrt(p - a * a))
        return (a & 1) ? std::pair{a, *b} : std::pair{*b, a};
    }
    throw std::logic_error("two_squares: no representation found");
  }
  // p = 5 (mod 8) makes 2 a quadratic non-residue, so sqrt(-1) is direct.
  std::uint64_t r = powmod_u64(2, (p - 1) / 4, p);
  std::uint64_t a = p, b = r;
  while (static_cast<unsigned __int128>(b) * b > p) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  auto c = exact_sqrt(p - b * b);
  if (!c) throw std::logic_error("two_squares: descent failed");
  return (b & 1) ? std::pair{b, *c} : std::pair{*c, b};
}

}  // namespace

std::pair<std::int64_t, std::int64_t> two_squares_ab(std::uint64_t p,
                                                     std::uint64_t t_mod_p) {
  auto [ua, ub] = sum_of_two_squares(p);
  auto A = static_cast<std::int64_t>(ua);
  auto B = static_cast<std::int64_t>(ub);
  if ((A & 3) != 3) A = -A;
  // Exactly one sign of B satisfies p | A t + 2B.
  auto mod_p = [p](std::int64_t A_, std::int64_t B_, std::uint64_t t_) {
    __int128 v = static_cast<__int128>(A_) * static_cast<std::int64_t>(t_) +
                 2 * static_cast<__int128>(B_);
    v %= static_cast<std::int64_t>(p);
    return v == 0;
  };
  bool plus = mod_p(A, B, t_mod_p);
  bool minus = mod_p(A, -B, t_mod_p);
  if (plus == minus)
    throw std::logic_error("two_squares: sign condition not unique");
  if (minus) B = -B;
  return {A, B};
}

TwoSquares two_squares(std::uint64_t p, const mpz_class& t) {
  if (p % 8 != 5 || !is_prime_u64(p))
    throw std::domain_error("two_squares: p must be a prime = 5 (mod 8)");
  mpz_class t2p4 = t * t + 4;
  if (t2p4 % static_cast<unsigned long>(p) != 0)
    throw std::domain_error("two_squares: t^2 + 4 must vanish mod p");
  mpz_class b2 = t2p4 / static_cast<unsigned long>(p);
  if (mpz_perfect_square_p(b2.get_mpz_t()) == 0)
    throw std::domain_error("two_squares: t is not a unit trace for p");
  mpz_class b;
  mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());

  mpz_class tp = t % static_cast<unsigned long>(p);
  if (tp < 0) tp += static_cast<unsigned long>(p);
  auto [A, B] = two_squares_ab(p, tp.get_ui());

  TwoSquares out;
  out.p = p;
  out.A = A;
  out.B = B;

  mpz_class at2b = mpz_class(A) * t + 2 * B;
  mpz_class bp = b * static_cast<unsigned long>(p);
  mpz_class num_plus = bp + at2b;
  mpz_class num_minus = bp - at2b;
  mpz_class twop = 2 * mpz_class(static_cast<unsigned long>(p));
  if (num_plus < 0 || num_minus < 0 || num_plus % twop != 0 ||
      num_minus % twop != 0)
    throw std::logic_error("two_squares: square data not integral");
  mpz_class x2 = num_plus / twop, y2 = num_minus / twop;
  if (!mpz_perfect_square_p(x2.get_mpz_t()) ||
      !mpz_perfect_square_p(y2.get_mpz_t()))
    throw std::logic_error("two_squares: square data not square");
  mpz_sqrt(out.x0.get_mpz_t(), x2.get_mpz_t());
  mpz_sqrt(out.y0.get_mpz_t(), y2.get_mpz_t());

  mpz_class bt2a = mpz_class(B) * t - 2 * A;
  if (bt2a < 0) out.y0 = -out.y0;
  if (twop * out.x0 * out.y0 != bt2a)
    throw std::logic_error("two_squares: product identity failed");
  return out;
}

SquarefreeDecomp squarefree_part(const mpz_class& a,
                                 std::uint64_t trial_bound) {
  if (a == 0) throw std::domain_error("squarefree_part: a must be nonzero");
  SquarefreeDecomp out;
  out.s = sgn(a);
  out.A = 1;
  mpz_class rest = abs(a);

  auto strip = [&](std::uint64_t d) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    for (unsigned long i = 0; i + 1 < e; i += 2) out.A *= d;
    if (e & 1) out.s *= d;
  };

  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= trial_bound && rest > 1; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      out.A *= r;
    } else if (mpz_perfect_power_p(rest.get_mpz_t())) {
      // rest = base^k for some k >= 3 with base free of small factors; find
      // the base by k-th roots.
      mpz_class base;
      unsigned long k = 0;
      for (unsigned long e = 3; e <= mpz_sizeinbase(rest.get_mpz_t(), 2); ++e) {
        if (mpz_root(base.get_mpz_t(), rest.get_mpz_t(), e) != 0) {
          k = e;
          break;
        }
      }
      if (k == 0 || !is_prime(base))
        throw unfactored_error("squarefree_part: cofactor not certified");
      for (unsigned long i = 0; i + 1 < k; i += 2) out.A *= base;
      if (k & 1) out.s *= base;
    } else if (is_prime(rest)) {
      out.s *= rest;
    } else {
      throw unfactored_error("squarefree_part: cofactor not certified");
    }
  }
  return out;
}

}  // namespace cycert
