#include "cycert/lucas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cycert/arith.hpp"

namespace cycert {

namespace {

// (F(k), F(k+1)) for k >= 0 by fast doubling:
//   F(2j)   = F(j) * (2 F(j+1) - t F(j))
//   F(2j+1) = F(j+1)^2 + F(j)^2
std::pair<mpz_class, mpz_class> fib_doubling(const mpz_class& t,
                                             unsigned long long k) {
  if (k == 0) return {mpz_class(0), mpz_class(1)};
  auto [f, g] = fib_doubling(t, k >> 1);  // (F(j), F(j+1))
  mpz_class f2 = f * (2 * g - t * f);
  mpz_class g2 = g * g + f * f;
  if (k & 1) return {g2, t * g2 + f2};
  return {f2, g2};
}

std::pair<std::uint64_t, std::uint64_t> fib_doubling_mod(std::uint64_t t,
                                                         unsigned long long k,
                                                         std::uint64_t m) {
  if (k == 0) return {0, 1 % m};
  auto [f, g] = fib_doubling_mod(t, k >> 1, m);
  std::uint64_t two_g = (2 * static_cast<unsigned __int128>(g)) % m;
  std::uint64_t tf = mulmod_u64(t, f, m);
  std::uint64_t diff = two_g >= tf ? two_g - tf : two_g + m - tf;
  std::uint64_t f2 = mulmod_u64(f, diff, m);
  std::uint64_t g2 = (mulmod_u64(g, g, m) + mulmod_u64(f, f, m)) % m;
  if (k & 1) return {g2, (mulmod_u64(t, g2, m) + f2) % m};
  return {f2, g2};
}

}  // namespace

LucasPair lucas_pair(const mpz_class& t, long long n) {
  LucasPair out;
  out.t = t;
  out.n = n;
  unsigned long long k =
      n >= 0 ? static_cast<unsigned long long>(n)
             : -static_cast<unsigned long long>(n);
  auto [f, g] = fib_doubling(t, k);
  out.F = f;
  out.L = 2 * g - t * f;
  if (n < 0) {
    if ((k & 1) == 0) out.F = -out.F;  // F(-n) = (-1)^(n+1) F(n)
    if (k & 1) out.L = -out.L;         // L(-n) = (-1)^n L(n)
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> lucas_pair_mod(const mpz_class& t,
                                                       long long n,
                                                       std::uint64_t m) {
  if (m < 2) throw std::domain_error("lucas_pair_mod: modulus must be >= 2");
  if (m >= (1ull << 63))
    throw std::domain_error("lucas_pair_mod: modulus too large");
  mpz_class tm = t % m;
  if (tm < 0) tm += m;
  std::uint64_t tu = tm.get_ui();
  unsigned long long k =
      n >= 0 ? static_cast<unsigned long long>(n)
             : -static_cast<unsigned long long>(n);
  auto [f, g] = fib_doubling_mod(tu, k, m);
  std::uint64_t two_g = (2 * static_cast<unsigned __int128>(g)) % m;
  std::uint64_t tf = mulmod_u64(tu, f, m);
  std::uint64_t l = two_g >= tf ? two_g - tf : two_g + m - tf;
  if (n < 0) {
    if ((k & 1) == 0) f = f == 0 ? 0 : m - f;
    if (k & 1) l = l == 0 ? 0 : m - l;
  }
  return {f, l};
}

namespace {

bool is_period(const mpz_class& t, std::uint64_t m, Seq which,
               std::uint64_t d) {
  auto [f0, l0] = lucas_pair_mod(t, 0, m);
  auto [f1, l1] = lucas_pair_mod(t, 1, m);
  auto [fd, ld] = lucas_pair_mod(t, static_cast<long long>(d), m);
  auto [fd1, ld1] = lucas_pair_mod(t, static_cast<long long>(d) + 1, m);
  if (which == Seq::F) return fd == f0 && fd1 == f1;
  return ld == l0 && ld1 == l1;
}

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> fac;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (rest % d == 0) {
      unsigned e = 0;
      while (rest % d == 0) {
        rest /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (rest > 1) fac.emplace_back(rest, 1);
  std::vector<std::uint64_t> divs{1};
  for (auto [pr, e] : fac) {
    std::size_t sz = divs.size();
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) {
      pe *= pr;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

constexpr std::uint64_t kScanCap = 10000000;

std::uint64_t period_by_scan(const mpz_class& t, std::uint64_t m, Seq which) {
  mpz_class tm = t % m;
  if (tm < 0) tm += m;
  std::uint64_t tu = tm.get_ui();
  std::uint64_t a0 = which == Seq::F ? 0 : 2 % m;
  std::uint64_t a1 = which == Seq::F ? 1 % m : tu;
  std::uint64_t x = a0, y = a1;
  for (std::uint64_t i = 1; i <= kScanCap; ++i) {
    std::uint64_t z = (mulmod_u64(tu, y, m) + x) % m;
    x = y;
    y = z;
    if (x == a0 && y == a1) return i;
  }
  throw std::runtime_error("period: linear scan exceeded 10^7 steps");
}

}  // namespace

PeriodResult period(const mpz_class& t, std::uint64_t m, Seq which) {
  if (m < 2) throw std::domain_error("period: modulus must be >= 2");
  if (m >= (1ull << 62)) throw std::domain_error("period: modulus too large");
  PeriodResult out;
  out.modulus = m;
  out.sequence = which;

  mpz_class disc = t * t + 4;  // discriminant of X^2 - tX - 1

  std::uint64_t bound = 0;
  std::uint64_t root = 0;
  {
    auto r = static_cast<std::uint64_t>(
        std::sqrt(static_cast<double>(m)));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    if (r * r == m) root = r;
  }
  if (root >= 2 && is_prime_u64(root) && disc % root == 0) {
    // modulus p^2 for the trace prime: F is p^2(p-1)-periodic, L is
    // p(p-1)-periodic.
    bound = which == Seq::F ? m * (root - 1) : root * (root - 1);
  } else if (m > 2 && (m & 1) && is_prime_u64(m) && disc % m != 0) {
    int chi = jacobi_symbol(disc, mpz_class(static_cast<unsigned long>(m)));
    if (chi == 1)
      bound = m - 1;
    else if (chi == -1)
      bound = 2 * (m + 1);
    else
      bound = lcm_u64(m - 1, 2 * (m + 1));
  }

  if (bound != 0 && is_period(t, m, which, bound)) {
    for (std::uint64_t d : sorted_divisors(bound)) {
      if (is_period(t, m, which, d)) {
        out.period = d;
        return out;
      }
    }
  }
  out.period = period_by_scan(t, m, which);
  return out;
}

LucasTable::LucasTable(const mpz_class& t, long long lo, long long hi)
    : lo_(lo) {
  if (lo > hi) throw std::domain_error("LucasTable: empty range");
  std::size_t size = static_cast<std::size_t>(hi - lo) + 1;
  f_.resize(size);
  l_.resize(size);
  // Fill from index 0/1 outwards, running the recurrence both ways.
  auto base = lucas_pair(t, lo);
  auto base1 = lucas_pair(t, lo + 1);
  f_[0] = base.F;
  l_[0] = base.L;
  if (size > 1) {
    f_[1] = base1.F;
    l_[1] = base1.L;
    for (std::size_t i = 2; i < size; ++i) {
      f_[i] = t * f_[i - 1] + f_[i - 2];
      l_[i] = t * l_[i - 1] + l_[i - 2];
    }
  }
}

const mpz_class& LucasTable::F(long long n) const {
  return f_.at(static_cast<std::size_t>(n - lo_));
}

const mpz_class& LucasTable::L(long long n) const {
  return l_.at(static_cast<std::size_t>(n - lo_));
}

IdentityReport identity_suite(const FundamentalUnit& u, long long n_min,
                              long long n_max, long long m_min,
                              long long m_max) {
  IdentityReport report;
  const mpz_class& t = u.t;
  mpz_class b2p = u.b * u.b * static_cast<unsigned long>(u.p);

  long long lo = std::min({2 * n_min - 1, n_min + m_min - 1, n_min - m_max - 1,
                           -n_max, -m_max, n_min - 1, m_min - 1, 0ll}) -
                 2;
  long long hi = std::max({2 * n_max + 1, n_max + m_max + 1, n_max - m_min + 1,
                           -n_min, -m_min, n_max + 1, m_max + 1, 1ll}) +
                 2;
  LucasTable tab(t, lo, hi);

  auto check = [&](bool ok, const char* name, long long n, long long m) {
    ++report.checks;
    if (!ok) report.violations.push_back({name, n, m});
  };

  for (long long n = n_min; n <= n_max; ++n) {
    int sign_n = (n & 1) ? -1 : 1;
    // norm relation: L(n)^2 - b^2 p F(n)^2 = (-1)^n * 4
    check(tab.L(n) * tab.L(n) - b2p * tab.F(n) * tab.F(n) == 4 * sign_n,
          "norm_relation", n, 0);
    // F(2n+1) = F(n+1)^2 + F(n)^2
    check(tab.F(2 * n + 1) == tab.F(n + 1) * tab.F(n + 1) + tab.F(n) * tab.F(n),
          "odd_index_split", n, 0);
    // b^2 p (F(n)^2 - F(n+1)^2) = -t L(2n+1) - 4 (-1)^n
    check(b2p * (tab.F(n) * tab.F(n) - tab.F(n + 1) * tab.F(n + 1)) ==
              -t * tab.L(2 * n + 1) - 4 * sign_n,
          "square_difference", n, 0);
    // b^2 p F(n) F(n+1) = L(2n+1) - (-1)^n t
    check(b2p * tab.F(n) * tab.F(n + 1) == tab.L(2 * n + 1) - sign_n * t,
          "product_form", n, 0);
    // sign laws
    check(tab.F(-n) == -sign_n * tab.F(n), "sign_law_F", n, 0);
    check(tab.L(-n) == sign_n * tab.L(n), "sign_law_L", n, 0);
    for (long long m = m_min; m <= m_max; ++m) {
      int sign_m = (m & 1) ? -1 : 1;
      // F(n+m) = F(n) F(m+1) + F(n-1) F(m)
      check(tab.F(n + m) ==
                tab.F(n) * tab.F(m + 1) + tab.F(n - 1) * tab.F(m),
            "addition", n, m);
      // L(n+m) - (-1)^m L(n-m) = b^2 p F(n) F(m)
      check(tab.L(n + m) - sign_m * tab.L(n - m) == b2p * tab.F(n) * tab.F(m),
            "companion_addition", n, m);
    }
  }
  return report;
}

bool valuation_law_check(const mpz_class& t, std::uint64_t p, unsigned nu,
                         long long n) {
  if (nu == 0) throw std::domain_error("valuation_law_check: nu must be >= 1");
  std::uint64_t pnu = 1;
  for (unsigned i = 0; i < nu; ++i) {
    if (pnu > (1ull << 62) / p)
      throw std::domain_error("valuation_law_check: p^nu too large");
    pnu *= p;
  }
  if (n % static_cast<long long>(pnu) != 0)
    throw std::domain_error("valuation_law_check: p^nu must divide n");
  return lucas_pair_mod(t, n, pnu).first == 0;
}

}  // namespace cycert
