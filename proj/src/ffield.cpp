#include "cycert/ffield.hpp"

#include <algorithm>
#include <stdexcept>

#include "cycert/arith.hpp"

namespace cycert {

bool elem_less(const FieldElem& a, const FieldElem& b) {
  if (a.level != b.level) return a.level < b.level;
  for (int i = 0; i < a.level; ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

namespace {

constexpr std::uint64_t kMaxQuarticModulus = 50000;  // q^4 must fit 64 bits

// ---- dense polynomials over F_q, ascending coefficients ----

using QPoly = std::vector<std::uint64_t>;

int qdeg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + mulmod_u64(a[i], b[j], q)) % q;
  qtrim(out);
  return out;
}

// a mod b; b must be nonzero.
QPoly qrem(QPoly a, const QPoly& b, std::uint64_t q) {
  qtrim(a);
  std::uint64_t lead_inv = powmod_u64(b.back(), q - 2, q);
  while (qdeg(a) >= qdeg(b)) {
    std::uint64_t c = mulmod_u64(a.back(), lead_inv, q);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = mulmod_u64(c, b[i], q);
      a[shift + i] = (a[shift + i] + q - sub) % q;
    }
    qtrim(a);
  }
  return a;
}

QPoly qmulmod(const QPoly& a, const QPoly& b, const QPoly& mod,
              std::uint64_t q) {
  return qrem(qmul(a, b, q), mod, q);
}

QPoly qpowmod(QPoly base, std::uint64_t e, const QPoly& mod, std::uint64_t q) {
  QPoly r{1};
  base = qrem(std::move(base), mod, q);
  while (e > 0) {
    if (e & 1) r = qmulmod(r, base, mod, q);
    base = qmulmod(base, base, mod, q);
    e >>= 1;
  }
  return r;
}

bool quadratic_irreducible(std::uint64_t c0, std::uint64_t c1,
                           std::uint64_t q) {
  // no roots <=> c1^2 - 4 c0 is a non-residue
  std::uint64_t disc = (mulmod_u64(c1, c1, q) + 4 * (q - c0 % q)) % q;
  if (disc == 0) return false;
  return powmod_u64(disc, (q - 1) / 2, q) == q - 1;
}

bool quartic_irreducible(const QPoly& f, std::uint64_t q) {
  // no factor of degree 1 or 2 <=> gcd(f, X^q - X) and gcd(f, X^{q^2} - X)
  // are both trivial; gcd via the reduced Frobenius powers.
  QPoly x{0, 1};
  QPoly xq = qpowmod(x, q, f, q);
  auto coprime_with_frob = [&](const QPoly& frob) {
    QPoly d = frob;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + q - 1) % q;
    qtrim(d);
    // gcd(f, frob - X)
    QPoly a = f, b = d;
    while (!b.empty()) {
      QPoly r = qrem(a, b, q);
      a = std::move(b);
      b = std::move(r);
    }
    return qdeg(a) == 0;
  };
  if (!coprime_with_frob(xq)) return false;
  QPoly xq2 = qpowmod(xq, q, f, q);
  return coprime_with_frob(xq2);
}

}  // namespace

// ---- tower construction ----

void FieldTower::check_level(int level) const {
  if (level != 1 && level != 2 && level != 4)
    throw std::domain_error("FieldTower: level must be 1, 2 or 4");
  if (level == 4 && !has_level4_)
    throw std::domain_error("FieldTower: quartic level unavailable for this q");
}

std::uint64_t FieldTower::card(int level) const {
  check_level(level);
  std::uint64_t c = q_;
  for (int i = 1; i < level; ++i) c *= q_;
  return c;
}

const std::array<std::uint64_t, 5>& FieldTower::quartic_poly() const {
  if (!has_level4_)
    throw std::domain_error("FieldTower: quartic level unavailable for this q");
  return g4_;
}

FieldElem FieldTower::zero(int level) const {
  check_level(level);
  return FieldElem{level, {0, 0, 0, 0}};
}

FieldElem FieldTower::one(int level) const {
  check_level(level);
  return FieldElem{level, {1 % q_, 0, 0, 0}};
}

FieldElem FieldTower::from_residue(std::uint64_t a, int level) const {
  check_level(level);
  return FieldElem{level, {a % q_, 0, 0, 0}};
}

FieldElem FieldTower::element(std::uint64_t k, int level) const {
  check_level(level);
  FieldElem e = zero(level);
  // canonical index: constant term is the most significant digit
  for (int i = level - 1; i >= 0; --i) {
    e.c[i] = k % q_;
    k /= q_;
  }
  return e;
}

bool FieldTower::is_zero(const FieldElem& a) const {
  for (int i = 0; i < a.level; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

FieldElem FieldTower::add(const FieldElem& a, const FieldElem& b) const {
  if (a.level != b.level) throw std::domain_error("FieldTower: level mismatch");
  FieldElem out = a;
  for (int i = 0; i < a.level; ++i) out.c[i] = (a.c[i] + b.c[i]) % q_;
  return out;
}

FieldElem FieldTower::sub(const FieldElem& a, const FieldElem& b) const {
  if (a.level != b.level) throw std::domain_error("FieldTower: level mismatch");
  FieldElem out = a;
  for (int i = 0; i < a.level; ++i) out.c[i] = (a.c[i] + q_ - b.c[i]) % q_;
  return out;
}

FieldElem FieldTower::neg(const FieldElem& a) const {
  FieldElem out = a;
  for (int i = 0; i < a.level; ++i) out.c[i] = a.c[i] == 0 ? 0 : q_ - a.c[i];
  return out;
}

FieldElem FieldTower::mul(const FieldElem& a, const FieldElem& b) const {
  if (a.level != b.level) throw std::domain_error("FieldTower: level mismatch");
  FieldElem out = zero(a.level);
  switch (a.level) {
    case 1:
      out.c[0] = mulmod_u64(a.c[0], b.c[0], q_);
      return out;
    case 2: {
      std::uint64_t t0 = mulmod_u64(a.c[0], b.c[0], q_);
      std::uint64_t t1 = (mulmod_u64(a.c[0], b.c[1], q_) +
                          mulmod_u64(a.c[1], b.c[0], q_)) %
                         q_;
      std::uint64_t t2 = mulmod_u64(a.c[1], b.c[1], q_);
      // x^2 = -g2[1] x - g2[0]
      out.c[0] = (t0 + mulmod_u64(t2, q_ - g2_[0] % q_, q_)) % q_;
      out.c[1] = (t1 + mulmod_u64(t2, q_ - g2_[1] % q_, q_)) % q_;
      return out;
    }
    case 4: {
      std::uint64_t t[7] = {0, 0, 0, 0, 0, 0, 0};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          t[i + j] = (t[i + j] + mulmod_u64(a.c[i], b.c[j], q_)) % q_;
      // reduce degrees 6..4 by y^4 = -(g4[3] y^3 + ... + g4[0])
      for (int d = 6; d >= 4; --d) {
        std::uint64_t c = t[d];
        if (c == 0) continue;
        t[d] = 0;
        for (int i = 0; i < 4; ++i) {
          std::uint64_t sub = mulmod_u64(c, g4_[i], q_);
          t[d - 4 + i] = (t[d - 4 + i] + q_ - sub % q_) % q_;
        }
      }
      for (int i = 0; i < 4; ++i) out.c[i] = t[i];
      return out;
    }
    default:
      throw std::domain_error("FieldTower: bad level");
  }
}

FieldElem FieldTower::pow(const FieldElem& a, std::uint64_t e) const {
  FieldElem r = one(a.level);
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElem FieldTower::inv(const FieldElem& a) const {
  if (is_zero(a)) throw std::domain_error("FieldTower: inverse of zero");
  return pow(a, card(a.level) - 2);
}

FieldElem FieldTower::embed(const FieldElem& a, int level) const {
  check_level(a.level);
  check_level(level);
  if (a.level == level) return a;
  if (a.level == 1) {
    FieldElem out = zero(level);
    out.c[0] = a.c[0];
    return out;
  }
  if (a.level == 2 && level == 4) {
    FieldElem out = from_residue(a.c[0], 4);
    return add(out, mul(from_residue(a.c[1], 4), quad_gen_image_));
  }
  throw std::domain_error("FieldTower: cannot embed downwards");
}

// ---- polynomials over a tower level ----

namespace {

using FPoly = std::vector<FieldElem>;

void ftrim(const FieldTower& T, FPoly& f) {
  while (!f.empty() && T.is_zero(f.back())) f.pop_back();
}

int fdeg(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

FPoly fmul(const FieldTower& T, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  int level = a[0].level;
  FPoly out(a.size() + b.size() - 1, T.zero(level));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = T.add(out[i + j], T.mul(a[i], b[j]));
  ftrim(T, out);
  return out;
}

std::pair<FPoly, FPoly> fdivmod(const FieldTower& T, FPoly a, const FPoly& b) {
  int level = b.at(0).level;
  FieldElem lead_inv = T.inv(b.back());
  ftrim(T, a);
  FPoly quot(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0,
             T.zero(level));
  while (fdeg(a) >= fdeg(b)) {
    FieldElem c = T.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = T.sub(a[shift + i], T.mul(c, b[i]));
    ftrim(T, a);
  }
  ftrim(T, quot);
  return {quot, a};
}

FPoly frem(const FieldTower& T, FPoly a, const FPoly& b) {
  return fdivmod(T, std::move(a), b).second;
}

FPoly fmonic(const FieldTower& T, FPoly f) {
  ftrim(T, f);
  if (f.empty()) return f;
  FieldElem inv = T.inv(f.back());
  for (auto& c : f) c = T.mul(c, inv);
  return f;
}

FPoly fgcd(const FieldTower& T, FPoly a, FPoly b) {
  ftrim(T, a);
  ftrim(T, b);
  while (!b.empty()) {
    FPoly r = frem(T, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(T, std::move(a));
}

FPoly fpowmod(const FieldTower& T, FPoly base, std::uint64_t e,
              const FPoly& mod) {
  int level = mod.at(0).level;
  FPoly r{T.one(level)};
  base = frem(T, std::move(base), mod);
  while (e > 0) {
    if (e & 1) r = frem(T, fmul(T, r, base), mod);
    base = frem(T, fmul(T, base, base), mod);
    e >>= 1;
  }
  return r;
}

FieldElem feval(const FieldTower& T, const FPoly& f, const FieldElem& x) {
  FieldElem acc = T.zero(x.level);
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = T.add(T.mul(acc, x), *it);
  return acc;
}

FPoly fderiv(const FieldTower& T, const FPoly& f) {
  if (f.size() <= 1) return {};
  int level = f[0].level;
  FPoly out;
  out.reserve(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    FieldElem k = T.from_residue(i % T.q(), level);
    out.push_back(T.mul(k, f[i]));
  }
  ftrim(T, out);
  return out;
}

// Split a monic product of distinct linear factors into its roots.
void split_linears(const FieldTower& T, const FPoly& R, int level,
                   std::vector<FieldElem>& roots) {
  if (fdeg(R) <= 0) return;
  if (fdeg(R) == 1) {
    roots.push_back(T.neg(R[0]));
    return;
  }
  std::uint64_t card = T.card(level);
  for (std::uint64_t k = 0; k < card; ++k) {
    FieldElem c = T.element(k, level);
    FPoly shifted{c, T.one(level)};  // Y + c
    FPoly w = fpowmod(T, shifted, (card - 1) / 2, R);
    if (w.empty()) w.push_back(T.zero(level));
    w[0] = T.sub(w[0], T.one(level));
    FPoly g = fgcd(T, w, R);
    if (fdeg(g) > 0 && fdeg(g) < fdeg(R)) {
      FPoly other = fdivmod(T, R, g).first;
      split_linears(T, g, level, roots);
      split_linears(T, other, level, roots);
      return;
    }
  }
  throw std::logic_error("split_linears: no separating shift found");
}

// All distinct roots of f (any multiplicities) in F_{q^level}.
std::vector<FieldElem> poly_roots(const FieldTower& T, const FPoly& f,
                                  int level) {
  std::vector<FieldElem> roots;
  FPoly g = f;
  ftrim(T, g);
  if (g.empty()) throw std::domain_error("poly_roots: zero polynomial");
  std::uint64_t card = T.card(level);
  if (card < 10000) {
    for (std::uint64_t k = 0; k < card; ++k) {
      FieldElem x = T.element(k, level);
      if (T.is_zero(feval(T, g, x))) roots.push_back(x);
    }
    return roots;
  }
  FPoly d = fderiv(T, g);
  FPoly sf = d.empty() ? fmonic(T, g) : fdivmod(T, g, fgcd(T, g, d)).first;
  sf = fmonic(T, std::move(sf));
  FPoly y{T.zero(level), T.one(level)};
  FPoly frob = fpowmod(T, y, card, sf);
  // frob - Y
  if (frob.size() < 2) frob.resize(2, T.zero(level));
  frob[1] = T.sub(frob[1], T.one(level));
  FPoly R = fgcd(T, frob, sf);
  split_linears(T, R, level, roots);
  return roots;
}

FPoly embed_poly(const FieldTower& T, const QPoly& f, int level) {
  FPoly out;
  out.reserve(f.size());
  for (std::uint64_t c : f) out.push_back(T.from_residue(c, level));
  ftrim(T, out);
  return out;
}

}  // namespace

FieldTower::FieldTower(std::uint64_t q) : q_(q) {
  if (q < 3 || (q & 1) == 0 || !is_prime_u64(q))
    throw std::domain_error("FieldTower: q must be an odd prime");

  // lexicographically least monic irreducible quadratic; a vanishing
  // constant term always gives the root 0, so c0 starts at 1
  bool found = false;
  for (std::uint64_t c0 = 1; c0 < q && !found; ++c0)
    for (std::uint64_t c1 = 0; c1 < q && !found; ++c1)
      if (quadratic_irreducible(c0, c1, q)) {
        g2_ = {c0, c1, 1};
        found = true;
      }
  if (!found) throw std::logic_error("FieldTower: no irreducible quadratic");

  has_level4_ = q <= kMaxQuarticModulus;
  if (!has_level4_) return;

  found = false;
  for (std::uint64_t c0 = 1; c0 < q && !found; ++c0)
    for (std::uint64_t c1 = 0; c1 < q && !found; ++c1)
      for (std::uint64_t c2 = 0; c2 < q && !found; ++c2)
        for (std::uint64_t c3 = 0; c3 < q && !found; ++c3) {
          QPoly f{c0, c1, c2, c3, 1};
          if (quartic_irreducible(f, q)) {
            g4_ = {c0, c1, c2, c3, 1};
            found = true;
          }
        }
  if (!found) throw std::logic_error("FieldTower: no irreducible quartic");

  // image of the degree-2 generator inside the quartic level: the least
  // root of g2 there, verified by re-evaluation
  QPoly g2{g2_[0], g2_[1], 1};
  FPoly g2_at_4 = embed_poly(*this, g2, 4);
  std::vector<FieldElem> roots = poly_roots(*this, g2_at_4, 4);
  if (roots.size() != 2)
    throw std::logic_error("FieldTower: quadratic has wrong root count");
  std::sort(roots.begin(), roots.end(), elem_less);
  quad_gen_image_ = roots[0];
  if (!is_zero(feval(*this, g2_at_4, quad_gen_image_)))
    throw std::logic_error("FieldTower: embedding failed verification");
}

FieldTower make_tower(std::uint64_t q) { return FieldTower(q); }

std::vector<FieldElem> quartic_roots(const std::array<mpz_class, 5>& coeffs,
                                     const FieldTower& tower, int level) {
  std::uint64_t q = tower.q();
  QPoly f(5);
  bool all_zero = true;
  for (int i = 0; i < 5; ++i) {
    mpz_class r = coeffs[i] % q;
    if (r < 0) r += q;
    f[i] = r.get_ui();
    if (f[i] != 0) all_zero = false;
  }
  if (all_zero)
    throw std::invalid_argument("quartic_roots: polynomial vanishes mod q");
  if (f[4] == 0)
    throw std::domain_error("quartic_roots: leading coefficient vanishes mod q");
  if (level != 1 && level != 2 && level != 4)
    throw std::domain_error("quartic_roots: level must be 1, 2 or 4");

  // distinct roots in F_q, then the remaining factor of the square-free part
  FPoly f1 = embed_poly(tower, f, 1);
  FPoly d = fderiv(tower, f1);
  FPoly sf = d.empty() ? fmonic(tower, f1)
                       : fdivmod(tower, f1, fgcd(tower, f1, d)).first;
  sf = fmonic(tower, std::move(sf));

  std::vector<FieldElem> base_roots = poly_roots(tower, sf, 1);
  std::sort(base_roots.begin(), base_roots.end(), elem_less);
  if (level == 1) return base_roots;

  FPoly rest = sf;
  for (const FieldElem& r : base_roots) {
    FPoly lin{tower.neg(r), tower.one(1)};
    rest = fdivmod(tower, rest, lin).first;
  }

  std::vector<FieldElem> out;
  for (const FieldElem& r : base_roots) out.push_back(tower.embed(r, level));

  auto add_level2_roots = [&](const FPoly& h_q) {
    FPoly h2;
    for (const FieldElem& c : h_q) h2.push_back(tower.embed(c, 2));
    for (const FieldElem& r : poly_roots(tower, h2, 2))
      out.push_back(tower.embed(r, level));
  };

  switch (fdeg(rest)) {
    case 0:
    case 3:  // an irreducible cubic has no roots at levels 2 or 4
      break;
    case 2:
      add_level2_roots(rest);
      break;
    case 4: {
      // either two irreducible quadratics or one irreducible quartic
      QPoly rq;
      for (const FieldElem& c : rest) rq.push_back(c.c[0]);
      QPoly x{0, 1};
      QPoly xq = qpowmod(x, q, rq, q);
      QPoly xq2 = qpowmod(xq, q, rq, q);
      if (xq2.size() < 2) xq2.resize(2, 0);
      xq2[1] = (xq2[1] + q - 1) % q;
      qtrim(xq2);
      QPoly a = rq, b = xq2;
      while (!b.empty()) {
        QPoly r = qrem(a, b, q);
        a = std::move(b);
        b = std::move(r);
      }
      if (qdeg(a) > 0) {
        add_level2_roots(rest);  // splits over the quadratic extension
      } else if (level == 4) {
        FPoly h4;
        for (const FieldElem& c : rest) h4.push_back(tower.embed(c, 4));
        for (const FieldElem& r : poly_roots(tower, h4, 4)) out.push_back(r);
      }
      break;
    }
    default:
      break;
  }
  std::sort(out.begin(), out.end(), elem_less);
  return out;
}

bool is_pth_power(const FieldElem& a, std::uint64_t p,
                  const FieldTower& tower) {
  if (tower.is_zero(a)) throw std::domain_error("is_pth_power: a must be nonzero");
  std::uint64_t n = tower.card(a.level) - 1;
  if (n % p != 0) return true;
  return tower.pow(a, n / p) == tower.one(a.level);
}

std::vector<std::uint64_t> pth_power_subgroup(std::uint64_t q,
                                              std::uint64_t p) {
  if (q < 2 || !is_prime_u64(q))
    throw std::domain_error("pth_power_subgroup: q must be prime");
  std::vector<std::uint64_t> out;
  if ((q - 1) % p != 0) {
    out.reserve(q - 1);
    for (std::uint64_t x = 1; x < q; ++x) out.push_back(x);
    return out;
  }
  std::vector<bool> seen(q, false);
  for (std::uint64_t x = 1; x < q; ++x) {
    std::uint64_t y = powmod_u64(x, p, q);
    if (!seen[y]) {
      seen[y] = true;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t primitive_root(std::uint64_t q) {
  if (q < 3 || !is_prime_u64(q))
    throw std::domain_error("primitive_root: q must be an odd prime");
  auto factors = prime_factors_u64(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t f : factors)
      if (powmod_u64(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: not found");
}

FieldElem generator(const FieldTower& tower, int level) {
  if (level != 1 && level != 2)
    throw std::domain_error("generator: level must be 1 or 2");
  if (level == 1)
    return tower.from_residue(primitive_root(tower.q()), 1);
  std::uint64_t n = tower.card(2) - 1;
  auto factors = prime_factors_u64(n);
  for (std::uint64_t k = 1; k < n + 1; ++k) {
    FieldElem e = tower.element(k, 2);
    if (tower.is_zero(e)) continue;
    bool ok = true;
    for (std::uint64_t f : factors)
      if (tower.pow(e, n / f) == tower.one(2)) {
        ok = false;
        break;
      }
    if (ok) return e;
  }
  throw std::logic_error("generator: not found");
}

}  // namespace cycert
