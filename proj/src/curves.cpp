#include "cycert/curves.hpp"

#include <stdexcept>
#include <vector>

#include "cycert/arith.hpp"

namespace cycert {

namespace {

constexpr std::uint64_t kEnumBudget = 100000;

void check_budget(std::uint64_t q, int r) {
  if (r != 1 && r != 2) throw std::domain_error("curves: r must be 1 or 2");
  unsigned __int128 card = q;
  if (r == 2) card *= q;
  if (card > kEnumBudget)
    throw std::runtime_error("curves: q^r exceeds the enumeration budget");
}

std::uint64_t encode(const FieldTower& T, const FieldElem& a) {
  std::uint64_t idx = 0;
  for (int i = a.level - 1; i >= 0; --i) idx = idx * T.q() + a.c[i];
  return idx;
}

// number of solutions of Z^2 = w for each w, via one pass over Z
std::vector<std::uint16_t> square_counts(const FieldTower& T, int r) {
  std::uint64_t card = T.card(r);
  std::vector<std::uint16_t> cnt(card, 0);
  for (std::uint64_t k = 0; k < card; ++k) {
    FieldElem z = T.element(k, r);
    ++cnt[encode(T, T.mul(z, z))];
  }
  return cnt;
}

CurveCount count_one(const FieldTower& T, int r, const FieldElem& g,
                     const FieldElem& k,
                     const std::vector<std::uint16_t>& sq) {
  std::uint64_t card = T.card(r);
  FieldElem two = T.from_residue(2, r);
  FieldElem minus_two = T.neg(two);
  bool special = k == two || k == minus_two;

  CurveCount out;
  out.q = T.q();
  out.r = r;
  out.k = k;

  FieldElem g2 = T.mul(g, g);
  FieldElem g3 = T.mul(g2, g);
  FieldElem g4 = T.mul(g3, g);
  FieldElem g5 = T.mul(g4, g);

  std::uint64_t points = 0;
  bool nonzero_square_hit = false;  // some X != 0 with RHS a nonzero square
  for (std::uint64_t i = 0; i < card; ++i) {
    FieldElem x = T.element(i, r);
    FieldElem x2 = T.mul(x, x);
    FieldElem rhs;
    if (special) {
      // Z^2 = g^3 X^4 - g
      rhs = T.sub(T.mul(g3, T.mul(x2, x2)), g);
    } else {
      // Z^2 = g^5 X^8 + g^4 k X^6 - g^2 k X^2 - g, Horner in X^2
      FieldElem acc = g5;
      acc = T.add(T.mul(acc, x2), T.mul(g4, k));
      acc = T.mul(acc, x2);                          // degree-2 term is zero
      acc = T.sub(T.mul(acc, x2), T.mul(g2, k));
      acc = T.sub(T.mul(acc, x2), g);
      rhs = acc;
    }
    std::uint16_t nsol = sq[encode(T, rhs)];
    points += nsol;
    if (!T.is_zero(x) && !T.is_zero(rhs) && nsol > 0) nonzero_square_hit = true;
  }
  out.affine_points = points;

  if (k == two && T.card(r) % 4 == 3) {
    // the curve model does not apply; the value set is hit directly at
    // X0 = g^((q^r-3)/4), where g X0^2 + 1 = 0
    FieldElem x0 = T.pow(g, (card - 3) / 4);
    FieldElem probe = T.add(T.mul(g, T.mul(x0, x0)), T.one(r));
    if (!T.is_zero(probe))
      throw std::logic_error("curve_count: special point failed verification");
    out.s_k_nonempty = true;
  } else {
    out.s_k_nonempty = nonzero_square_hit;
  }
  return out;
}

}  // namespace

bool y_set_is_full_with(const FieldTower& tower, int r, const FieldElem& g) {
  std::uint64_t card = tower.card(r);
  std::uint64_t n = card - 1;  // group order, even for odd q

  // powers of g over one full period
  std::vector<FieldElem> pw(n);
  pw[0] = tower.one(r);
  for (std::uint64_t i = 1; i < n; ++i) pw[i] = tower.mul(pw[i - 1], g);

  std::vector<bool> seen(card, false);
  std::uint64_t found = 0;
  for (std::uint64_t m = 1; m < n && found < card; m += 2) {
    FieldElem gm = pw[m];
    FieldElem gmi = pw[n - m];
    FieldElem d = tower.sub(gm, gmi);
    FieldElem s = tower.add(gm, gmi);
    for (std::uint64_t e = 1; e < n && found < card; e += 2) {
      FieldElem val = tower.sub(tower.mul(d, pw[e]), s);
      std::uint64_t idx = encode(tower, val);
      if (!seen[idx]) {
        seen[idx] = true;
        ++found;
      }
    }
  }
  return found == card;
}

bool y_set_is_full(std::uint64_t q, int r) {
  check_budget(q, r);
  FieldTower tower(q);
  return y_set_is_full_with(tower, r, generator(tower, r));
}

CurveCount curve_count(std::uint64_t q, int r, const FieldElem& k) {
  check_budget(q, r);
  FieldTower tower(q);
  return count_one(tower, r, generator(tower, r), tower.embed(k, r),
                   square_counts(tower, r));
}

std::vector<CurveCount> curve_sweep(std::uint64_t q, int r) {
  check_budget(q, r);
  FieldTower tower(q);
  FieldElem g = generator(tower, r);
  auto sq = square_counts(tower, r);
  std::uint64_t card = tower.card(r);
  std::vector<CurveCount> out;
  out.reserve(card);
  if (r != 1) {
    for (std::uint64_t i = 0; i < card; ++i)
      out.push_back(count_one(tower, r, g, tower.element(i, r), sq));
    return out;
  }

  // prime-field fast path: for fixed X the right side is linear in k,
  //   w(k) = (g^5 X^8 - g) + (g^4 X^6 - g^2 X^2) k,
  // so the k-loop advances by a constant step with no multiplications
  std::uint64_t gv = g.c[0];
  std::uint64_t g2 = mulmod_u64(gv, gv, q);
  std::uint64_t g4 = mulmod_u64(g2, g2, q);
  std::uint64_t g5 = mulmod_u64(g4, gv, q);
  std::vector<std::uint64_t> counts(q, 0);
  std::vector<char> hit(q, 0);
  for (std::uint64_t x = 0; x < q; ++x) {
    std::uint64_t x2 = mulmod_u64(x, x, q);
    std::uint64_t x4 = mulmod_u64(x2, x2, q);
    std::uint64_t x6 = mulmod_u64(x4, x2, q);
    std::uint64_t x8 = mulmod_u64(x4, x4, q);
    std::uint64_t base = (mulmod_u64(g5, x8, q) + q - gv) % q;
    std::uint64_t step =
        (mulmod_u64(g4, x6, q) + q - mulmod_u64(g2, x2, q)) % q;
    std::uint64_t w = base;
    for (std::uint64_t k = 0; k < q; ++k) {
      std::uint16_t ns = sq[w];
      counts[k] += ns;
      if (x != 0 && w != 0 && ns > 0) hit[k] = 1;
      w += step;
      if (w >= q) w -= q;
    }
  }
  for (std::uint64_t k = 0; k < q; ++k) {
    CurveCount c;
    c.q = q;
    c.r = 1;
    c.k = tower.from_residue(k, 1);
    c.affine_points = counts[k];
    c.s_k_nonempty = hit[k] != 0;
    out.push_back(c);
  }
  // k = +-2 run on the genus-1 model instead
  out[2 % q] = count_one(tower, 1, g, tower.from_residue(2, 1), sq);
  out[(q - 2) % q] = count_one(tower, 1, g, tower.from_residue(q - 2, 1), sq);
  return out;
}

}  // namespace cycert
