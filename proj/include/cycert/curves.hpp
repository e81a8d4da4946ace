#ifndef CYCERT_CURVES_HPP
#define CYCERT_CURVES_HPP

#include <cstdint>
#include <vector>

#include "cycert/ffield.hpp"

namespace cycert {

// Exact affine point count of the curve attached to k over F_{q^r}:
//   Z^2 = g^5 X^8 + g^4 k X^6 - g^2 k X^2 - g      (k != +-2, genus 3)
//   Z^2 = g^3 X^4 - g                              (k  = +-2, genus 1)
// for the canonical generator g.  s_k_nonempty records whether the value
// set equation (g^m - g^-m) g^n - (g^m + g^-m) = k has a solution in odd
// m, n, decided through the curve points with XZ != 0 (or directly for
// k = 2 when q^r = 3 mod 4, where the curve model does not apply).
struct CurveCount {
  std::uint64_t q = 0;
  int r = 1;
  FieldElem k;
  std::uint64_t affine_points = 0;
  bool s_k_nonempty = false;
};

// True iff every element of F_{q^r} is of the form
// (g^m - g^-m) g^n - (g^m + g^-m) with m, n odd.  Enumeration budget
// q^r <= 10^5; r in {1, 2}.
bool y_set_is_full(std::uint64_t q, int r);

// Same scan with an explicit generator (for independence checks).
bool y_set_is_full_with(const FieldTower& tower, int r, const FieldElem& g);

CurveCount curve_count(std::uint64_t q, int r, const FieldElem& k);

// Point counts for every k in F_{q^r}, sharing one square table.
std::vector<CurveCount> curve_sweep(std::uint64_t q, int r);

}  // namespace cycert

#endif
