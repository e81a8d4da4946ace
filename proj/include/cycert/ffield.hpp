#ifndef CYCERT_FFIELD_HPP
#define CYCERT_FFIELD_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cycert {

// Element of F_q, F_{q^2} or F_{q^4} under a fixed tower; coefficient
// vector over F_q, constant term first, entries reduced mod q.
struct FieldElem {
  int level = 1;  // 1, 2 or 4
  std::array<std::uint64_t, 4> c{0, 0, 0, 0};

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// Canonical order: level, then coefficients compared lexicographically
// with the constant term most significant.
bool elem_less(const FieldElem& a, const FieldElem& b);

// Deterministic tower over F_q: the lexicographically least monic
// irreducibles of degree 2 and 4 (coefficient order as above), plus a
// verified embedding of the degree-2 generator into F_{q^4}.
//
// Level-4 structure is available for q <= 50000 (q^4 must fit in 64 bits);
// larger q keep levels 1 and 2 only.
class FieldTower {
 public:
  explicit FieldTower(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  bool has_quartic_level() const { return has_level4_; }

  // Monic defining polynomials, constant term first, leading 1 included.
  const std::array<std::uint64_t, 3>& quad_poly() const { return g2_; }
  const std::array<std::uint64_t, 5>& quartic_poly() const;

  std::uint64_t card(int level) const;  // q^level

  FieldElem zero(int level) const;
  FieldElem one(int level) const;
  FieldElem from_residue(std::uint64_t a, int level) const;
  // Element with canonical index k in [0, card(level)); ascending k follows
  // the canonical element order.
  FieldElem element(std::uint64_t k, int level) const;

  // Embed a into the given (equal or higher) tower level.
  FieldElem embed(const FieldElem& a, int level) const;

  bool is_zero(const FieldElem& a) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;
  FieldElem inv(const FieldElem& a) const;

 private:
  std::uint64_t q_ = 0;
  bool has_level4_ = false;
  std::array<std::uint64_t, 3> g2_{};
  std::array<std::uint64_t, 5> g4_{};
  FieldElem quad_gen_image_;  // root of g2 inside level 4

  void check_level(int level) const;
};

FieldTower make_tower(std::uint64_t q);

// All distinct roots in F_{q^level} of the quartic with the given integer
// coefficients (constant term first), canonically ordered.  The leading
// coefficient must be nonzero mod q; a polynomial that vanishes mod q is
// rejected as degenerate.
std::vector<FieldElem> quartic_roots(const std::array<mpz_class, 5>& coeffs,
                                     const FieldTower& tower, int level);

// a in (F_{q^i}^x)^p, decided by a^((q^i-1)/p) when p | q^i - 1 and
// trivially true otherwise.  a must be nonzero.
bool is_pth_power(const FieldElem& a, std::uint64_t p, const FieldTower& tower);

// The subgroup of p-th powers in F_q^x, sorted.
std::vector<std::uint64_t> pth_power_subgroup(std::uint64_t q, std::uint64_t p);

// Canonically least multiplicative generator of F_{q^level}^x, level in {1,2}.
FieldElem generator(const FieldTower& tower, int level);

// Least primitive root modulo an odd prime q.
std::uint64_t primitive_root(std::uint64_t q);

// Prime factors of n (without multiplicity), by trial division.
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

}  // namespace cycert

#endif
