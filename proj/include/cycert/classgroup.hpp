#ifndef CYCERT_CLASSGROUP_HPP
#define CYCERT_CLASSGROUP_HPP

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "cycert/realquad.hpp"

namespace cycert {

// Imaginary quadratic field Q(sqrt(D)) described by its fundamental
// discriminant; class_number is filled in when it has been computed.
struct ImagQuadField {
  mpz_class D_input;
  mpz_class fundamental_discriminant;
  std::optional<std::uint64_t> class_number;
};

// Fundamental discriminant of Q(sqrt(D)), D < 0: s(D) when s(D) = 1 mod 4,
// else 4 s(D).  May throw unfactored_error via squarefree_part.
ImagQuadField imag_quad_field(const mpz_class& D);

// Number of reduced binary quadratic forms (a, b, c) of the given
// fundamental discriminant: b^2 - 4ac = disc, |b| <= a <= c, b >= 0 when
// |b| = a or a = c.  Requires disc < 0 fundamental, |disc| <= 10^9.
std::uint64_t class_number(const mpz_class& disc);

enum class Divisibility { divisible, not_divisible, infeasible };

// Divisibility by p of the class numbers of the two quadratic layers
// Q(sqrt(D(m,n))) and Q(sqrt(p D(m,n))), when their discriminants fit the
// budget.  This probes the degree-2 subfields only: their class numbers
// need not inherit the divisibility the degree-(p-1)/2 construction
// certifies, so the probe is a diagnostic, not a theorem check.
struct ProbeResult {
  mpz_class radicand_value;
  Divisibility field_D = Divisibility::infeasible;
  Divisibility field_pD = Divisibility::infeasible;
  std::optional<ImagQuadField> K_D;
  std::optional<ImagQuadField> K_pD;
};

ProbeResult divisibility_probe(const FundamentalUnit& u, long long m,
                               long long n, const mpz_class& budget);

}  // namespace cycert

#endif
