#ifndef CYCERT_FAMILY_HPP
#define CYCERT_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cycert/ffield.hpp"
#include "cycert/realquad.hpp"

namespace cycert {

// Trace, norm and quartic data of alpha(m, n) =
// (L(n)L(m) + (L(m)F(n) - 2F(m)) * b * sqrt(p)) / 2, m and n odd.
struct AlphaParams {
  std::uint64_t p = 0;
  mpz_class t, b;
  long long m = 0, n = 0;
  mpz_class trace;                    // L(n) * L(m)
  mpz_class norm;                     // F(m) b^2 p (L(m)F(n) - 2F(m)) + 4
  std::array<mpz_class, 5> quartic;   // constant term first; palindromic
  bool nonrational = false;           // alpha in O_k \ Z
  bool shift_nonsquare = false;       // alpha^2 - 4 not an integer square
};

struct ConditionI {
  bool holds = false;
  std::uint64_t witness = 0;  // (L(m0)F(n0) - 2F(m0)) * b mod p^2
};

struct ConditionII {
  int ext_degree = 0;                // least i in {1,2,4} with a witness
  FieldElem root;                    // canonically least witnessing root
  std::vector<FieldElem> root_set;   // all roots at that level
};

struct Certificate {
  std::uint64_t p = 0;
  mpz_class t, b;
  std::uint64_t q = 0;
  long long m0 = 0, n0 = 0;
  std::uint64_t nq = 0;
  int ext_degree = 0;
  FieldElem root;
  std::vector<FieldElem> root_set;
  std::uint64_t condition_i_witness = 0;
  bool condition_i_ok = false;
  bool pth_power_check = false;  // witnessing root lies outside the p-th powers
  bool parity_check = false;     // m0 and n0 odd
};

struct CertifyResult {
  bool passed = false;
  std::string failed_check;  // "condition_i" or "condition_ii" when failed
  Certificate cert;
};

struct SearchHit {
  std::uint64_t q = 0;
  std::uint64_t nq = 0;
  std::uint64_t m_modulus = 0;  // residue-class modulus for m0
  std::uint64_t n_modulus = 0;  // residue-class modulus for n0
  std::uint64_t m0 = 0;         // least odd representatives
  std::uint64_t n0 = 0;
  bool has_split_witness = false;  // p does not divide b, tables well defined
  std::uint64_t witness_m = 0;     // 2 F(m0) / L(m0) mod p^2
  std::uint64_t witness_n = 0;     // F(n0) mod p^2
  CertifyResult cert;
};

struct SearchOptions {
  std::uint64_t scan_bound = 10000000;  // cap on the scan modulus lcm
};

enum class DiscKind { D, pD };

struct FieldPairLabel {
  int n_mod_4 = 0;
  DiscKind K = DiscKind::D;
  DiscKind Kprime = DiscKind::pD;
};

AlphaParams alpha_params(const FundamentalUnit& u, long long m, long long n);

// D(m,n) = L(m) (2F(m) - F(n)L(m)) b, the radicand of the quadratic layer.
mpz_class radicand(const mpz_class& t, const mpz_class& b, long long m,
                   long long n);

// N_q = lcm(p^2(p-1), q-1) or lcm(p^2(p-1), 2(q+1)) according to (p/q).
std::uint64_t family_modulus(const FundamentalUnit& u, std::uint64_t q);

ConditionI check_condition_i(const FundamentalUnit& u, long long m0,
                             long long n0);

// alpha^2 - 4 > 0 together with (norm+4)^2 - 4*trace^2 in p*Q^2, the
// latter decided exactly through the closed square form.
bool check_condition_A1(const FundamentalUnit& u, long long m, long long n);

std::optional<ConditionII> check_condition_ii(const FundamentalUnit& u,
                                              long long m0, long long n0,
                                              std::uint64_t q,
                                              const FieldTower& tower);

CertifyResult certify(std::uint64_t p, long long m0, long long n0,
                      std::uint64_t q);

// Scan odd residue pairs modulo the lcm of the mod-p^2 and mod-q periods,
// keep the pairs passing both conditions, and report them at the minimal
// per-coordinate even shift-invariant granularity.  Deterministic, sorted
// by (q, m0, n0).
std::vector<SearchHit> search(std::uint64_t p,
                              const std::vector<std::uint64_t>& q_candidates,
                              const SearchOptions& options = {});

// Reference-table slice of a complete hit list for one q.  The classes
// (m0, n0) and (m0, -n0) carry identical radicand families (F(-n) = F(n)
// for odd n), so the tables keep the n0 = 3 (mod 4) representative; among
// those, only the mod-q slice through the least (n0, m0) class is listed,
// so all rows share one reduced quartic family.
std::vector<SearchHit> table_slice(const FundamentalUnit& u,
                                   const std::vector<SearchHit>& hits,
                                   std::uint64_t q);

FieldPairLabel field_pair_label(long long n);

}  // namespace cycert

#endif
