#pragma once

#include <cstdint>
#include <vector>

#include "psg/bigint.hpp"
#include "psg/core.hpp"

namespace psg {

struct TwoVarInvariants {
  BigInt frobenius;
  BigInt genus;
  BigInt sylvester_sum;
};

/// g_p, n_p and s_p of S_p(a, b). Requires 1 <= a < b and gcd(a, b) = 1.
TwoVarInvariants two_var_invariants(std::int64_t a, std::int64_t b, PParameter p);

/// n in S_p(a, b) via the standard form n = a*x0 + b*y0, 0 <= y0 <= a - 1:
/// member iff x0 >= p*b (and x0 >= 0). Negative n is never a member.
bool two_var_membership(std::int64_t n, std::int64_t a, std::int64_t b, PParameter p);

/// Factoring d = gcd(a_2, ..., a_k) out of every generator but a_1.
struct GcdReduction {
  std::int64_t a1 = 0;
  std::int64_t d = 1;
  /// {a_1, a_2/d, ..., a_k/d}, sorted.
  GeneratorTuple reduced;
};

/// Picks the smallest a_1 in A coprime to the gcd of the remaining elements.
/// Throws DuplicateAfterReduction when some a_i / d equals a_1 (only
/// possible when A is not minimal).
GcdReduction gcd_reduce(const GeneratorTuple& gens);

struct LiftedInvariants {
  BigInt frobenius;
  BigInt genus;
  BigInt sylvester_sum;
};

/// Lifts g, n, s of the reduced alphabet back to A.
LiftedInvariants lift_invariants(const GcdReduction& red, const BigInt& reduced_frobenius,
                                 const BigInt& reduced_genus,
                                 const BigInt& reduced_sylvester_sum);

/// Enumerates S_p of the reduced alphabet and lifts.
LiftedInvariants lifted_invariants(const GcdReduction& red, PParameter p);

struct ArithInvariants {
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  std::int64_t ell0 = 0;
};

/// Elements of Ape_p(a, a+d, a+2d; a) from their (x2, x3) structure,
/// ascending. Requires a >= 3, d > 0, gcd(a, d) = 1, 0 <= p <= floor(a/2).
std::vector<std::int64_t> arith_apery_elements(std::int64_t a, std::int64_t d,
                                               PParameter p);

/// g_p, n_p and l_0(p) of S_p(a, a+d, a+2d) in closed form.
ArithInvariants arith_invariants(std::int64_t a, std::int64_t d, PParameter p);

/// True when the closed forms place S_p(a, a+d, a+2d) among the p-symmetric
/// semigroups: a even and p = a/2 - 1.
bool arith_predicts_symmetric(std::int64_t a, std::int64_t d, PParameter p);

}  // namespace psg
