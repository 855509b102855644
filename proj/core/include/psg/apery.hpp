#pragma once

#include <cstdint>
#include <vector>

#include "psg/bigint.hpp"
#include "psg/enumeration.hpp"

namespace psg {

/// p-Apery set of S_p(A) with respect to a generator a.
struct AperySet {
  std::int64_t modulus = 0;
  /// min(A); the Apery-derived invariants require modulus == min_generator.
  std::int64_t min_generator = 0;
  /// by_residue[j] is the least member of S_p congruent to j mod `modulus`.
  std::vector<std::int64_t> by_residue;
  /// by_residue sorted ascending: l_0(p) < l_1(p) < ...
  std::vector<std::int64_t> sorted;

  /// m_j for any integer j, indices taken mod `modulus`.
  [[nodiscard]] std::int64_t at_residue(std::int64_t j) const;
};

/// Throws ValidationError(ModulusNotGenerator) when a is not in A.
AperySet apery_set(const PSemigroup& s, std::int64_t a);
inline AperySet apery_set(const PSemigroup& s) {
  return apery_set(s, s.generators().min());
}

std::int64_t frobenius_from_apery(const AperySet& ap);
std::int64_t genus_from_apery(const AperySet& ap);
BigInt sylvester_sum_from_apery(const AperySet& ap);

/// Sum of n^mu over G_p(A) from the Apery set and Bernoulli numbers, mu >= 1.
BigInt power_sum(const AperySet& ap, int mu);
BigInt power_sum(const PSemigroup& s, int mu);

/// Exact B_n with B_1 = -1/2, from a process-wide lazily extended cache.
BigRational bernoulli(int n);

}  // namespace psg
