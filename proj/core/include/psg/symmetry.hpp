#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psg/enumeration.hpp"

namespace psg {

/// Status of (g_p + l_0) / 2.
struct Midpoint {
  bool integral = false;
  std::int64_t value = 0;      // meaningful only when integral
  bool in_semigroup = false;   // meaningful only when integral
};

/// Combinatorial chain lengths standing in for the module lengths of the
/// semigroup ring: d3 = |S_p n [1, g_p + l_0]|, d1 = d3 + 1,
/// d2 = l_0 + g_p + 1.
struct ValuationLengths {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t d3 = 0;
  friend bool operator==(const ValuationLengths&, const ValuationLengths&) = default;
};

struct ClassificationReport {
  bool is_symmetric = false;
  bool is_pseudo_symmetric = false;
  bool is_completely_symmetric = false;
  bool is_irreducible = false;
  std::vector<std::int64_t> pf;
  std::int64_t type_number = 0;
  Midpoint midpoint;
  /// Absent when p = 0.
  std::optional<ValuationLengths> valuation;
};

/// x notin S_p  <=>  l_0 + g_p - x in S_p, for all integers x. Also evaluates
/// the genus count test and the sorted Apery pairing and throws
/// ConsistencyError if the three disagree.
bool is_p_symmetric(const PSemigroup& s);

/// The same pairing with the single exception x = (l_0 + g_p) / 2. Cross-
/// checked against the genus count and the residue-indexed Apery pairing.
bool is_p_pseudo_symmetric(const PSemigroup& s);

/// p-symmetric with l_0 = g_p + 1.
bool is_p_completely_symmetric(const PSemigroup& s);

Midpoint midpoint(const PSemigroup& s);

/// PF_p by definition: x notin S_p with x + t in S_p for every
/// t in (S_p - l_0) \ {0}.
std::vector<std::int64_t> pseudo_frobenius(const PSemigroup& s);

/// Maximal elements of G_p under x <=_S y  <=>  y - x in (S_p - l_0).
std::vector<std::int64_t> pf_via_gap_maximals(const PSemigroup& s);

/// { w - a : w maximal in Ape_p(A; a) under the same order }, a = min(A).
std::vector<std::int64_t> pf_via_apery_maximals(const PSemigroup& s);

/// Requires p >= 1 (ValidationError otherwise).
ValuationLengths valuation_lengths(const PSemigroup& s);

/// Runs every classifier. PF comes from the Apery maximals; with
/// `cross_check` the other two PF routes are evaluated and compared.
ClassificationReport classify(const PSemigroup& s, bool cross_check = false);

}  // namespace psg
