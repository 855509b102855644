#include "psg/symmetry.hpp"

#include <algorithm>
#include <string>

#include "psg/apery.hpp"

namespace psg {

namespace {

std::int64_t pairing_total(const PSemigroup& s) { return s.frobenius() + s.ell0(); }

// t in (S_p - l_0) \ {0}
bool in_shifted(const PSemigroup& s, std::int64_t t) {
  return t > 0 && s.contains(t + s.ell0());
}

// Exactly one of x, total - x is a member, for every x in [0, total] except
// (optionally) the midpoint.
bool pairs_split(const PSemigroup& s, std::int64_t total, bool skip_midpoint) {
  for (std::int64_t x = 0; 2 * x <= total; ++x) {
    if (skip_midpoint && 2 * x == total) continue;
    if (s.contains(x) == s.contains(total - x)) return false;
  }
  return true;
}

[[noreturn]] void disagreement(const PSemigroup& s, const std::string& what) {
  throw ConsistencyError(ErrorCode::CrossCheckFailed,
                         what + " (p = " + std::to_string(s.p().value()) + ")");
}

}  // namespace

Midpoint midpoint(const PSemigroup& s) {
  Midpoint m;
  const auto total = pairing_total(s);
  m.integral = total >= 0 && total % 2 == 0;
  if (m.integral) {
    m.value = total / 2;
    m.in_semigroup = s.contains(m.value);
  }
  return m;
}

bool is_p_symmetric(const PSemigroup& s) {
  const auto total = pairing_total(s);
  // Odd total forces a fixed point-free pairing; even total cannot split.
  const bool by_pairing = (total % 2 != 0) && pairs_split(s, total, false);

  const bool by_count = 2 * genus(s) == total + 1;

  const auto ap = apery_set(s);
  const auto a = ap.modulus;
  bool by_apery = true;
  for (std::size_t i = 0; i < ap.sorted.size() && by_apery; ++i) {
    by_apery = ap.sorted[i] + ap.sorted[ap.sorted.size() - 1 - i] == total + a;
  }

  if (by_pairing != by_count || by_pairing != by_apery) {
    disagreement(s, "p-symmetry tests disagree: pairing=" + std::to_string(by_pairing) +
                        " count=" + std::to_string(by_count) +
                        " apery=" + std::to_string(by_apery));
  }
  return by_pairing;
}

bool is_p_pseudo_symmetric(const PSemigroup& s) {
  const auto mid = midpoint(s);
  if (!mid.integral) return false;
  const auto total = pairing_total(s);

  const bool by_pairing = pairs_split(s, total, true);

  const std::int64_t expected_genus = mid.value + (mid.in_semigroup ? 0 : 1);
  const bool by_count = genus(s) == expected_genus;

  const auto ap = apery_set(s);
  const auto a = ap.modulus;
  bool by_apery = true;
  for (std::int64_t j = 0; j < a && by_apery; ++j) {
    std::int64_t excess = a;
    if (j == 0) excess = mid.in_semigroup ? 0 : 2 * a;
    by_apery = ap.at_residue(mid.value + j) + ap.at_residue(mid.value - j) == total + excess;
  }

  if (by_pairing != by_count || by_pairing != by_apery) {
    disagreement(s, "p-pseudo-symmetry tests disagree: pairing=" +
                        std::to_string(by_pairing) + " count=" + std::to_string(by_count) +
                        " apery=" + std::to_string(by_apery));
  }
  return by_pairing;
}

bool is_p_completely_symmetric(const PSemigroup& s) {
  return is_p_symmetric(s) && s.ell0() == s.conductor();
}

std::vector<std::int64_t> pseudo_frobenius(const PSemigroup& s) {
  if (s.frobenius() < 0) return {-1};  // S = N_0
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= s.frobenius(); ++x) {
    if (s.contains(x)) continue;
    bool ok = true;
    // x + t >= frontier is always a member, so larger t need no check.
    for (std::int64_t t = 1; x + t < s.frontier() && ok; ++t) {
      if (in_shifted(s, t)) ok = s.contains(x + t);
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> pf_via_gap_maximals(const PSemigroup& s) {
  if (s.frobenius() < 0) return {-1};
  const auto g = gaps(s);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < g.size() && maximal; ++j) {
      maximal = !in_shifted(s, g[j] - g[i]);
    }
    if (maximal) out.push_back(g[i]);
  }
  return out;
}

std::vector<std::int64_t> pf_via_apery_maximals(const PSemigroup& s) {
  const auto ap = apery_set(s);
  std::vector<std::int64_t> out;
  for (auto w : ap.sorted) {
    const bool maximal = std::none_of(ap.sorted.begin(), ap.sorted.end(), [&](std::int64_t v) {
      return in_shifted(s, v - w);
    });
    if (maximal) out.push_back(w - ap.modulus);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValuationLengths valuation_lengths(const PSemigroup& s) {
  if (s.p().value() < 1) {
    throw ValidationError(ErrorCode::InvalidArgument, "valuation lengths require p >= 1");
  }
  const auto total = pairing_total(s);
  ValuationLengths v;
  for (std::int64_t n = 1; n <= total; ++n) v.d3 += s.contains(n) ? 1 : 0;
  v.d1 = v.d3 + 1;
  v.d2 = total + 1;
  return v;
}

ClassificationReport classify(const PSemigroup& s, bool cross_check) {
  ClassificationReport r;
  r.is_symmetric = is_p_symmetric(s);
  r.is_pseudo_symmetric = is_p_pseudo_symmetric(s);
  if (r.is_symmetric && r.is_pseudo_symmetric) {
    disagreement(s, "semigroup classified both symmetric and pseudo-symmetric");
  }
  r.is_completely_symmetric = r.is_symmetric && s.ell0() == s.conductor();
  r.is_irreducible = r.is_symmetric || r.is_pseudo_symmetric;
  r.pf = pf_via_apery_maximals(s);
  if (cross_check) {
    if (pseudo_frobenius(s) != r.pf) disagreement(s, "PF by definition differs from Apery maximals");
    if (pf_via_gap_maximals(s) != r.pf) disagreement(s, "PF by gap maximals differs from Apery maximals");
  }
  if (r.pf.back() != s.frobenius()) disagreement(s, "max PF differs from g_p");
  r.type_number = static_cast<std::int64_t>(r.pf.size());
  r.midpoint = midpoint(s);
  if (s.p().value() >= 1) r.valuation = valuation_lengths(s);
  return r;
}

}  // namespace psg
