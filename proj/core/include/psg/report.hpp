#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psg/apery.hpp"
#include "psg/bigint.hpp"
#include "psg/core.hpp"
#include "psg/enumeration.hpp"
#include "psg/symmetry.hpp"

namespace psg {

struct InvariantReport {
  GeneratorTuple gens;
  PParameter p;
  std::int64_t ell0 = 0;
  std::int64_t frobenius = 0;
  std::int64_t genus = 0;
  BigInt sylvester_sum;
  /// power_sums[i] = s_p^{(i+1)}(A).
  std::vector<BigInt> power_sums;
  AperySet apery;
  ClassificationReport classification;
  std::int64_t embedding_dimension = 0;
};

struct ReportOptions {
  int max_mu = 3;
  /// Re-derive every Apery/closed-form value by enumeration and throw
  /// ConsistencyError on mismatch.
  bool verify = false;
  /// Skip the minimal generating set (quadratic in the conductor).
  bool embedding_dimension = true;
  BuildOptions build;
};

InvariantReport build_report(const GeneratorTuple& gens, PParameter p,
                             const ReportOptions& options = {});

/// Enumeration-side checks behind ReportOptions::verify. Throws
/// ConsistencyError describing the first mismatch.
void verify_report(const PSemigroup& s, const InvariantReport& report);

}  // namespace psg
