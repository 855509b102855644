#include "psg/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace psg {

std::uint64_t DenumerantTable::operator()(std::int64_t n) const {
  if (n < 0) return 0;
  if (n > limit_) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "n = " + std::to_string(n) + " beyond table limit " +
                              std::to_string(limit_));
  }
  return counts_[static_cast<std::size_t>(n)];
}

DenumerantTable denumerant_table(const GeneratorTuple& gens, std::int64_t limit) {
  if (limit < 0) {
    throw ValidationError(ErrorCode::InvalidArgument, "limit must be non-negative");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(limit) + 1, 0);
  counts[0] = 1;
  for (auto a : gens.elements()) {
    for (std::int64_t n = a; n <= limit; ++n) {
      auto& c = counts[static_cast<std::size_t>(n)];
      if (__builtin_add_overflow(c, counts[static_cast<std::size_t>(n - a)], &c)) {
        throw ValidationError(ErrorCode::CountOverflow,
                              "d(" + std::to_string(n) + ") exceeds 64 bits");
      }
    }
  }
  return DenumerantTable(gens, std::move(counts));
}

BuildOptions build_options_from_env() {
  BuildOptions options;
  if (const char* env = std::getenv("PSG_MAX_TABLE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) options.max_table = v;
  }
  return options;
}

namespace {

// Upper bound on g_p. Schur gives g_0 <= (a_1 - 1)(a_k - 1) - 1. For
// n >= g_0 + p*a_1*a_2 write n - p*a_1*a_2 = <r, A>; then r + j*a_2*e_1 +
// (p - j)*a_1*e_2, j = 0..p, are p + 1 distinct representations of n.
BigInt hard_frontier_bound(const GeneratorTuple& gens, PParameter p) {
  const BigInt a1 = gens.min(), a2 = gens[1], ak = gens[gens.size() - 1];
  return (a1 - 1) * (ak - 1) + p.value() * a1 * a2;
}

// Denumerants saturated at `cap`. Saturating addition commutes with the
// recurrence: min(cap, x + y) only depends on min(cap, x) and min(cap, y).
std::vector<std::uint64_t> saturated_counts(const GeneratorTuple& gens,
                                            std::size_t length, std::uint64_t cap) {
  std::vector<std::uint64_t> c(length, 0);
  c[0] = 1;
  for (auto a : gens.elements()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t n = step; n < length; ++n) {
      auto v = c[n] + c[n - step];
      c[n] = v < cap ? v : cap;
    }
  }
  return c;
}

}  // namespace

PSemigroup build_psemigroup(const GeneratorTuple& gens, PParameter p,
                            const BuildOptions& options) {
  const std::int64_t a1 = gens.min();
  const auto cap = static_cast<std::uint64_t>(p.value()) + 1;
  const BigInt hard_bound = hard_frontier_bound(gens, p) + a1;

  BigInt initial = std::max<BigInt>(gens.sum(), BigInt(p.value() + 1) * gens[0] * gens[1]);
  initial += a1;

  for (BigInt limit = initial;; limit *= 2) {
    if (limit > hard_bound) limit = hard_bound;
    if (limit > BigInt(options.max_table)) {
      throw ValidationError(ErrorCode::TableLimitExceeded,
                            "membership table would need more than " +
                                std::to_string(options.max_table) +
                                " entries (raise PSG_MAX_TABLE)");
    }
    const auto length = limit.convert_to<std::size_t>();
    auto counts = saturated_counts(gens, length, cap);

    std::size_t run = 0;
    for (std::size_t n = 0; n < length; ++n) {
      run = counts[n] >= cap ? run + 1 : 0;
      if (run == static_cast<std::size_t>(a1)) {
        const auto start = static_cast<std::int64_t>(n + 1) - a1;
        PSemigroup s;
        s.gens_ = gens;
        s.p_ = p;
        s.frontier_ = static_cast<std::int64_t>(n + 1);
        s.frobenius_ = start - 1;
        s.membership_.resize(n + 1);
        for (std::size_t i = 0; i <= n; ++i) s.membership_[i] = counts[i] >= cap ? 1 : 0;
        s.ell0_ = 0;
        while (!s.membership_[static_cast<std::size_t>(s.ell0_)]) ++s.ell0_;
        return s;
      }
    }
    if (limit == hard_bound) {
      throw ConsistencyError(ErrorCode::CrossCheckFailed,
                             "no certified frontier below the Schur-type bound");
    }
  }
}

std::vector<std::int64_t> gaps(const PSemigroup& s) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= s.frobenius(); ++n) {
    if (!s.contains(n)) out.push_back(n);
  }
  return out;
}

std::int64_t genus(const PSemigroup& s) {
  std::int64_t count = 0;
  for (std::int64_t n = 0; n <= s.frobenius(); ++n) count += s.contains(n) ? 0 : 1;
  return count;
}

BigInt sylvester_sum(const PSemigroup& s) {
  BigInt total = 0;
  for (std::int64_t n = 0; n <= s.frobenius(); ++n) {
    if (!s.contains(n)) total += n;
  }
  return total;
}

std::vector<std::int64_t> minimal_generators(const PSemigroup& s) {
  // Least positive member of S_p^{(0)}.
  std::int64_t m = 1;
  while (!s.contains(m)) ++m;

  // Every minimal generator of a numerical semigroup is below F + m + 1.
  const std::int64_t bound = std::max<std::int64_t>(s.frobenius(), 0) + m;
  std::vector<std::int64_t> out;
  for (std::int64_t n = m; n <= bound; ++n) {
    if (!s.contains(n)) continue;
    bool decomposable = false;
    for (std::int64_t x = m; 2 * x <= n && !decomposable; ++x) {
      decomposable = s.contains(x) && s.contains(n - x);
    }
    if (!decomposable) out.push_back(n);
  }
  return out;
}

}  // namespace psg
