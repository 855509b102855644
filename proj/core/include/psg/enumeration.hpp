#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psg/bigint.hpp"
#include "psg/core.hpp"

namespace psg {

/// Exact denumerants d(n; A) for 0 <= n <= limit.
class DenumerantTable {
 public:
  [[nodiscard]] const GeneratorTuple& generators() const noexcept { return gens_; }
  [[nodiscard]] std::int64_t limit() const noexcept { return limit_; }
  /// d(n); zero for n < 0. Requires n <= limit().
  [[nodiscard]] std::uint64_t operator()(std::int64_t n) const;
  [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept {
    return counts_;
  }

 private:
  friend DenumerantTable denumerant_table(const GeneratorTuple&, std::int64_t);
  DenumerantTable(GeneratorTuple gens, std::vector<std::uint64_t> counts)
      : gens_(std::move(gens)),
        counts_(std::move(counts)),
        limit_(static_cast<std::int64_t>(counts_.size()) - 1) {}

  GeneratorTuple gens_;
  std::vector<std::uint64_t> counts_;
  std::int64_t limit_;
};

/// Coin-counting recurrence, one generator at a time. Throws
/// ValidationError(CountOverflow) if some d(n) exceeds 2^64 - 1.
DenumerantTable denumerant_table(const GeneratorTuple& gens, std::int64_t limit);

struct BuildOptions {
  /// Largest membership table the builder may allocate (entries).
  std::size_t max_table = 100'000'000;
};

/// Reads PSG_MAX_TABLE from the environment, falling back to the default.
BuildOptions build_options_from_env();

/// S_p(A) = { n : d(n; A) > p } with a certified frontier.
///
/// Every n >= frontier() is a member. The table stores membership for
/// 0 <= n < frontier(), and the last min(A) entries of it are members.
class PSemigroup {
 public:
  [[nodiscard]] const GeneratorTuple& generators() const noexcept { return gens_; }
  [[nodiscard]] PParameter p() const noexcept { return p_; }
  [[nodiscard]] std::int64_t frontier() const noexcept { return frontier_; }
  /// Least member of S_p; 0 when p = 0.
  [[nodiscard]] std::int64_t ell0() const noexcept { return ell0_; }
  /// Largest non-member g_p(A); -1 when S_p contains every n >= 0.
  [[nodiscard]] std::int64_t frobenius() const noexcept { return frobenius_; }
  /// g_p + 1.
  [[nodiscard]] std::int64_t conductor() const noexcept { return frobenius_ + 1; }

  [[nodiscard]] bool contains(std::int64_t n) const noexcept {
    if (n < 0) return false;
    if (n >= frontier_) return true;
    return membership_[static_cast<std::size_t>(n)] != 0;
  }

 private:
  friend PSemigroup build_psemigroup(const GeneratorTuple&, PParameter,
                                     const BuildOptions&);
  PSemigroup() = default;

  GeneratorTuple gens_;
  PParameter p_;
  std::vector<std::uint8_t> membership_;
  std::int64_t frontier_ = 0;
  std::int64_t ell0_ = 0;
  std::int64_t frobenius_ = -1;
};

PSemigroup build_psemigroup(const GeneratorTuple& gens, PParameter p,
                            const BuildOptions& options = {});

/// G_p(A) ascending.
std::vector<std::int64_t> gaps(const PSemigroup& s);

/// n_p(A) = |G_p(A)|.
std::int64_t genus(const PSemigroup& s);

/// s_p(A) = sum of G_p(A).
BigInt sylvester_sum(const PSemigroup& s);

/// Minimal generating set of the monoid S_p^{(0)} = S_p u {0}.
std::vector<std::int64_t> minimal_generators(const PSemigroup& s);

/// e_p(A), the cardinality of minimal_generators().
inline std::int64_t embedding_dimension(const PSemigroup& s) {
  return static_cast<std::int64_t>(minimal_generators(s).size());
}

}  // namespace psg
