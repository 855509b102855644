#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psg/enumeration.hpp"

namespace psg {

/// An ordinary numerical semigroup: 0 is a member, the complement is finite,
/// and every n >= frontier() is a member.
class FiniteSemigroup {
 public:
  /// `members` lists membership for 0..members.size()-1; everything beyond
  /// is a member. Throws ValidationError(NotASemigroup) if 0 is missing or
  /// the set is not additively closed.
  static FiniteSemigroup from_membership(std::vector<std::uint8_t> members);
  /// S_p^{(0)}(A) = S_p(A) u {0}.
  static FiniteSemigroup from_psemigroup(const PSemigroup& s);
  /// <gens>; requires gcd 1.
  static FiniteSemigroup generated_by(std::span<const std::int64_t> gens);
  /// Members below `conductor` given explicitly; every n >= conductor is a
  /// member.
  static FiniteSemigroup from_small_elements(std::span<const std::int64_t> small,
                                             std::int64_t conductor);

  [[nodiscard]] bool contains(std::int64_t n) const noexcept {
    if (n < 0) return false;
    if (n >= frontier()) return true;
    return members_[static_cast<std::size_t>(n)] != 0;
  }
  /// Trimmed so that frontier() - 1 is the Frobenius number (-1 for N_0).
  [[nodiscard]] std::int64_t frontier() const noexcept {
    return static_cast<std::int64_t>(members_.size());
  }
  [[nodiscard]] std::int64_t frobenius() const noexcept { return frontier() - 1; }
  [[nodiscard]] std::int64_t genus() const;
  /// Least positive member.
  [[nodiscard]] std::int64_t multiplicity() const;
  [[nodiscard]] std::vector<std::int64_t> gaps() const;
  [[nodiscard]] std::vector<std::int64_t> pseudo_frobenius() const;
  /// Pseudo-Frobenius numbers x with 2x a member.
  [[nodiscard]] std::vector<std::int64_t> special_gaps() const;
  [[nodiscard]] std::vector<std::int64_t> minimal_generators() const;
  [[nodiscard]] std::int64_t type_number() const {
    return static_cast<std::int64_t>(pseudo_frobenius().size());
  }
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_pseudo_symmetric() const;
  [[nodiscard]] bool is_subset_of(const FiniteSemigroup& other) const;

  friend bool operator==(const FiniteSemigroup&, const FiniteSemigroup&) = default;

 private:
  explicit FiniteSemigroup(std::vector<std::uint8_t> members);
  std::vector<std::uint8_t> members_;
};

/// Symmetric or pseudo-symmetric.
bool is_irreducible_classic(const FiniteSemigroup& t);

/// The p-style pairing applied to T \ {0} with l = multiplicity(T) as the
/// shift: exactly one of x and l + F - x lies in T \ {0}, with at most the
/// midpoint excepted. This is how p-irreducibility reads T when 0 is dropped.
bool is_irreducible_shifted(const FiniteSemigroup& t);

enum class Irreducibility { Classic, Shifted };

/// Irreducible oversemigroups of `t` whose intersection is `t`; no component
/// can be dropped. A single component means `t` is irreducible.
std::vector<FiniteSemigroup> irreducible_decomposition(const FiniteSemigroup& t);

/// Elementwise intersection (non-empty input).
FiniteSemigroup intersection(std::span<const FiniteSemigroup> parts);

/// True when every part is an irreducible oversemigroup of `t`, their
/// intersection is `t`, and no part is redundant.
bool is_valid_decomposition(const FiniteSemigroup& t,
                            std::span<const FiniteSemigroup> parts,
                            Irreducibility notion = Irreducibility::Classic);

}  // namespace psg
