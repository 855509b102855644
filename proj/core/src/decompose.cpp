#include "psg/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace psg {

namespace {

std::vector<std::uint8_t> trimmed(std::vector<std::uint8_t> members) {
  auto last_gap = members.size();
  while (last_gap > 0 && members[last_gap - 1] != 0) --last_gap;
  members.resize(last_gap);
  return members;
}

void require_semigroup(const std::vector<std::uint8_t>& m) {
  if (!m.empty() && m[0] == 0) {
    throw ValidationError(ErrorCode::NotASemigroup, "0 must be a member");
  }
  const auto n = m.size();
  for (std::size_t x = 1; x < n; ++x) {
    if (!m[x]) continue;
    for (std::size_t y = x; x + y < n; ++y) {
      if (m[y] && !m[x + y]) {
        throw ValidationError(ErrorCode::NotASemigroup,
                              std::to_string(x) + " + " + std::to_string(y) +
                                  " is not a member");
      }
    }
  }
}

// Largest oversemigroup of `t` that avoids h (h a gap of t). Such a
// semigroup has Frobenius number h and is irreducible.
FiniteSemigroup maximal_excluding(const FiniteSemigroup& t, std::int64_t h) {
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(h) + 1);
  for (std::int64_t n = 0; n <= h; ++n) cur[static_cast<std::size_t>(n)] = t.contains(n) ? 1 : 0;

  for (std::int64_t y = h - 1; y >= 1; --y) {
    if (cur[static_cast<std::size_t>(y)]) continue;
    bool reaches_h = false;
    for (std::int64_t r = h - y; r >= 0 && !reaches_h; r -= y) {
      reaches_h = cur[static_cast<std::size_t>(r)] != 0;
    }
    if (reaches_h) continue;
    for (std::int64_t n = y; n <= h; ++n) {
      if (cur[static_cast<std::size_t>(n - y)]) cur[static_cast<std::size_t>(n)] = 1;
    }
  }
  return FiniteSemigroup::from_membership(std::move(cur));
}

bool all_contain(std::span<const FiniteSemigroup> parts, std::int64_t n, std::size_t skip) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != skip && !parts[i].contains(n)) return false;
  }
  return true;
}

// Intersection of all parts except `skip` equals t.
bool covers_without(const FiniteSemigroup& t, std::span<const FiniteSemigroup> parts,
                    std::size_t skip) {
  for (auto g : t.gaps()) {
    if (all_contain(parts, g, skip)) return false;
  }
  return true;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::uint8_t> members)
    : members_(trimmed(std::move(members))) {}

FiniteSemigroup FiniteSemigroup::from_membership(std::vector<std::uint8_t> members) {
  require_semigroup(members);
  return FiniteSemigroup(std::move(members));
}

FiniteSemigroup FiniteSemigroup::from_psemigroup(const PSemigroup& s) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(s.frontier()));
  for (std::int64_t n = 0; n < s.frontier(); ++n) m[static_cast<std::size_t>(n)] = s.contains(n) ? 1 : 0;
  if (!m.empty()) m[0] = 1;
  return from_membership(std::move(m));
}

FiniteSemigroup FiniteSemigroup::generated_by(std::span<const std::int64_t> gens) {
  if (gens.empty() || gcd_of(gens) != 1) {
    throw ValidationError(ErrorCode::GcdNotOne, "generators must have gcd 1");
  }
  const auto lo = *std::min_element(gens.begin(), gens.end());
  const auto hi = *std::max_element(gens.begin(), gens.end());
  if (lo <= 0) throw ValidationError(ErrorCode::NonPositive, "generators must be positive");
  for (std::int64_t limit = 2 * lo * hi + hi;; limit *= 2) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(limit), 0);
    m[0] = 1;
    for (auto a : gens) {
      for (std::int64_t n = a; n < limit; ++n) {
        if (m[static_cast<std::size_t>(n - a)]) m[static_cast<std::size_t>(n)] = 1;
      }
    }
    std::int64_t run = 0;
    for (std::int64_t n = 0; n < limit; ++n) {
      run = m[static_cast<std::size_t>(n)] ? run + 1 : 0;
      if (run == lo) return FiniteSemigroup(std::move(m));
    }
  }
}

FiniteSemigroup FiniteSemigroup::from_small_elements(std::span<const std::int64_t> small,
                                                     std::int64_t conductor) {
  if (conductor < 0) throw ValidationError(ErrorCode::InvalidArgument, "negative conductor");
  std::vector<std::uint8_t> m(static_cast<std::size_t>(conductor), 0);
  for (auto s : small) {
    if (s < 0) throw ValidationError(ErrorCode::NotASemigroup, "negative element");
    if (s < conductor) m[static_cast<std::size_t>(s)] = 1;
  }
  if (!m.empty()) m[0] = 1;
  return from_membership(std::move(m));
}

std::int64_t FiniteSemigroup::genus() const {
  return static_cast<std::int64_t>(std::count(members_.begin(), members_.end(), 0));
}

std::int64_t FiniteSemigroup::multiplicity() const {
  std::int64_t m = 1;
  while (!contains(m)) ++m;
  return m;
}

std::vector<std::int64_t> FiniteSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n < frontier(); ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> FiniteSemigroup::pseudo_frobenius() const {
  if (frontier() == 0) return {-1};
  std::vector<std::int64_t> out;
  for (auto x : gaps()) {
    bool ok = true;
    for (std::int64_t s = 1; x + s < frontier() && ok; ++s) {
      if (contains(s)) ok = contains(x + s);
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> FiniteSemigroup::special_gaps() const {
  std::vector<std::int64_t> out;
  for (auto x : pseudo_frobenius()) {
    if (x >= 0 && contains(2 * x)) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> FiniteSemigroup::minimal_generators() const {
  const auto m = multiplicity();
  std::vector<std::int64_t> out;
  for (std::int64_t n = m; n <= std::max<std::int64_t>(frobenius(), 0) + m; ++n) {
    if (!contains(n)) continue;
    bool decomposable = false;
    for (std::int64_t x = m; 2 * x <= n && !decomposable; ++x) {
      decomposable = contains(x) && contains(n - x);
    }
    if (!decomposable) out.push_back(n);
  }
  return out;
}

bool FiniteSemigroup::is_symmetric() const {
  const auto f = frobenius();
  for (std::int64_t x = 0; 2 * x <= f; ++x) {
    if (contains(x) == contains(f - x)) return false;
  }
  return true;
}

bool FiniteSemigroup::is_pseudo_symmetric() const {
  const auto f = frobenius();
  if (f < 0 || f % 2 != 0) return false;
  for (std::int64_t x = 0; 2 * x < f; ++x) {
    if (contains(x) == contains(f - x)) return false;
  }
  return true;
}

bool FiniteSemigroup::is_subset_of(const FiniteSemigroup& other) const {
  const auto n = std::max(frontier(), other.frontier());
  for (std::int64_t x = 0; x < n; ++x) {
    if (contains(x) && !other.contains(x)) return false;
  }
  return true;
}

bool is_irreducible_classic(const FiniteSemigroup& t) {
  return t.is_symmetric() || t.is_pseudo_symmetric();
}

bool is_irreducible_shifted(const FiniteSemigroup& t) {
  if (t.frontier() == 0) return true;
  const auto l = t.multiplicity();
  const auto f = t.frobenius() + l;
  const auto in = [&](std::int64_t x) { return x != 0 && t.contains(x); };
  std::int64_t failures = 0;
  for (std::int64_t x = 0; 2 * x <= f; ++x) {
    if (in(x) == in(f - x)) {
      if (2 * x != f) return false;
      ++failures;
    }
  }
  return failures <= 1;
}

FiniteSemigroup intersection(std::span<const FiniteSemigroup> parts) {
  if (parts.empty()) {
    throw ValidationError(ErrorCode::InvalidArgument, "intersection of no semigroups");
  }
  std::int64_t n = 0;
  for (const auto& p : parts) n = std::max(n, p.frontier());
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    m[static_cast<std::size_t>(x)] = all_contain(parts, x, parts.size()) ? 1 : 0;
  }
  return FiniteSemigroup::from_membership(std::move(m));
}

std::vector<FiniteSemigroup> irreducible_decomposition(const FiniteSemigroup& t) {
  if (is_irreducible_classic(t)) return {t};

  // Cover gaps from the top: each round excludes the largest gap that every
  // component so far still contains.
  std::vector<FiniteSemigroup> parts;
  const auto gap_list = t.gaps();
  for (auto it = gap_list.rbegin(); it != gap_list.rend(); ++it) {
    if (all_contain(parts, *it, parts.size())) parts.push_back(maximal_excluding(t, *it));
  }

  // Drop components the rest already cover.
  for (std::size_t i = parts.size(); i-- > 0;) {
    if (parts.size() > 1 && covers_without(t, parts, i)) {
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return parts;
}

bool is_valid_decomposition(const FiniteSemigroup& t, std::span<const FiniteSemigroup> parts,
                            Irreducibility notion) {
  if (parts.empty()) return false;
  for (const auto& p : parts) {
    const bool irreducible = notion == Irreducibility::Classic ? is_irreducible_classic(p)
                                                               : is_irreducible_shifted(p);
    if (!irreducible || !t.is_subset_of(p)) return false;
  }
  if (!(intersection(parts) == t)) return false;
  if (parts.size() == 1) return true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (covers_without(t, parts, i)) return false;
  }
  return true;
}

}  // namespace psg
