#include "psg/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "psg/enumeration.hpp"

namespace psg {

namespace {

__extension__ typedef __int128 i128;

void require_coprime_pair(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) {
    throw ValidationError(ErrorCode::NonPositive, "two-variable formulas need a, b >= 1");
  }
  if (a == b || std::gcd(a, b) != 1) {
    throw ValidationError(ErrorCode::GcdNotOne,
                          "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
}

void require_arith_range(std::int64_t a, std::int64_t d, PParameter p) {
  if (a < 3 || d <= 0 || std::gcd(a, d) != 1) {
    throw ValidationError(ErrorCode::InvalidArgument,
                          "arithmetic triple needs a >= 3, d > 0, gcd(a, d) = 1");
  }
  if (p.value() > a / 2) {
    throw ValidationError(ErrorCode::OutOfValidityRange,
                          "closed forms hold only for p <= floor(a/2) = " +
                              std::to_string(a / 2));
  }
}

}  // namespace

TwoVarInvariants two_var_invariants(std::int64_t a, std::int64_t b, PParameter p) {
  require_coprime_pair(a, b);
  const BigInt A = a, B = b, P = p.value();
  const BigInt ab = A * B;
  TwoVarInvariants out;
  out.frobenius = (P + 1) * ab - A - B;
  out.genus = exact_integer(BigRational(P * ab) + BigRational((A - 1) * (B - 1), 2),
                            "two_var genus");
  out.sylvester_sum = exact_integer(
      BigRational(P * P * ab * ab, 2) + BigRational(P * (ab - A - B) * ab, 2) +
          BigRational((A - 1) * (B - 1) * (2 * ab - A - B - 1), 12),
      "two_var sylvester sum");
  return out;
}

bool two_var_membership(std::int64_t n, std::int64_t a, std::int64_t b, PParameter p) {
  require_coprime_pair(a, b);
  if (n < 0) return false;
  // y0 = n * b^{-1} mod a, via the extended Euclidean algorithm.
  std::int64_t old_r = b % a, r = a, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  const i128 inv = ((old_s % a) + a) % a;
  const auto y0 = static_cast<std::int64_t>((static_cast<i128>(n % a) * inv) % a);
  const i128 x0 = (static_cast<i128>(n) - static_cast<i128>(b) * y0) / a;
  return x0 >= 0 && x0 >= static_cast<i128>(p.value()) * b;
}

GcdReduction gcd_reduce(const GeneratorTuple& gens) {
  const auto elems = gens.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::int64_t d = 0;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j != i) d = std::gcd(d, elems[j]);
    }
    if (std::gcd(elems[i], d) != 1) continue;

    std::vector<std::int64_t> reduced{elems[i]};
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j == i) continue;
      if (elems[j] / d == elems[i]) {
        throw ValidationError(ErrorCode::DuplicateAfterReduction,
                              std::to_string(elems[j]) + " / " + std::to_string(d) +
                                  " coincides with a_1 = " + std::to_string(elems[i]));
      }
      reduced.push_back(elems[j] / d);
    }
    return GcdReduction{elems[i], d, validate_generators(reduced)};
  }
  throw ValidationError(ErrorCode::NoCoprimeElement,
                        "no generator is coprime to the gcd of the others");
}

LiftedInvariants lift_invariants(const GcdReduction& red, const BigInt& reduced_frobenius,
                                 const BigInt& reduced_genus,
                                 const BigInt& reduced_sylvester_sum) {
  const BigInt d = red.d, a1 = red.a1;
  LiftedInvariants out;
  out.frobenius = d * reduced_frobenius + (d - 1) * a1;
  out.genus = exact_integer(BigRational(d * reduced_genus) + BigRational((d - 1) * (a1 - 1), 2),
                            "lifted genus");
  out.sylvester_sum = exact_integer(
      BigRational(d * d * reduced_sylvester_sum) +
          BigRational(a1 * d * (d - 1) * reduced_genus, 2) +
          BigRational((a1 - 1) * (d - 1) * (2 * a1 * d - a1 - d - 1), 12),
      "lifted sylvester sum");
  return out;
}

LiftedInvariants lifted_invariants(const GcdReduction& red, PParameter p) {
  const auto t = build_psemigroup(red.reduced, p);
  return lift_invariants(red, t.frobenius(), genus(t), sylvester_sum(t));
}

std::vector<std::int64_t> arith_apery_elements(std::int64_t a, std::int64_t d, PParameter p) {
  require_arith_range(a, d, p);
  const std::int64_t P = p.value();
  const std::int64_t r = a + d;       // middle generator
  const std::int64_t q = a + 2 * d;   // largest generator
  auto value = [&](std::int64_t x2, std::int64_t x3) { return x2 * r + x3 * q; };

  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(a));
  if (a % 2 != 0) {
    const std::int64_t h = (a - 1) / 2;
    for (std::int64_t i = 0; i < 2 * P; ++i) out.push_back(value(i, h + P - i));
    for (std::int64_t j = 0; j <= h - P; ++j) out.push_back(value(2 * P, j));
    for (std::int64_t j = 0; j <= h - P - 1; ++j) out.push_back(value(2 * P + 1, j));
  } else {
    const std::int64_t h = a / 2;
    for (std::int64_t i = 0; i < P; ++i) {
      out.push_back(value(2 * i, h + P - 1 - 2 * i));
      out.push_back(value(2 * i + 1, h + P - 1 - 2 * i));
    }
    for (std::int64_t j = 0; j <= h - P - 1; ++j) {
      out.push_back(value(2 * P, j));
      out.push_back(value(2 * P + 1, j));
    }
  }
  std::sort(out.begin(), out.end());

  std::vector<std::uint8_t> seen(static_cast<std::size_t>(a), 0);
  for (auto w : out) {
    auto& slot = seen[static_cast<std::size_t>(w % a)];
    if (slot || static_cast<std::int64_t>(out.size()) != a) {
      throw ConsistencyError(ErrorCode::CrossCheckFailed,
                             "arithmetic Apery structure is not a residue system");
    }
    slot = 1;
  }
  return out;
}

ArithInvariants arith_invariants(std::int64_t a, std::int64_t d, PParameter p) {
  require_arith_range(a, d, p);
  const std::int64_t P = p.value();
  ArithInvariants out;
  out.frobenius = (a + 2 * d) * P + ((a - 2) / 2) * a + (a - 1) * d;
  const std::int64_t base = (a - 1) * (a + 2 * d - 1) + (a % 2 == 0 ? 1 : 0);
  out.genus = (2 * a + 2 * d - 1 - P) * P + base / 4;

  const auto apery = arith_apery_elements(a, d, p);
  out.ell0 = apery.front();

  // Inside the documented window l_0 is 2p(a+d), except at p = a/2 (a even)
  // where the listed structure gives a smaller element; the minimum of the
  // Apery structure decides everywhere.
  const bool window =
      2 * P < a && (P % 2 == 1 || 2 * P * a <= (a - 2) * (a + 2 * d));
  if (window && out.ell0 != 2 * P * (a + d)) {
    throw ConsistencyError(ErrorCode::CrossCheckFailed,
                           "l_0 = 2p(a+d) fails inside its validity window");
  }

  std::int64_t apery_sum = 0;
  for (auto w : apery) apery_sum += w;
  const bool frob_ok = out.frobenius == apery.back() - a;
  const bool genus_ok = 2 * apery_sum == a * (2 * out.genus + a - 1);
  if (!frob_ok || !genus_ok) {
    throw ConsistencyError(ErrorCode::CrossCheckFailed,
                           "arithmetic closed forms disagree with their Apery structure");
  }
  return out;
}

bool arith_predicts_symmetric(std::int64_t a, std::int64_t d, PParameter p) {
  require_arith_range(a, d, p);
  return a % 2 == 0 && p.value() == a / 2 - 1;
}

}  // namespace psg
