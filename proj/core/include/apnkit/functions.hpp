#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apnkit/field.hpp"

namespace apnkit {

/// A map F_{2^n} -> F_{2^n} materialized as a full value table.
///
/// Values are stored by element encoding (values()[x] = G(x)) so derivative
/// loops can index x + a directly; canonical_values() gives the table in the
/// report ordering x_1 = 0, x_2 = 1, x_3 = zeta, ...
class FuncTable {
 public:
  /// Throws InvalidSpec when the table length is not q or a value is out of range.
  FuncTable(FieldPtr field, std::vector<Element> values,
            std::optional<std::uint64_t> power_exponent = std::nullopt);

  static FuncTable from_canonical(FieldPtr field, std::span<const Element> canonical);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  Element operator()(Element x) const noexcept { return values_[x]; }
  std::span<const Element> values() const noexcept { return values_; }
  std::vector<Element> canonical_values() const;

  /// Set only for tables built by from_power (and the named power families).
  std::optional<std::uint64_t> power_exponent() const noexcept { return power_exponent_; }
  bool is_permutation() const noexcept { return permutation_; }

 private:
  FieldPtr field_;
  std::vector<Element> values_;
  std::optional<std::uint64_t> power_exponent_;
  bool permutation_ = false;
};

/// One monomial c * x^(2^i + 2^j) of a Dembowski-Ostrom polynomial.
struct DOTerm {
  unsigned i = 0;
  unsigned j = 0;
  Element coefficient = 0;
};

/// Terms must satisfy 1 <= j < i < n with no repeated (i, j).
struct DOSpec {
  std::vector<DOTerm> terms;
};

/// Coefficients a_0, a_1, ..., a_{k+1} of
///   F_k(x) = (...((a_0 x + a_1)^(q-2) + a_2)^(q-2) + ... + a_k)^(q-2) + a_{k+1}.
struct CarlitzChain {
  std::vector<Element> coefficients;

  /// Number of (q-2)-th power steps.
  std::size_t steps() const noexcept { return coefficients.size() < 2 ? 0 : coefficients.size() - 2; }
};

/// Pairwise-distinct points alpha_1, ..., alpha_l (l >= 2). The modified map
/// sends alpha_i to alpha_{i+1}^(q-2) cyclically and agrees with x^(q-2)
/// elsewhere.
struct ModInvSpec {
  std::vector<Element> alphas;
};

/// x^d, with 0^0 = 1.
FuncTable from_power(const FieldPtr& field, std::uint64_t d);
FuncTable inverse_map(const FieldPtr& field);
/// x^(2^t + 1).
FuncTable gold(const FieldPtr& field, unsigned t);
/// Throws IndexOutOfRange for bad indices and InvalidSpec for repeated pairs.
FuncTable from_do(const FieldPtr& field, const DOSpec& spec);
/// Applies x -> x^(q-2) first, then the cycle (alpha_1^(q-2) ... alpha_l^(q-2))
/// on the output. Throws DuplicateAlpha or InvalidSpec (l < 2).
FuncTable modified_inverse(const FieldPtr& field, const ModInvSpec& spec);
/// Throws ZeroLeadingCoefficient when a_0 = 0, InvalidSpec with fewer than
/// two coefficients.
FuncTable eval_chain(const FieldPtr& field, const CarlitzChain& chain);

/// Two-step chain for the inverse with 0 and alpha swapped:
/// ((d^2 x + d)^(q-2) + 1/d)^(q-2) + d with d = 1/alpha. Valid for n >= 3.
CarlitzChain transposition_chain_with_zero(const Field& field, Element alpha);
/// Four-step chain for the inverse with the values at alpha and beta swapped
/// (alpha != beta, both nonzero). Valid for q >= 16.
CarlitzChain transposition_chain(const Field& field, Element alpha, Element beta);

struct CarlitzRankBound {
  std::int64_t k = 0;
  /// True when k < (q-1)/2, in which case k is the exact Carlitz rank.
  bool certified = false;
};

/// Chain length for tau * x^(q-2) where tau is a product of disjoint cycles
/// with the given lengths (each >= 2): sum(l) + m - 1 if 0 is moved by tau,
/// sum(l) + m + 1 otherwise.
CarlitzRankBound carlitz_rank_formula(std::span<const unsigned> cycle_lengths, bool zero_in_support,
                                      std::uint64_t q);

bool is_permutation(const FuncTable& g);

}  // namespace apnkit
