#include "apnkit/functions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "apnkit/error.hpp"

namespace apnkit {

FuncTable::FuncTable(FieldPtr field, std::vector<Element> values,
                     std::optional<std::uint64_t> power_exponent)
    : field_(std::move(field)), values_(std::move(values)), power_exponent_(power_exponent) {
  const std::uint32_t q = field_->size();
  if (values_.size() != q) {
    throw Error(ErrorCode::kInvalidSpec, "table has " + std::to_string(values_.size()) +
                                             " entries, expected " + std::to_string(q));
  }
  std::vector<bool> seen(q, false);
  permutation_ = true;
  for (Element v : values_) {
    if (v >= q) throw Error(ErrorCode::kInvalidSpec, "table value out of range: " + std::to_string(v));
    if (seen[v]) permutation_ = false;
    seen[v] = true;
  }
}

FuncTable FuncTable::from_canonical(FieldPtr field, std::span<const Element> canonical) {
  const auto order = field->ordering();
  if (canonical.size() != order.size()) {
    throw Error(ErrorCode::kInvalidSpec, "canonical table has " + std::to_string(canonical.size()) +
                                             " entries, expected " + std::to_string(order.size()));
  }
  std::vector<Element> values(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) values[order[i]] = canonical[i];
  return FuncTable(std::move(field), std::move(values));
}

std::vector<Element> FuncTable::canonical_values() const {
  const auto order = field_->ordering();
  std::vector<Element> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = values_[order[i]];
  return out;
}

FuncTable from_power(const FieldPtr& field, std::uint64_t d) {
  std::vector<Element> values(field->size());
  for (Element x = 0; x < field->size(); ++x) values[x] = field->pow(x, d);
  return FuncTable(field, std::move(values), d);
}

FuncTable inverse_map(const FieldPtr& field) { return from_power(field, field->size() - 2); }

FuncTable gold(const FieldPtr& field, unsigned t) {
  if (t >= 64) throw Error(ErrorCode::kIndexOutOfRange, "gold t=" + std::to_string(t));
  return from_power(field, (std::uint64_t{1} << t) + 1);
}

FuncTable from_do(const FieldPtr& field, const DOSpec& spec) {
  const unsigned n = field->degree();
  std::set<std::pair<unsigned, unsigned>> seen;
  for (const auto& term : spec.terms) {
    if (!(1 <= term.j && term.j < term.i && term.i < n)) {
      throw Error(ErrorCode::kIndexOutOfRange, "DO term (i=" + std::to_string(term.i) +
                                                   ", j=" + std::to_string(term.j) +
                                                   ") needs 1 <= j < i < n");
    }
    if (!field->contains(term.coefficient)) {
      throw Error(ErrorCode::kInvalidSpec, "DO coefficient out of range");
    }
    if (!seen.emplace(term.i, term.j).second) {
      throw Error(ErrorCode::kInvalidSpec, "repeated DO term (" + std::to_string(term.i) + "," +
                                               std::to_string(term.j) + ")");
    }
  }
  std::vector<Element> values(field->size(), 0);
  for (Element x = 0; x < field->size(); ++x) {
    Element acc = 0;
    for (const auto& term : spec.terms) {
      const std::uint64_t d = (std::uint64_t{1} << term.i) + (std::uint64_t{1} << term.j);
      acc ^= field->mul(term.coefficient, field->pow(x, d));
    }
    values[x] = acc;
  }
  return FuncTable(field, std::move(values));
}

FuncTable modified_inverse(const FieldPtr& field, const ModInvSpec& spec) {
  const auto& alphas = spec.alphas;
  if (alphas.size() < 2) throw Error(ErrorCode::kInvalidSpec, "modified inverse needs at least two points");
  std::set<Element> distinct;
  for (Element a : alphas) {
    if (!field->contains(a)) throw Error(ErrorCode::kInvalidSpec, "point out of range");
    if (!distinct.insert(a).second) {
      throw Error(ErrorCode::kDuplicateAlpha, "point " + std::to_string(a) + " repeated");
    }
  }
  const std::uint64_t e = field->size() - 2;
  std::vector<Element> values(field->size());
  for (Element x = 0; x < field->size(); ++x) values[x] = field->pow(x, e);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    values[alphas[i]] = field->pow(alphas[(i + 1) % alphas.size()], e);
  }
  return FuncTable(field, std::move(values));
}

FuncTable eval_chain(const FieldPtr& field, const CarlitzChain& chain) {
  const auto& a = chain.coefficients;
  if (a.size() < 2) throw Error(ErrorCode::kInvalidSpec, "chain needs a_0 and a_1");
  if (a[0] == 0) throw Error(ErrorCode::kZeroLeadingCoefficient, "a_0 = 0");
  for (Element c : a) {
    if (!field->contains(c)) throw Error(ErrorCode::kInvalidSpec, "chain coefficient out of range");
  }
  const std::uint64_t e = field->size() - 2;
  std::vector<Element> values(field->size());
  for (Element x = 0; x < field->size(); ++x) {
    Element v = field->mul(a[0], x) ^ a[1];
    for (std::size_t i = 2; i < a.size(); ++i) v = field->pow(v, e) ^ a[i];
    values[x] = v;
  }
  return FuncTable(field, std::move(values));
}

CarlitzChain transposition_chain_with_zero(const Field& field, Element alpha) {
  if (alpha == 0) throw Error(ErrorCode::kZeroAlpha, "alpha must be nonzero");
  const Element d = field.inv(alpha);
  return CarlitzChain{{field.mul(d, d), d, field.inv(d), d}};
}

CarlitzChain transposition_chain(const Field& field, Element alpha, Element beta) {
  if (alpha == 0 || beta == 0) throw Error(ErrorCode::kZeroAlpha, "alpha and beta must be nonzero");
  if (alpha == beta) throw Error(ErrorCode::kDuplicateAlpha, "alpha == beta");
  const Element a2 = field.mul(alpha, alpha);
  const Element b2 = field.mul(beta, beta);
  const Element ab = field.mul(alpha, beta);
  return CarlitzChain{{
      field.div(a2 ^ b2, field.mul(a2, b2)),
      0,
      field.div(field.mul(alpha, b2), a2 ^ b2),
      field.div(alpha ^ beta, ab),
      field.div(ab, alpha ^ beta),
      field.inv(beta),
  }};
}

CarlitzRankBound carlitz_rank_formula(std::span<const unsigned> cycle_lengths, bool zero_in_support,
                                      std::uint64_t q) {
  std::int64_t total = 0;
  for (unsigned l : cycle_lengths) {
    if (l < 2) throw Error(ErrorCode::kInvalidSpec, "cycle length must be >= 2");
    total += l;
  }
  const auto m = static_cast<std::int64_t>(cycle_lengths.size());
  CarlitzRankBound out;
  out.k = m + total + (zero_in_support ? -1 : 1);
  out.certified = 2 * out.k < static_cast<std::int64_t>(q) - 1;
  return out;
}

bool is_permutation(const FuncTable& g) { return g.is_permutation(); }

}  // namespace apnkit
