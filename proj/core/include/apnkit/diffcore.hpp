#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "apnkit/field.hpp"
#include "apnkit/functions.hpp"

namespace apnkit {

/// x -> G(x) + G(x + a), indexed by element encoding. Throws ZeroDirection.
std::vector<Element> derivative_row(const FuncTable& g, Element a);

/// All derivatives D_aG for a != 0. Storage is row-major with row a - 1 and
/// column x (both by encoding); canonical_row() reorders for reports.
class DiffSquare {
 public:
  DiffSquare(FieldPtr field, std::vector<Element> data);

  const Field& field() const noexcept { return *field_; }
  Element at(Element a, Element x) const noexcept { return data_[row_offset(a) + x]; }
  std::span<const Element> row(Element a) const noexcept {
    return {data_.data() + row_offset(a), field_->size()};
  }
  /// Row for the i-th nonzero element in canonical order (a = zeta^i), columns
  /// in canonical order.
  std::vector<Element> canonical_row(std::uint32_t i) const;

 private:
  std::size_t row_offset(Element a) const noexcept {
    return static_cast<std::size_t>(a - 1) * field_->size();
  }
  FieldPtr field_;
  std::vector<Element> data_;
};

DiffSquare difference_square(const FuncTable& g, unsigned jobs = 1);

/// |{y : D_aG(y) = D_aG(x)}|. Throws ZeroDirection.
std::uint32_t nabla(const FuncTable& g, Element a, Element x);
/// The set itself, ascending by encoding.
std::vector<Element> dset(const FuncTable& g, Element a, Element x);

/// delta_G(a, b) for a != 0, row a - 1, column b (by encoding).
class DDTable {
 public:
  /// Takes the raw counts; no validation (see validate()).
  DDTable(std::uint32_t q, std::vector<std::uint32_t> counts);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t at(Element a, Element b) const noexcept {
    return counts_[static_cast<std::size_t>(a - 1) * q_ + b];
  }
  std::span<const std::uint32_t> row(Element a) const noexcept {
    return {counts_.data() + static_cast<std::size_t>(a - 1) * q_, q_};
  }
  /// Throws MalformedDDT unless every row sums to q with even entries.
  void validate() const;

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> counts_;
};

DDTable ddt(const FuncTable& g, unsigned jobs = 1);
std::uint32_t delta_uniformity(const FuncTable& g, unsigned jobs = 1);
std::uint32_t delta_uniformity(const DDTable& t);

/// Frequency of each value in the multiset {delta_G(a, b) : a != 0, b}.
struct DiffSpectrum {
  std::uint32_t q = 0;
  std::map<std::uint32_t, std::uint64_t> frequency;

  /// omega_i = l_{2i} / (q - 1); exact because every row of a power function
  /// carries the same multiset. For other functions the quotient may be
  /// fractional, in which case this returns false.
  bool normalized(std::map<std::uint32_t, std::uint64_t>& out) const;
};

DiffSpectrum diff_spectrum(const DDTable& t);
DiffSpectrum diff_spectrum(const FuncTable& g, unsigned jobs = 1);

/// Multiplicity structure of one derivative row: histogram[m] is the number of
/// distinct values b with delta_G(a, b) = m (m > 0).
struct RowProfile {
  Element a = 0;
  std::map<std::uint32_t, std::uint32_t> histogram;

  std::uint32_t max_multiplicity() const noexcept {
    return histogram.empty() ? 0 : histogram.rbegin()->first;
  }
};

/// Streams one row at a time; memory O(q) per worker.
std::vector<RowProfile> row_profiles(const FuncTable& g, unsigned jobs = 1);
RowProfile row_profile(const FuncTable& g, Element a);
/// Profile of DDT row a (b-counts instead of derivative values).
RowProfile row_profile(const DDTable& t, Element a);

/// For each a (index a - 1), the values of D_aG occurring more than twice,
/// ascending by encoding.
std::vector<std::vector<Element>> marked_rows(const FuncTable& g, unsigned jobs = 1);

}  // namespace apnkit
