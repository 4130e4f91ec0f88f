#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "apnkit/diffcore.hpp"
#include "apnkit/field.hpp"
#include "apnkit/functions.hpp"

namespace apnkit {

/// Multiplicity structure of D_aG: S_a is the set of points hit exactly twice,
/// the remaining values occur 2k_i times with k_i >= 2.
struct RowPartition {
  Element a = 0;
  std::uint32_t s_size = 0;
  std::uint32_t t_a = 0;
  std::vector<std::uint32_t> ks;  // descending
  std::int64_t w = 0;             // sum of k_i^2
  int chi = 0;                    // 1 iff s_size = q
};

RowPartition row_partition(const RowProfile& profile, std::uint32_t q);
/// Throws ZeroDirection.
RowPartition row_partition(const FuncTable& g, Element a);

struct DefectReport {
  std::int64_t d_value = 0;
  std::int64_t apn_defect = 0;
  /// R(G) = ratio_num / ratio_den with ratio_den = q^2 - 1 (not reduced).
  std::int64_t ratio_num = 0;
  std::int64_t ratio_den = 1;
  bool quasi_apn = false;
  /// D(G) = 0 exactly; such functions are reported as not quasi-APN.
  bool boundary = false;
  std::vector<RowPartition> per_row;
};

DefectReport defect_from_profiles(std::span<const RowProfile> profiles, std::uint32_t q);
DefectReport d_value(const FuncTable& g, unsigned jobs = 1);

/// D(G) from delta_G(a, b) alone. Throws MalformedDDT.
std::int64_t d_value_from_spectrum(const DDTable& t);

struct PowerBounds {
  std::int64_t lower = 0;  // 9(q-1)
  std::int64_t upper = 0;  // (q^2+4q+4)(q-1)/4
};

/// APN-defect range for non-APN power functions over F_{2^n}.
PowerBounds power_bounds(unsigned n);

/// D(G) = -(q-1) q 2^(s-2) for spectrum {0, 2^s}. Needs 2 <= s <= n.
std::int64_t two_valued_closed_form(unsigned n, unsigned s);
/// Displayed APN-defect lower bound (q-1)(3q+2)/2 for two-valued functions.
std::int64_t two_valued_defect_lower_bound(unsigned n);

/// APN-defect from kernel dimensions of x -> D_aG(x) + G(a) + G(0).
/// Throws NotShiftedLinear if one of these maps is not additive.
std::int64_t do_closed_form(const FuncTable& g);

/// Counters for the inverse modified at {0, alpha}. ell is only meaningful
/// for odd n and s only for even n; the other is left 0.
struct TraceCounters {
  std::int64_t k = 0;
  std::int64_t ell = 0;
  std::int64_t s = 0;
};

/// Throws ZeroAlpha.
TraceCounters trace_counters_f0a(const Field& f, Element alpha);
std::int64_t f0a_defect_closed_form(unsigned n, const TraceCounters& c);
/// k = s for n = 2 mod 4, k = s + 4 for n = 0 mod 4. Throws OddN.
bool trace_counter_relation_check(unsigned n, const TraceCounters& c);
/// 9(q-1) - k, minus a further 18 when 4 | n. Throws OddN.
std::int64_t defect_from_k(unsigned n, std::int64_t k);

}  // namespace apnkit
