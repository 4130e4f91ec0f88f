#include "apnkit/defect.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "apnkit/error.hpp"

namespace apnkit {
namespace {

std::int64_t q_of(unsigned n) {
  if (n < 1 || n > 20) throw Error(ErrorCode::kUnsupportedDegree, "n=" + std::to_string(n));
  return std::int64_t{1} << n;
}

void require_even(unsigned n) {
  if (n % 2 != 0) throw Error(ErrorCode::kOddN, "n=" + std::to_string(n) + " is odd");
}

}  // namespace

RowPartition row_partition(const RowProfile& profile, std::uint32_t q) {
  RowPartition r;
  r.a = profile.a;
  for (const auto& [m, count] : profile.histogram) {
    if (m == 2) {
      r.s_size += 2 * count;
      continue;
    }
    const std::uint32_t k = m / 2;
    r.t_a += count;
    r.w += static_cast<std::int64_t>(count) * k * k;
    r.ks.insert(r.ks.end(), count, k);
  }
  std::sort(r.ks.rbegin(), r.ks.rend());
  r.chi = r.s_size == q ? 1 : 0;
  return r;
}

RowPartition row_partition(const FuncTable& g, Element a) {
  return row_partition(row_profile(g, a), g.field().size());
}

DefectReport defect_from_profiles(std::span<const RowProfile> profiles, std::uint32_t q) {
  DefectReport r;
  r.per_row.reserve(profiles.size());
  for (const auto& p : profiles) {
    r.per_row.push_back(row_partition(p, q));
    const auto& part = r.per_row.back();
    r.d_value += static_cast<std::int64_t>(part.s_size) - part.w + part.chi;
  }
  const std::int64_t qq = static_cast<std::int64_t>(q) * q - 1;
  r.apn_defect = qq - r.d_value;
  r.ratio_num = r.d_value;
  r.ratio_den = qq;
  r.quasi_apn = r.d_value > 0;
  r.boundary = r.d_value == 0;
  return r;
}

DefectReport d_value(const FuncTable& g, unsigned jobs) {
  const auto profiles = row_profiles(g, jobs);
  return defect_from_profiles(profiles, g.field().size());
}

std::int64_t d_value_from_spectrum(const DDTable& t) {
  t.validate();
  std::int64_t d = 0;
  for (Element a = 1; a < t.q(); ++a) {
    std::int64_t s = 0;
    std::int64_t w = 0;
    for (std::uint32_t delta : t.row(a)) {
      if (delta == 2) s += 2;
      if (delta > 2) w += static_cast<std::int64_t>(delta / 2) * (delta / 2);
    }
    d += s - w + (s == t.q() ? 1 : 0);
  }
  return d;
}

PowerBounds power_bounds(unsigned n) {
  const std::int64_t q = q_of(n);
  return {9 * (q - 1), (q * q + 4 * q + 4) * (q - 1) / 4};
}

std::int64_t two_valued_closed_form(unsigned n, unsigned s) {
  const std::int64_t q = q_of(n);
  if (s < 2 || s > n) throw Error(ErrorCode::kIndexOutOfRange, "two-valued spectrum needs 2 <= s <= n");
  return -(q - 1) * q * (std::int64_t{1} << (s - 2));
}

std::int64_t two_valued_defect_lower_bound(unsigned n) {
  const std::int64_t q = q_of(n);
  return (q - 1) * (3 * q + 2) / 2;
}

std::int64_t do_closed_form(const FuncTable& g) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  std::vector<Element> lin(q);
  std::int64_t n_g = 0;
  std::int64_t weighted = 0;
  for (Element a = 1; a < q; ++a) {
    for (Element x = 0; x < q; ++x) lin[x] = v[x] ^ v[x ^ a] ^ v[a] ^ v[0];
    // Additive iff L(x) = L(x without its lowest bit) + L(lowest bit) everywhere.
    std::uint32_t kernel = 1;
    for (Element x = 1; x < q; ++x) {
      const Element low = x & (~x + 1);
      if (lin[x] != (lin[x ^ low] ^ lin[low])) {
        throw Error(ErrorCode::kNotShiftedLinear,
                    "D_aG + G(a) + G(0) is not additive for a=" + std::to_string(a));
      }
      if (lin[x] == 0) ++kernel;
    }
    const int s_a = std::countr_zero(kernel);
    if (s_a > 1) {
      ++n_g;
      weighted += std::int64_t{1} << (s_a - 2);
    }
  }
  const std::int64_t qq = q;
  return (qq + 1) * n_g + qq * weighted;
}

TraceCounters trace_counters_f0a(const Field& f, Element alpha) {
  if (alpha == 0) throw Error(ErrorCode::kZeroAlpha, "alpha must be nonzero");
  TraceCounters c;
  const bool odd = f.degree() % 2 == 1;
  Element aw = 0;
  Element aw2 = 0;
  if (!odd) {
    aw = f.mul(alpha, f.omega());
    aw2 = f.mul(aw, f.omega());
  }
  for (Element a = 1; a < f.size(); ++a) {
    if (a == alpha) {
      if (odd) ++c.k;  // alpha itself is in the odd-n row spectrum
      continue;
    }
    const int t1 = f.trace(f.div(alpha, a ^ alpha));
    const int t2 = f.trace(f.div(alpha, a));
    if (odd) {
      if (t1 == 1 && t2 == 0) ++c.k;
      if (t1 == 0 && t2 == 1) ++c.ell;
    } else {
      if (a == aw || a == aw2) continue;
      if (t1 == 1 && t2 == 1) ++c.k;
      if (t1 == 0 && t2 == 0) ++c.s;
    }
  }
  return c;
}

std::int64_t f0a_defect_closed_form(unsigned n, const TraceCounters& c) {
  const std::int64_t q = q_of(n);
  if (n % 2 == 1) return 9 * q + 8 * c.ell - 9 * c.k - 9;
  if (n % 4 == 2) return 9 * q + 8 * c.s - 9 * c.k - 9;
  return 9 * q + 8 * c.s - 9 * c.k + 5;
}

bool trace_counter_relation_check(unsigned n, const TraceCounters& c) {
  require_even(n);
  return n % 4 == 2 ? c.k == c.s : c.k == c.s + 4;
}

std::int64_t defect_from_k(unsigned n, std::int64_t k) {
  require_even(n);
  const std::int64_t q = q_of(n);
  return 9 * (q - 1) - k - (n % 4 == 0 ? 18 : 0);
}

}  // namespace apnkit
