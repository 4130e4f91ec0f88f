#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>

namespace apnkit {

/// Power-function families with known differential spectra.
enum class PowerFamily {
  kGold,                  // 2^t + 1, 1 <= t <= n/2, gcd(n, t) = s >= 2
  kKasami,                // 2^(2t) - 2^t + 1, 2 <= t <= n/2, n != 3t, n/s odd, s >= 2
  kInverse,               // 2^n - 2, n even
  kFourT,                 // 2^(2t) + 2^t + 1, n = 4t
  kSeven,                 // 7, n >= 6
  kHalfMinusOne,          // 2^(n/2) - 1, n >= 6 even
  kHalfPlusOneMinusOne,   // 2^(n/2+1) - 1, n >= 6 even
  kXiongYanYuan,          // 2^(t+1) + 3, n = 2t, t >= 5 odd
};

std::span<const PowerFamily> all_power_families();
std::string_view to_string(PowerFamily f);
std::optional<PowerFamily> power_family_from_string(std::string_view s);

/// t for the parametrized rows; ignored elsewhere (n = 4t and n = 2t rows
/// derive t from n).
struct FamilyParams {
  unsigned t = 0;
};

/// Throws RowNotApplicable naming the violated condition.
void check_applicable(PowerFamily f, unsigned n, FamilyParams p = {});
bool is_applicable(PowerFamily f, unsigned n, FamilyParams p = {});

std::uint64_t family_exponent(PowerFamily f, unsigned n, FamilyParams p = {});

/// Expected per-direction multiset: value delta -> omega_delta (number of b
/// with delta(a, b) = delta, the same for every a).
std::map<std::uint32_t, std::int64_t> family_spectrum(PowerFamily f, unsigned n, FamilyParams p = {});

/// D(x^d) in closed form. Where the commonly tabulated expression disagrees
/// with the row's own spectrum, this is the corrected one.
std::int64_t family_d_value(PowerFamily f, unsigned n, FamilyParams p = {});

/// The uncorrected tabulated expression, for rows where it differs from
/// family_d_value; nullopt otherwise.
std::optional<std::int64_t> uncorrected_d_value(PowerFamily f, unsigned n, FamilyParams p = {});

/// D computed from a per-direction spectrum map (same for every a).
std::int64_t d_value_from_row_spectrum(const std::map<std::uint32_t, std::int64_t>& omega, unsigned n);

}  // namespace apnkit
