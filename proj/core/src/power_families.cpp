#include "apnkit/power_families.hpp"

#include <array>
#include <numeric>
#include <string>

#include <boost/rational.hpp>

#include "apnkit/error.hpp"
#include "apnkit/field.hpp"

namespace apnkit {
namespace {

using Q = boost::rational<std::int64_t>;

constexpr std::array kFamilies = {
    PowerFamily::kGold,         PowerFamily::kKasami,       PowerFamily::kInverse,
    PowerFamily::kFourT,        PowerFamily::kSeven,        PowerFamily::kHalfMinusOne,
    PowerFamily::kHalfPlusOneMinusOne, PowerFamily::kXiongYanYuan,
};

// 2^k for any integer k.
Q p2(int k) {
  if (k >= 0) return Q(std::int64_t{1} << k);
  return Q(1, std::int64_t{1} << (-k));
}

std::int64_t sign(unsigned n) { return n % 2 == 0 ? 1 : -1; }

std::int64_t integral(const Q& v, std::string_view what) {
  if (v.denominator() != 1) {
    throw Error(ErrorCode::kNonIntegralCount, std::string(what) + " is not an integer");
  }
  return v.numerator();
}

[[noreturn]] void not_applicable(PowerFamily f, unsigned n, const std::string& why) {
  throw Error(ErrorCode::kRowNotApplicable,
              std::string(to_string(f)) + " at n=" + std::to_string(n) + ": " + why);
}

}  // namespace

std::span<const PowerFamily> all_power_families() { return kFamilies; }

std::string_view to_string(PowerFamily f) {
  switch (f) {
    case PowerFamily::kGold: return "gold";
    case PowerFamily::kKasami: return "kasami";
    case PowerFamily::kInverse: return "inverse";
    case PowerFamily::kFourT: return "four_t";
    case PowerFamily::kSeven: return "seven";
    case PowerFamily::kHalfMinusOne: return "half_minus_one";
    case PowerFamily::kHalfPlusOneMinusOne: return "half_plus_one_minus_one";
    case PowerFamily::kXiongYanYuan: return "xyy";
  }
  return "unknown";
}

std::optional<PowerFamily> power_family_from_string(std::string_view s) {
  for (PowerFamily f : kFamilies) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

void check_applicable(PowerFamily f, unsigned n, FamilyParams p) {
  if (n < 2 || n > 20) not_applicable(f, n, "n outside [2,20]");
  const unsigned t = p.t;
  switch (f) {
    case PowerFamily::kGold: {
      if (t < 1 || 2 * t > n) not_applicable(f, n, "needs 1 <= t <= n/2");
      if (std::gcd(n, t) < 2) not_applicable(f, n, "gcd(n,t) = 1 gives an APN function");
      return;
    }
    case PowerFamily::kKasami: {
      if (t < 2 || 2 * t > n) not_applicable(f, n, "needs 2 <= t <= n/2");
      if (n == 3 * t) not_applicable(f, n, "needs n != 3t");
      const unsigned s = std::gcd(n, t);
      if ((n / s) % 2 == 0) not_applicable(f, n, "needs n/gcd(n,t) odd");
      if (s < 2) not_applicable(f, n, "gcd(n,t) = 1 gives an APN function");
      return;
    }
    case PowerFamily::kInverse:
      if (n % 2 != 0 || n < 4) not_applicable(f, n, "needs n even, n >= 4");
      return;
    case PowerFamily::kFourT:
      if (n % 4 != 0) not_applicable(f, n, "needs n = 4t");
      return;
    case PowerFamily::kSeven:
      if (n < 6) not_applicable(f, n, "needs n >= 6");
      return;
    case PowerFamily::kHalfMinusOne:
    case PowerFamily::kHalfPlusOneMinusOne:
      if (n < 6 || n % 2 != 0) not_applicable(f, n, "needs n >= 6 even");
      return;
    case PowerFamily::kXiongYanYuan:
      if (n % 2 != 0 || n / 2 < 5 || (n / 2) % 2 == 0) not_applicable(f, n, "needs n = 2t with t >= 5 odd");
      return;
  }
}

bool is_applicable(PowerFamily f, unsigned n, FamilyParams p) {
  try {
    check_applicable(f, n, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::uint64_t family_exponent(PowerFamily f, unsigned n, FamilyParams p) {
  check_applicable(f, n, p);
  const std::uint64_t one = 1;
  switch (f) {
    case PowerFamily::kGold: return (one << p.t) + 1;
    case PowerFamily::kKasami: return (one << (2 * p.t)) - (one << p.t) + 1;
    case PowerFamily::kInverse: return (one << n) - 2;
    case PowerFamily::kFourT: {
      const unsigned t = n / 4;
      return (one << (2 * t)) + (one << t) + 1;
    }
    case PowerFamily::kSeven: return 7;
    case PowerFamily::kHalfMinusOne: return (one << (n / 2)) - 1;
    case PowerFamily::kHalfPlusOneMinusOne: return (one << (n / 2 + 1)) - 1;
    case PowerFamily::kXiongYanYuan: return (one << (n / 2 + 1)) + 3;
  }
  return 0;
}

std::map<std::uint32_t, std::int64_t> family_spectrum(PowerFamily f, unsigned n, FamilyParams p) {
  check_applicable(f, n, p);
  const int ni = static_cast<int>(n);
  std::map<std::uint32_t, Q> w;
  switch (f) {
    case PowerFamily::kGold:
    case PowerFamily::kKasami: {
      const int s = static_cast<int>(std::gcd(n, p.t));
      w[0] = p2(ni) - p2(ni - s);
      w[1u << s] = p2(ni - s);
      break;
    }
    case PowerFamily::kInverse:
      w[0] = p2(ni - 1) + 1;
      w[2] = p2(ni - 1) - 2;
      w[4] = 1;
      break;
    case PowerFamily::kFourT: {
      const int t = ni / 4;
      w[0] = 5 * p2(ni - 3) - p2(3 * t - 3);
      w[2] = p2(ni - 2) + p2(3 * t - 2);
      w[4] = p2(ni - 3) - p2(3 * t - 3);
      break;
    }
    case PowerFamily::kSeven: {
      const Q w4 = divides_indicator(2, n);
      const Q w6 = (p2(ni - 2) + 1 - 5 * w4) / 6 + Q(sign(n) * kloosterman(n), 8);
      w[0] = p2(ni - 1) + 2 * w6 + w4;
      w[2] = p2(ni - 1) - 3 * w6 - 2 * w4;
      w[4] = w4;
      w[6] = w6;
      break;
    }
    case PowerFamily::kHalfMinusOne: {
      const Q w4 = 1 - divides_indicator(4, n);
      w[0] = p2(ni - 1) + p2(ni / 2 - 1) - 2 + w4;
      w[2] = p2(ni - 1) - p2(ni / 2 - 1) + 1 - 2 * w4;
      w[4] = w4;
      w[(1u << (n / 2)) - 2] += 1;
      break;
    }
    case PowerFamily::kHalfPlusOneMinusOne:
      w[0] = p2(ni - 1) + p2(ni / 2 - 1) - 1;
      w[2] = p2(ni - 1) - p2(ni / 2 - 1);
      w[1u << (n / 2)] = 1;
      break;
    case PowerFamily::kXiongYanYuan: {
      const int t = ni / 2;
      const Q c = 4 - kloosterman(static_cast<unsigned>(t));
      w[0] = 89 * p2(ni - 7) + 7 * p2(t - 7) * c;
      w[2] = 5 * p2(ni - 5) - 5 * p2(t - 5) * c;
      w[4] = 7 * p2(ni - 6) + 9 * p2(t - 6) * c;
      w[6] = p2(ni - 5) - p2(t - 5) * c;
      w[8] = p2(ni - 7) - p2(t - 7) * c;
      break;
    }
  }
  std::map<std::uint32_t, std::int64_t> out;
  for (const auto& [delta, omega] : w) {
    const std::int64_t v = integral(omega, "spectrum entry");
    if (v != 0) out[delta] = v;
  }
  return out;
}

std::int64_t family_d_value(PowerFamily f, unsigned n, FamilyParams p) {
  check_applicable(f, n, p);
  const int ni = static_cast<int>(n);
  const Q q = p2(ni);
  Q d;
  switch (f) {
    case PowerFamily::kGold:
    case PowerFamily::kKasami:
      d = -(q - 1) * p2(ni + static_cast<int>(std::gcd(n, p.t)) - 2);
      break;
    case PowerFamily::kInverse:
      d = (q - 1) * (q - 8);
      break;
    case PowerFamily::kFourT:
      d = (q - 1) * p2(3 * (ni / 4));
      break;
    case PowerFamily::kSeven: {
      const std::int64_t delta = divides_indicator(2, n);
      d = (q - 1) * (q - p2(ni - 2) - 1 + Q(27 * delta, 6) - (9 * p2(ni - 2) + 9) / 6 -
                     Q(sign(n) * 15 * kloosterman(n), 8));
      break;
    }
    case PowerFamily::kHalfMinusOne:
      d = (q - 1) * (q - p2(ni - 2) - 8 + 8 * divides_indicator(4, n) + 1);
      break;
    case PowerFamily::kHalfPlusOneMinusOne:
      d = p2(2 * ni) - p2(3 * ni / 2) - p2(2 * ni - 2) - p2(ni) + p2(ni / 2) + p2(ni - 2);
      break;
    case PowerFamily::kXiongYanYuan: {
      const int t = ni / 2;
      const Q c = 4 - kloosterman(static_cast<unsigned>(t));
      d = (q - 1) * (5 * p2(ni - 4) - 28 * p2(ni - 6) - 9 * p2(ni - 5) - 16 * p2(ni - 7) -
                     c * (5 * p2(t - 4) + 36 * p2(t - 6) - 16 * p2(t - 7) - 9 * p2(t - 5)));
      break;
    }
  }
  return integral(d, "D(x^d)");
}

std::optional<std::int64_t> uncorrected_d_value(PowerFamily f, unsigned n, FamilyParams p) {
  check_applicable(f, n, p);
  const int ni = static_cast<int>(n);
  const Q q = p2(ni);
  switch (f) {
    case PowerFamily::kSeven: {
      const std::int64_t delta = divides_indicator(2, n);
      return integral((q - 1) * (q - p2(ni - 2) - 1 - Q(13 * delta, 6) - (9 * p2(ni - 2) + 9) / 6 -
                               Q(sign(n) * 15 * kloosterman(n), 8)),
                      "uncorrected D");
    }
    case PowerFamily::kHalfMinusOne:
      return integral((q - 1) * (q - p2(ni - 2) - 4 + 4 * divides_indicator(4, n) + 1), "uncorrected D");
    default:
      return std::nullopt;
  }
}

std::int64_t d_value_from_row_spectrum(const std::map<std::uint32_t, std::int64_t>& omega, unsigned n) {
  const std::int64_t q = std::int64_t{1} << n;
  std::int64_t s = 0;
  std::int64_t w = 0;
  for (const auto& [delta, count] : omega) {
    if (delta == 2) s += 2 * count;
    if (delta > 2) w += count * (delta / 2) * (delta / 2);
  }
  return (q - 1) * (s - w + (s == q ? 1 : 0));
}

}  // namespace apnkit
