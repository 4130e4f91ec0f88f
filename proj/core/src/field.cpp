#include "apnkit/field.hpp"

#include <bit>
#include <string>

#include "apnkit/error.hpp"

namespace apnkit {
namespace {

__extension__ using i128 = __int128;

unsigned poly_degree(std::uint64_t p) { return static_cast<unsigned>(std::bit_width(p)) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::string hex(std::uint32_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  do {
    s.insert(s.begin(), kDigits[v & 0xF]);
    v >>= 4;
  } while (v != 0);
  return "0x" + s;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const unsigned deg = poly_degree(poly);
  // Any factorization has a factor of degree <= deg/2.
  for (std::uint64_t f = 2; poly_degree(f) <= deg / 2; ++f) {
    if (poly_mod(poly, f) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(unsigned n) {
  if (n < Field::kMinDegree || n > Field::kMaxDegree) {
    throw Error(ErrorCode::kUnsupportedDegree, "n=" + std::to_string(n));
  }
  for (std::uint32_t p = 1u << n;; ++p) {
    if (is_irreducible(p)) return p;
  }
}

Field::Field(unsigned n, std::optional<std::uint32_t> modulus) : n_(n), q_(0), modulus_(0) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(ErrorCode::kUnsupportedDegree, "n=" + std::to_string(n) + " outside [2,16]");
  }
  q_ = 1u << n;
  if (modulus) {
    if (*modulus < 2 || poly_degree(*modulus) != n) {
      throw Error(ErrorCode::kInvalidSpec,
                  "modulus " + hex(*modulus) + " does not have degree " + std::to_string(n));
    }
    if (!is_irreducible(*modulus)) {
      throw Error(ErrorCode::kReducibleModulus, hex(*modulus) + " factors over F_2");
    }
    modulus_ = *modulus;
  } else {
    modulus_ = default_modulus(n);
  }

  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto pow_poly = [this](Element x, std::uint32_t e) {
    Element r = 1;
    while (e != 0) {
      if (e & 1u) r = mul_poly(r, x);
      x = mul_poly(x, x);
      e >>= 1;
    }
    return r;
  };
  for (Element g = 2; g < q_ && generator_ == 0; ++g) {
    bool primitive = true;
    for (auto p : factors) {
      if (pow_poly(g, order / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator_ = g;
  }
  // F_4: the only candidates are 2 and 3, both primitive, so the loop above
  // always succeeds for n >= 2.

  log_.assign(q_, 0);
  antilog_.assign(2 * static_cast<std::size_t>(order), 0);
  Element x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    antilog_[i] = x;
    antilog_[i + order] = x;
    log_[x] = i;
    x = mul_poly(x, generator_);
  }

  ordering_.resize(q_);
  position_.resize(q_);
  ordering_[0] = 0;
  position_[0] = 0;
  for (std::uint32_t i = 1; i < q_; ++i) {
    ordering_[i] = antilog_[i - 1];
    position_[ordering_[i]] = i;
  }

  for (unsigned bit = 0; bit < n_; ++bit) {
    Element z = Element{1} << bit;
    Element acc = 0;
    for (unsigned i = 0; i < n_; ++i) {
      acc ^= z;
      z = mul_poly(z, z);
    }
    // acc is 0 or 1 (an element of F_2).
    if (acc == 1) trace_mask_ |= Element{1} << bit;
  }

  artin_schreier_.assign(q_, q_);
  for (Element y = 0; y < q_; ++y) {
    const Element t = mul(y, y) ^ y;
    if (artin_schreier_[t] == q_) artin_schreier_[t] = y;
  }
}

Element Field::mul_poly(Element x, Element y) const noexcept {
  Element r = 0;
  while (y != 0) {
    if (y & 1u) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x & q_) x ^= modulus_;
  }
  return r;
}

Element Field::inv(Element x) const {
  if (x == 0) throw Error(ErrorCode::kZeroInverse, "inverse of 0");
  return antilog_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

Element Field::pow(Element x, std::uint64_t d) const noexcept {
  if (d == 0) return 1;
  if (x == 0) return 0;
  if (d == q_ - 2) return antilog_[(q_ - 1 - log_[x]) % (q_ - 1)];
  Element r = 1;
  while (d != 0) {
    if (d & 1u) r = mul(r, x);
    x = mul(x, x);
    d >>= 1;
  }
  return r;
}

Element Field::sqrt(Element x) const noexcept {
  for (unsigned i = 1; i < n_; ++i) x = mul(x, x);
  return x;
}

int Field::trace(Element x) const noexcept { return std::popcount(x & trace_mask_) & 1; }

std::vector<Element> Field::solve_quadratic(Element a, Element b, Element c) const {
  if (a == 0 && b == 0) {
    if (c == 0) throw Error(ErrorCode::kDegenerateAllZero, "0*x^2 + 0*x + 0 vanishes everywhere");
    return {};
  }
  if (a == 0) return {div(c, b)};
  if (b == 0) return {sqrt(div(c, a))};
  // x = (b/a) y turns the equation into y^2 + y = ac/b^2.
  const Element t = div(mul(a, c), mul(b, b));
  const Element y = artin_schreier_[t];
  if (y == q_) return {};
  const Element scale = div(b, a);
  Element r0 = mul(scale, y);
  Element r1 = mul(scale, y ^ 1u);
  if (r1 < r0) std::swap(r0, r1);
  return {r0, r1};
}

std::uint32_t Field::log(Element x) const {
  if (x == 0 || x >= q_) throw Error(ErrorCode::kIndexOutOfRange, "log of " + hex(x));
  return log_[x];
}

Element Field::omega() const {
  if (n_ % 2 != 0) throw Error(ErrorCode::kOddN, "F_4 is not a subfield for odd n");
  return antilog_[(q_ - 1) / 3];
}

FieldPtr make_field(unsigned n, std::optional<std::uint32_t> modulus) {
  return std::make_shared<const Field>(n, modulus);
}

std::int64_t kloosterman(unsigned n) {
  if (n < 1 || n > 40) throw Error(ErrorCode::kUnsupportedDegree, "kloosterman n=" + std::to_string(n));
  i128 sum = 0;
  i128 binom = 1;  // C(n, k), walked over k = 0..n
  i128 seven = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      const unsigned i = k / 2;
      sum += (i % 2 == 0 ? binom : -binom) * seven;
      seven *= 7;
    }
    binom = binom * (n - k) / (k + 1);
  }
  const i128 denom = i128{1} << (n - 1);
  if (sum % denom != 0) throw Error(ErrorCode::kNonIntegralCount, "kloosterman division not exact");
  const i128 quotient = sum / denom;
  return static_cast<std::int64_t>(1 + ((n - 1) % 2 == 0 ? quotient : -quotient));
}

int divides_indicator(std::int64_t a, std::int64_t b) {
  if (a < 1) throw Error(ErrorCode::kIndexOutOfRange, "divisor must be >= 1");
  return b % a == 0 ? 1 : 0;
}

}  // namespace apnkit
