#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace apnkit {

/// Field element in the polynomial basis: bit i is the coefficient of x^i.
using Element = std::uint32_t;

/// GF(2^n) for 2 <= n <= 16, built once and shared read-only.
///
/// Besides the log/antilog tables the context fixes the canonical element
/// ordering used by every report: position 0 holds 0 and position i >= 1
/// holds zeta^(i-1), where zeta is the generator.
class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 16;

  /// Throws UnsupportedDegree when n is out of range and ReducibleModulus when
  /// the supplied polynomial (bit-encoded, degree n) factors over F_2. Without
  /// a modulus the smallest irreducible polynomial of degree n is used.
  explicit Field(unsigned n, std::optional<std::uint32_t> modulus = std::nullopt);

  unsigned degree() const noexcept { return n_; }
  /// q = 2^n.
  std::uint32_t size() const noexcept { return q_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// Smallest primitive element by integer encoding.
  Element generator() const noexcept { return generator_; }
  bool contains(Element x) const noexcept { return x < q_; }

  static Element add(Element x, Element y) noexcept { return x ^ y; }

  /// Table multiplication through discrete logs.
  Element mul(Element x, Element y) const noexcept {
    if (x == 0 || y == 0) return 0;
    return antilog_[log_[x] + log_[y]];
  }
  /// Shift-and-add multiplication with reduction by the modulus; independent
  /// of the tables.
  Element mul_poly(Element x, Element y) const noexcept;

  /// Throws ZeroInverse for 0.
  Element inv(Element x) const;
  /// x^d by square-and-multiply; 0^0 = 1 and 0^d = 0 for d > 0, so the
  /// exponent q-2 maps 0 to 0.
  Element pow(Element x, std::uint64_t d) const noexcept;
  Element square(Element x) const noexcept { return mul(x, x); }
  /// The unique square root, x^(2^(n-1)).
  Element sqrt(Element x) const noexcept;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }

  /// Absolute trace, 0 or 1.
  int trace(Element x) const noexcept;

  /// Root set of a*x^2 + b*x + c, ascending. Throws DegenerateAllZero when
  /// a = b = c = 0.
  std::vector<Element> solve_quadratic(Element a, Element b, Element c) const;

  /// Discrete log base zeta; x must be nonzero.
  std::uint32_t log(Element x) const;
  /// zeta^e.
  Element exp(std::uint64_t e) const noexcept { return antilog_[e % (q_ - 1)]; }

  std::span<const Element> ordering() const noexcept { return ordering_; }
  /// Position of x in the canonical ordering.
  std::uint32_t position(Element x) const noexcept { return position_[x]; }

  /// zeta^((q-1)/3), a fixed element of F_4 \ F_2. Throws OddN for odd n.
  Element omega() const;

 private:
  unsigned n_;
  std::uint32_t q_;
  std::uint32_t modulus_;
  Element generator_ = 0;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Element> antilog_;  // length 2(q-1) so mul needs no reduction
  std::vector<Element> ordering_;
  std::vector<std::uint32_t> position_;
  // For each t, a root y of y^2 + y = t (the smaller of the two), or q_ if none.
  std::vector<Element> artin_schreier_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned n, std::optional<std::uint32_t> modulus = std::nullopt);

bool is_irreducible(std::uint32_t poly);
/// Smallest irreducible polynomial of degree n by integer encoding.
std::uint32_t default_modulus(unsigned n);

/// Integer Kloosterman value K(n) = 1 + (-1)^(n-1)/2^(n-1) * sum_{i=0}^{n/2} (-1)^i C(n,2i) 7^i,
/// evaluated exactly; defined for 1 <= n <= 40.
std::int64_t kloosterman(unsigned n);

/// 1 when a divides b, else 0; a >= 1.
int divides_indicator(std::int64_t a, std::int64_t b);

}  // namespace apnkit
