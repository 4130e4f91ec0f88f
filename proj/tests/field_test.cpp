#include <gtest/gtest.h>

#include <set>

#include "apnkit/error.hpp"
#include "apnkit/field.hpp"
#include "support/oracle.hpp"

using namespace apnkit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no apnkit::Error thrown";
  return ErrorCode::kInvalidSpec;
}

}  // namespace

TEST(Field, DefaultModulusIsSmallestIrreducible) {
  for (unsigned n = 2; n <= 16; ++n) {
    std::uint32_t expected = 0;
    for (std::uint32_t p = 1u << n; p < (2u << n); ++p) {
      if (oracle::irreducible(p)) {
        expected = p;
        break;
      }
    }
    EXPECT_EQ(default_modulus(n), expected) << "n=" << n;
  }
  EXPECT_EQ(default_modulus(4), 0x13u);
  EXPECT_EQ(Field(4).modulus(), 0x13u);
}

TEST(Field, FrozenDefaultModuli) {
  // Frozen from the trial-division sieve above.
  const std::uint32_t expected[] = {0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
                                    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,
                                    0x1002b};
  for (unsigned n = 2; n <= 16; ++n) EXPECT_EQ(default_modulus(n), expected[n - 2]) << n;
}

TEST(Field, RejectsBadInput) {
  EXPECT_EQ(code_of([] { Field f(4, 0x14); }), ErrorCode::kReducibleModulus);  // x^4 + x^2
  EXPECT_EQ(code_of([] { Field f(1); }), ErrorCode::kUnsupportedDegree);
  EXPECT_EQ(code_of([] { Field f(17); }), ErrorCode::kUnsupportedDegree);
  EXPECT_EQ(code_of([] { Field f(4, 0x25); }), ErrorCode::kInvalidSpec);  // degree 5
  Field f(4);
  EXPECT_EQ(code_of([&] { f.inv(0); }), ErrorCode::kZeroInverse);
  EXPECT_EQ(code_of([&] { f.solve_quadratic(0, 0, 0); }), ErrorCode::kDegenerateAllZero);
  EXPECT_EQ(code_of([] { Field(5).omega(); }), ErrorCode::kOddN);
}

TEST(Field, SmallestField) {
  Field f(2);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.generator(), 2u);
  EXPECT_EQ(f.pow(f.generator(), 3), 1u);
  EXPECT_NE(f.pow(f.generator(), 1), 1u);
}

TEST(Field, GeneratorMatchesBruteForceOrder) {
  for (unsigned n = 2; n <= 10; ++n) {
    Field f(n);
    EXPECT_EQ(f.generator(), oracle::generator(n, f.modulus())) << n;
  }
}

TEST(Field, TablesAgreeWithPolynomialProduct) {
  for (unsigned n = 2; n <= 8; ++n) {
    Field f(n);
    for (Element x = 0; x < f.size(); ++x) {
      for (Element y = 0; y < f.size(); ++y) {
        ASSERT_EQ(f.mul(x, y), oracle::mul(x, y, f.modulus(), n));
        ASSERT_EQ(f.mul_poly(x, y), f.mul(x, y));
      }
    }
  }
}

TEST(Field, LogAntilogRoundTrip) {
  for (unsigned n = 2; n <= 12; ++n) {
    Field f(n);
    std::set<Element> seen;
    for (Element x = 1; x < f.size(); ++x) {
      ASSERT_EQ(f.exp(f.log(x)), x);
    }
    for (Element x : f.ordering()) seen.insert(x);
    EXPECT_EQ(seen.size(), f.size());
    EXPECT_EQ(f.ordering()[0], 0u);
    EXPECT_EQ(f.ordering()[1], 1u);
    EXPECT_EQ(f.ordering()[2], f.generator());
    for (std::uint32_t i = 0; i < f.size(); ++i) EXPECT_EQ(f.position(f.ordering()[i]), i);
  }
}

TEST(Field, AxiomsAndInverse) {
  for (unsigned n = 2; n <= 8; ++n) {
    Field f(n);
    for (Element x = 0; x < f.size(); ++x) {
      EXPECT_EQ(Field::add(x, x), 0u);
      if (x != 0) {
        EXPECT_EQ(f.mul(x, f.inv(x)), 1u);
        EXPECT_EQ(f.inv(x), oracle::inverse(x, f.modulus(), n));
      }
      EXPECT_EQ(f.pow(x, f.size() - 2), oracle::inverse(x, f.modulus(), n));
      EXPECT_EQ(f.square(f.sqrt(x)), x);
    }
    EXPECT_EQ(f.pow(0, f.size() - 2), 0u);
    EXPECT_EQ(f.pow(0, 0), 1u);
  }
}

TEST(Field, PowMatchesRepeatedProduct) {
  Field f(6);
  for (Element x = 0; x < f.size(); ++x) {
    for (std::uint64_t d : {0ull, 1ull, 2ull, 3ull, 7ull, 62ull, 63ull, 64ull, 1000ull}) {
      EXPECT_EQ(f.pow(x, d), oracle::slow_power(x, d, f.modulus(), 6)) << x << "^" << d;
    }
  }
}

TEST(Field, TraceLinearAndBalanced) {
  for (unsigned n = 2; n <= 8; ++n) {
    Field f(n);
    for (Element x = 0; x < f.size(); ++x) {
      ASSERT_EQ(static_cast<std::uint32_t>(f.trace(x)), oracle::trace(x, f.modulus(), n));
      for (Element y = 0; y < f.size(); ++y) ASSERT_EQ(f.trace(x ^ y), f.trace(x) ^ f.trace(y));
    }
  }
  for (unsigned n = 2; n <= 16; ++n) {
    Field f(n);
    std::uint32_t zeros = 0;
    for (Element x = 0; x < f.size(); ++x) zeros += f.trace(x) == 0;
    EXPECT_EQ(zeros, f.size() / 2) << n;
    EXPECT_EQ(f.trace(0), 0);
    EXPECT_EQ(f.trace(1), static_cast<int>(n % 2));
  }
  Field f4(4);
  EXPECT_EQ(f4.omega(), f4.exp(5));
  EXPECT_EQ(f4.trace(f4.omega()), 0);
}

TEST(Field, QuadraticRootsMatchExhaustiveSearch) {
  for (unsigned n = 2; n <= 5; ++n) {
    Field f(n);
    for (Element a = 0; a < f.size(); ++a) {
      for (Element b = 0; b < f.size(); ++b) {
        for (Element c = 0; c < f.size(); ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          std::vector<Element> expected;
          for (Element x = 0; x < f.size(); ++x) {
            if ((f.mul(a, f.mul(x, x)) ^ f.mul(b, x) ^ c) == 0) expected.push_back(x);
          }
          ASSERT_EQ(f.solve_quadratic(a, b, c), expected) << n << " " << a << " " << b << " " << c;
        }
      }
    }
  }
}

TEST(Field, QuadraticExamples) {
  Field f3(3);
  EXPECT_EQ(f3.solve_quadratic(1, 1, 0), (std::vector<Element>{0, 1}));
  EXPECT_TRUE(f3.solve_quadratic(1, 1, 1).empty());
  Field f4(4);
  const auto roots = f4.solve_quadratic(1, 1, f4.omega());
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0] ^ 1u, roots[1]);
}

TEST(Field, KloostermanMatchesDirectSum) {
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(kloosterman(n), oracle::kloosterman(n)) << n;
  // Frozen values.
  const std::int64_t expected[] = {4, -4, 0, 12, -8, -12, 32, -4, -56};
  for (unsigned n = 2; n <= 10; ++n) EXPECT_EQ(kloosterman(n), expected[n - 2]) << n;
}

TEST(Field, DividesIndicator) {
  EXPECT_EQ(divides_indicator(2, 4), 1);
  EXPECT_EQ(divides_indicator(3, 4), 0);
  EXPECT_EQ(divides_indicator(4, 8), 1);
  EXPECT_EQ(code_of([] { divides_indicator(0, 3); }), ErrorCode::kIndexOutOfRange);
}
