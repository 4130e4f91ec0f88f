#include <gtest/gtest.h>

#include <algorithm>

#include "apnkit/diffcore.hpp"
#include "apnkit/flats.hpp"
#include "apnkit/functions.hpp"
#include "apnkit/spectra.hpp"
#include "apnkit_cli/golden_tables.hpp"

using namespace apnkit;

namespace {

template <typename Table>
void expect_square(const Field& f, const DiffSquare& sq, const Table& expected) {
  for (std::uint32_t i = 0; i < 15; ++i) {
    const auto row = sq.canonical_row(i);
    for (std::uint32_t j = 0; j < 16; ++j) {
      EXPECT_EQ(row[j], f.exp(static_cast<std::uint32_t>(expected[i][j]))) << "row z^" << i << " col " << j;
    }
  }
}

}  // namespace

TEST(Golden, ModifiedInverseSquare) {
  auto f = make_field(4, 0x13);
  ASSERT_EQ(f->generator(), 2u);
  const auto g = modified_inverse(f, {{0, f->generator()}});
  const auto sq = difference_square(g);
  expect_square(*f, sq, golden::kModifiedInverse);
  const auto marks = marked_rows(g);
  for (std::uint32_t i = 0; i < 15; ++i) {
    const auto& m = marks[f->exp(i) - 1];
    const auto row = sq.canonical_row(i);
    for (std::uint32_t j = 0; j < 16; ++j) {
      const bool circled = std::find(m.begin(), m.end(), row[j]) != m.end();
      EXPECT_EQ(circled, golden::kModifiedInverseCircled[i][j]) << "row z^" << i << " col " << j;
    }
  }
}

TEST(Golden, InverseSquare) {
  auto f = make_field(4, 0x13);
  auto expected = golden::kInverse;
  // Printed as z^5; D_{z^10}(z^12) = z^10.
  ASSERT_EQ(expected[10][13], 5);
  expected[10][13] = 10;
  const auto g = inverse_map(f);
  const auto sq = difference_square(g);
  expect_square(*f, sq, expected);
  EXPECT_NE(sq.canonical_row(10)[13], f->exp(5));
  // Every row of the inverse carries one value four times: 1/a.
  for (std::uint32_t i = 0; i < 15; ++i) {
    const auto row = sq.canonical_row(i);
    EXPECT_EQ(std::count(row.begin(), row.end(), f->inv(f->exp(i))), 4);
  }
  EXPECT_EQ(vanishing_flats(g).size(), 5u);
}

TEST(Golden, SquaresDependOnModulus) {
  auto f = make_field(4, 0x19);  // x^4 + x^3 + 1
  const auto sq = difference_square(modified_inverse(f, {{0, f->generator()}}));
  bool all_match = true;
  for (std::uint32_t i = 0; i < 15 && all_match; ++i) {
    const auto row = sq.canonical_row(i);
    for (std::uint32_t j = 0; j < 16; ++j) {
      all_match = all_match && row[j] == f->exp(static_cast<std::uint32_t>(golden::kModifiedInverse[i][j]));
    }
  }
  EXPECT_FALSE(all_match);
}
