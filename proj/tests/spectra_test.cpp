#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "apnkit/diffcore.hpp"
#include "apnkit/error.hpp"
#include "apnkit/functions.hpp"
#include "apnkit/spectra.hpp"
#include "support/oracle.hpp"

using namespace apnkit;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no apnkit::Error thrown";
  return ErrorCode::kInvalidSpec;
}

}  // namespace

TEST(Spectra, BasicFamilies) {
  for (unsigned n : {4u, 6u, 8u}) {
    auto f = make_field(n);
    const auto r = spectra_report(inverse_map(f));
    EXPECT_TRUE(r.row_spec.empty());
    EXPECT_TRUE(r.col_spec.empty());
    EXPECT_FALSE(r.is_apn);
  }
  auto f5 = make_field(5);
  const auto r = spectra_report(gold(f5, 1));
  EXPECT_EQ(r.row_spec.size(), 31u);
  EXPECT_EQ(r.col_spec.size(), 32u);
  EXPECT_TRUE(r.is_apn);
  for (unsigned n : {3u, 5u, 7u}) {
    auto f = make_field(n);
    for (Element alpha = 1; alpha < f->size(); alpha += 3) {
      EXPECT_TRUE(column_spectrum(modified_inverse(f, {{0, alpha}})).empty());
    }
  }
}

TEST(Spectra, SortedCanonically) {
  auto f = make_field(4);
  const auto rs = row_spectrum(modified_inverse(f, {{0, f->generator()}}));
  for (std::size_t i = 1; i < rs.size(); ++i) EXPECT_LT(f->position(rs[i - 1]), f->position(rs[i]));
}

TEST(Spectra, ApnIffFullSpectra) {
  std::mt19937_64 rng(17);
  for (unsigned n = 3; n <= 6; ++n) {
    auto f = make_field(n);
    for (std::uint64_t d = 1; d < f->size(); ++d) {
      const auto r = spectra_report(from_power(f, d));
      const bool apn = delta_uniformity(from_power(f, d)) == 2;
      EXPECT_EQ(r.is_apn, apn);
      EXPECT_EQ(r.row_spec.size() == f->size() - 1, apn);
      EXPECT_EQ(r.col_spec.size() == f->size(), apn);
    }
  }
}

TEST(Spectra, DefinitionalConsistency) {
  std::mt19937_64 rng(19);
  for (unsigned n = 2; n <= 6; ++n) {
    auto f = make_field(n);
    for (int trial = 0; trial < 4; ++trial) {
      const auto t = trial % 2 ? oracle::random_table(n, rng) : oracle::random_permutation(n, rng);
      const FuncTable g(f, t);
      const auto marks = marked_rows(g);
      ElementSet expected_rows;
      for (Element a = 1; a < f->size(); ++a) {
        if (marks[a - 1].empty()) expected_rows.push_back(a);
        ASSERT_EQ(marks[a - 1].empty(), oracle::row_is_two_to_one(t, a));
      }
      sort_canonical(*f, expected_rows);
      EXPECT_EQ(row_spectrum(g), expected_rows);
      ElementSet expected_cols;
      for (Element x = 0; x < f->size(); ++x) {
        // no circled entry in column x
        bool clean = true;
        for (Element a = 1; a < f->size(); ++a) {
          const auto& m = marks[a - 1];
          if (std::find(m.begin(), m.end(), g(x) ^ g(x ^ a)) != m.end()) clean = false;
        }
        ASSERT_EQ(clean, oracle::column_is_good(t, x));
        if (clean) expected_cols.push_back(x);
      }
      sort_canonical(*f, expected_cols);
      EXPECT_EQ(column_spectrum(g), expected_cols);
      EXPECT_EQ(column_spectrum(g, 3), expected_cols);
    }
  }
}

TEST(Spectra, PredictedModifiedInverseSpectraFullSweep) {
  for (unsigned n = 3; n <= 8; ++n) {
    auto f = make_field(n);
    for (Element alpha = 1; alpha < f->size(); ++alpha) {
      const auto g = modified_inverse(f, {{0, alpha}});
      ASSERT_EQ(row_spectrum(g), predicted_row_spectrum_f0a(*f, alpha)) << n << " " << alpha;
      ASSERT_EQ(column_spectrum(g), predicted_column_spectrum_f0a(*f, alpha)) << n << " " << alpha;
    }
  }
}

TEST(Spectra, PredictedModifiedInverseSpectraSampled) {
  std::mt19937_64 rng(23);
  for (unsigned n : {9u, 10u}) {
    auto f = make_field(n);
    std::uniform_int_distribution<Element> dist(1, f->size() - 1);
    for (int i = 0; i < 3; ++i) {
      const Element alpha = dist(rng);
      const auto g = modified_inverse(f, {{0, alpha}});
      EXPECT_EQ(row_spectrum(g), predicted_row_spectrum_f0a(*f, alpha)) << n << " " << alpha;
      EXPECT_EQ(column_spectrum(g), predicted_column_spectrum_f0a(*f, alpha)) << n << " " << alpha;
    }
  }
}

TEST(Spectra, SixBitRowSpectrumSize) {
  auto f = make_field(6);
  for (Element alpha = 1; alpha < f->size(); ++alpha) EXPECT_EQ(predicted_row_spectrum_f0a(*f, alpha).size(), 12u);
  EXPECT_EQ(code_of([&] { predicted_row_spectrum_f0a(*f, 0); }), ErrorCode::kZeroAlpha);
  EXPECT_EQ(code_of([&] { predicted_column_spectrum_f0a(*f, 0); }), ErrorCode::kZeroAlpha);
}

TEST(Spectra, JwrTriples) {
  auto f5 = make_field(5);
  EXPECT_TRUE(jwr_violating_triples(gold(f5, 1)).empty());
  auto f4 = make_field(4);
  EXPECT_FALSE(jwr_violating_triples(inverse_map(f4)).empty());
  // Linear: every triple violates.
  const auto lin = jwr_violating_triples(from_power(f4, 2));
  EXPECT_EQ(lin.size(), 16u * 15 * 14 / 6);
  std::mt19937_64 rng(29);
  for (unsigned n = 2; n <= 6; ++n) {
    auto f = make_field(n);
    for (std::uint64_t d = 1; d < f->size(); ++d) {
      const auto g = from_power(f, d);
      EXPECT_EQ(jwr_violating_triples(g).empty(), delta_uniformity(g) == 2) << n << " " << d;
    }
    const FuncTable r(f, oracle::random_table(n, rng));
    EXPECT_EQ(jwr_violating_triples(r).empty(), delta_uniformity(r) == 2);
  }
}

TEST(Spectra, LocallyApn) {
  for (unsigned n : {4u, 6u, 8u}) {
    auto f = make_field(n);
    EXPECT_TRUE(is_locally_apn(inverse_map(f)));
  }
  auto f4 = make_field(4);
  EXPECT_FALSE(is_locally_apn(gold(f4, 2)));
  auto f6 = make_field(6);
  EXPECT_FALSE(is_locally_apn(gold(f6, 2)));
  EXPECT_FALSE(is_locally_apn(gold(f6, 3)));
  // D_1 of x is the constant 1, so only b = 1 is hit and the condition is vacuous.
  for (unsigned n = 2; n <= 6; ++n) EXPECT_TRUE(is_locally_apn(from_power(make_field(n), 1)));
  for (unsigned n = 3; n <= 6; ++n) {
    auto f = make_field(n);
    for (std::uint64_t d = 1; d < f->size() - 1; ++d) {
      const auto g = from_power(f, d);
      const auto t = ddt(g);
      bool expected = true;
      for (Element b = 2; b < f->size(); ++b) expected = expected && t.at(1, b) <= 2;
      EXPECT_EQ(is_locally_apn(g), expected) << n << " " << d;
    }
  }
  const FuncTable not_power(f4, std::vector<Element>(16, 1));
  EXPECT_EQ(code_of([&] { is_locally_apn(not_power); }), ErrorCode::kNotAPowerFunction);
  EXPECT_EQ(code_of([&] { power_equivalences_check(not_power); }), ErrorCode::kNotAPowerFunction);
}

TEST(Spectra, PowerEquivalencesHoldForAllExponents) {
  for (unsigned n = 4; n <= 8; ++n) {
    auto f = make_field(n);
    for (std::uint64_t d = 0; d < f->size() - 1; ++d) {
      const auto e = power_equivalences_check(from_power(f, d));
      EXPECT_EQ(e.apn, e.p1) << n << " " << d;
      EXPECT_EQ(e.apn, e.one_papn) << n << " " << d;
      EXPECT_EQ(e.apn, e.s1_full) << n << " " << d;
    }
  }
  auto f5 = make_field(5);
  const auto g = power_equivalences_check(gold(f5, 1));
  EXPECT_TRUE(g.apn && g.p1 && g.one_papn && g.s1_full);
  auto f4 = make_field(4);
  for (const auto& fn : {inverse_map(f4), from_power(f4, 5)}) {
    const auto e = power_equivalences_check(fn);
    EXPECT_FALSE(e.apn || e.p1 || e.one_papn || e.s1_full);
  }
}

TEST(Spectra, LocalApnImplications) {
  for (unsigned n : {4u, 6u, 8u}) {
    const auto r = locally_apn_implications(inverse_map(make_field(n)));
    EXPECT_TRUE(r.locally_apn);
    EXPECT_FALSE(r.zero_papn);
    EXPECT_FALSE(r.apn);
    EXPECT_EQ(r.delta, 4u);
  }
  const auto gold5 = locally_apn_implications(gold(make_field(5), 1));
  EXPECT_TRUE(gold5.locally_apn && gold5.zero_papn && gold5.apn);
  auto f4 = make_field(4);
  EXPECT_EQ(code_of([&] { locally_apn_implications(from_power(f4, 3)); }), ErrorCode::kNotAPermutation);
  for (unsigned n = 2; n <= 8; ++n) {
    auto f = make_field(n);
    for (std::uint64_t d = 1; d < f->size() - 1; ++d) {
      if (std::gcd<std::uint64_t>(d, f->size() - 1) != 1) continue;
      const auto r = locally_apn_implications(from_power(f, d));
      if (r.locally_apn && r.delta >= 4) EXPECT_FALSE(r.zero_papn) << n << " " << d;
      if (r.locally_apn && r.zero_papn) EXPECT_TRUE(r.apn) << n << " " << d;
    }
  }
}
