#include "apnkit_cli/checks.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "apnkit/defect.hpp"
#include "apnkit/diffcore.hpp"
#include "apnkit/flats.hpp"
#include "apnkit/functions.hpp"
#include "apnkit/spectra.hpp"
#include "apnkit/power_families.hpp"
#include "apnkit_cli/golden_tables.hpp"
#include "apnkit_cli/render.hpp"

namespace apnkit::cli {
namespace {

class Recorder {
 public:
  explicit Recorder(int criterion) : criterion_(criterion) {}

  void eq(std::string tag, std::string instance, std::int64_t expected, std::int64_t measured) {
    add(std::move(tag), std::move(instance), std::to_string(expected), std::to_string(measured), expected == measured);
  }

  void add(std::string tag, std::string instance, std::string expected, std::string measured, bool pass) {
    out_.push_back({criterion_, std::move(tag), std::move(instance), std::move(expected), std::move(measured), pass});
  }

  // Count-style check: "all N instances agree".
  void all(std::string tag, std::string instance, std::int64_t total, std::int64_t good) {
    add(std::move(tag), std::move(instance), std::to_string(total) + "/" + std::to_string(total),
        std::to_string(good) + "/" + std::to_string(total), total == good);
  }

  std::vector<Check> take() { return std::move(out_); }

 private:
  int criterion_;
  std::vector<Check> out_;
};

std::string at_n(unsigned n) { return "n=" + std::to_string(n); }

std::string labels(const FieldPtr& f, std::span<const Element> xs) {
  const Labeler l(f, false);
  return "{" + join(l.all(xs), ",") + "}";
}

std::vector<Element> random_table(std::uint32_t q, std::mt19937_64& rng) {
  std::vector<Element> t(q);
  for (auto& v : t) v = static_cast<Element>(rng() % q);
  return t;
}

std::int64_t q_of(unsigned n) { return std::int64_t{1} << n; }

bool same_values(const FuncTable& a, const FuncTable& b) {
  return std::ranges::equal(a.values(), b.values());
}

template <typename Table>
std::int64_t square_mismatches(const Field& f, const DiffSquare& sq, const Table& expected) {
  std::int64_t bad = 0;
  for (std::uint32_t i = 0; i < 15; ++i) {
    const auto row = sq.canonical_row(i);
    for (std::uint32_t j = 0; j < 16; ++j) bad += row[j] != f.exp(static_cast<std::uint32_t>(expected[i][j]));
  }
  return bad;
}

// Named functions shared by several criteria.
struct Named {
  std::string name;
  FuncTable g;
};

struct TableRow {
  PowerFamily family;
  unsigned n;
  unsigned t;
};

constexpr std::array<TableRow, 10> kTableRows = {{
    {PowerFamily::kInverse, 4, 0},
    {PowerFamily::kInverse, 6, 0},
    {PowerFamily::kInverse, 8, 0},
    {PowerFamily::kGold, 4, 2},
    {PowerFamily::kGold, 6, 3},
    {PowerFamily::kSeven, 6, 0},
    {PowerFamily::kSeven, 7, 0},
    {PowerFamily::kSeven, 8, 0},
    {PowerFamily::kHalfMinusOne, 6, 0},
    {PowerFamily::kHalfMinusOne, 8, 0},
}};

std::string row_name(const TableRow& row) {
  return std::string(to_string(row.family)) + " " + at_n(row.n) + (row.t ? " t=" + std::to_string(row.t) : "");
}

FuncTable row_function(const TableRow& row) {
  return from_power(make_field(row.n), family_exponent(row.family, row.n, {row.t}));
}

std::vector<Named> small_named_functions(unsigned n) {
  auto f = make_field(n);
  std::vector<Named> out;
  out.push_back({"inverse " + at_n(n), inverse_map(f)});
  out.push_back({"x " + at_n(n), from_power(f, 1)});
  out.push_back({"x^3 " + at_n(n), from_power(f, 3)});
  if (7 < f->size() - 1) out.push_back({"x^7 " + at_n(n), from_power(f, 7)});
  out.push_back({"modinv 0,z " + at_n(n), modified_inverse(f, {{0, f->generator()}})});
  for (unsigned t = 1; t <= n / 2; ++t) out.push_back({"gold t=" + std::to_string(t) + " " + at_n(n), gold(f, t)});
  for (PowerFamily fam : all_power_families()) {
    for (unsigned t = 0; t <= n / 2; ++t) {
      if (is_applicable(fam, n, {t})) {
        out.push_back({std::string(to_string(fam)) + " t=" + std::to_string(t) + " " + at_n(n),
                       from_power(f, family_exponent(fam, n, {t}))});
      }
    }
  }
  return out;
}

std::vector<Check> c1(const SuiteOptions& o) {
  Recorder r(1);
  auto f = make_field(4, 0x13);
  const Element z = f->generator();
  const auto g = modified_inverse(f, {{0, z}});
  std::vector<Element> rows = {f->exp(2), f->exp(3), f->exp(5), f->exp(9)};
  std::vector<Element> cols = {1, f->exp(2), f->exp(3), f->exp(5), f->exp(8), f->exp(9), f->exp(12), f->exp(14)};
  const auto rs = row_spectrum(g, o.jobs);
  const auto cs = column_spectrum(g, o.jobs);
  r.add("row-spectrum", "modinv 0,z n=4", labels(f, rows), labels(f, rs), rs == rows);
  r.add("column-spectrum", "modinv 0,z n=4", labels(f, cols), labels(f, cs), cs == cols);
  r.eq("delta", "modinv 0,z n=4", 6, delta_uniformity(g, o.jobs));
  const auto sq = difference_square(g, o.jobs);
  r.eq("square-cells", "modinv 0,z n=4 mismatching cells", 0, square_mismatches(*f, sq, golden::kModifiedInverse));
  const auto marks = marked_rows(g, o.jobs);
  std::int64_t bad = 0;
  for (std::uint32_t i = 0; i < 15; ++i) {
    const auto& m = marks[f->exp(i) - 1];
    const auto row = sq.canonical_row(i);
    for (std::uint32_t j = 0; j < 16; ++j) {
      const bool circled = std::find(m.begin(), m.end(), row[j]) != m.end();
      bad += circled != golden::kModifiedInverseCircled[i][j];
    }
  }
  r.eq("marked-mask", "modinv 0,z n=4 mismatching cells", 0, bad);
  return r.take();
}

std::vector<Check> c2(const SuiteOptions& o) {
  Recorder r(2);
  auto f = make_field(4, 0x13);
  const auto g = inverse_map(f);
  r.eq("delta", "inverse n=4", 4, delta_uniformity(g, o.jobs));
  std::vector<Flat> listed;
  for (std::uint32_t i = 0; i < 5; ++i) listed.push_back(make_flat(0, f->exp(i), f->exp(i + 5), f->exp(i + 10)));
  std::sort(listed.begin(), listed.end());
  const auto vf = vanishing_flats(g, o.jobs);
  r.add("vanishing-flats", "inverse n=4", "5 listed flats", std::to_string(vf.size()) + " flats",
        vf.flats == listed);
  std::int64_t good = 0;
  for (Element a = 1; a < 16; ++a) good += (g(0) ^ g(a)) == f->inv(a);
  r.all("derivative-at-zero", "inverse n=4 all a", 15, good);
  auto corrected = golden::kInverse;
  corrected[10][13] = 10;
  const auto sq = difference_square(g, o.jobs);
  r.eq("square-cells", "inverse n=4 mismatching cells (bad cell [10][13] corrected)", 0,
       square_mismatches(*f, sq, corrected));
  r.eq("square-bad-cell", "inverse n=4 cells differing from the stored table", 1,
       square_mismatches(*f, sq, golden::kInverse));
  return r.take();
}

std::vector<Check> c3(const SuiteOptions& o) {
  Recorder r(3);
  for (unsigned n : {4u, 6u, 8u, 10u}) {
    const auto def = d_value(inverse_map(make_field(n)), o.jobs).apn_defect;
    r.eq("inverse-defect", "inverse " + at_n(n), 9 * (q_of(n) - 1), def);
  }
  return r.take();
}

std::vector<Check> c4(const SuiteOptions& o) {
  Recorder r(4);
  {
    auto f = make_field(4);
    std::int64_t good = 0;
    for (Element a = 1; a < f->size(); ++a) good += d_value(modified_inverse(f, {{0, a}}), o.jobs).apn_defect == 113;
    r.all("modinv-defect-113", "n=4 all alpha", 15, good);
  }
  {
    auto f = make_field(6);
    std::int64_t good = 0;
    for (Element a = 1; a < f->size(); ++a) good += row_spectrum(modified_inverse(f, {{0, a}}), o.jobs).size() == 12;
    r.all("modinv-row-spectrum-12", "n=6 all alpha", 63, good);
  }
  for (unsigned n : {6u, 10u}) {
    auto f = make_field(n);
    const auto inv = d_value(inverse_map(f), o.jobs).apn_defect;
    for (std::uint32_t e : {0u, 1u, 7u}) {
      const Element alpha = f->exp(e);
      const auto mod = d_value(modified_inverse(f, {{0, alpha}}), o.jobs).apn_defect;
      r.add("modinv-differs-from-inverse", at_n(n) + " alpha=" + Labeler(f, false)(alpha), "!= " + std::to_string(inv),
            std::to_string(mod), mod != inv);
    }
  }
  return r.take();
}

std::vector<Check> c5(const SuiteOptions& o) {
  Recorder r(5);
  const auto one = [&](const FieldPtr& f, Element alpha, std::int64_t& d_ok, std::int64_t& r_ok, std::int64_t& c_ok) {
    const auto g = modified_inverse(f, {{0, alpha}});
    d_ok += d_value(g, o.jobs).apn_defect == f0a_defect_closed_form(f->degree(), trace_counters_f0a(*f, alpha));
    r_ok += row_spectrum(g, o.jobs) == predicted_row_spectrum_f0a(*f, alpha);
    c_ok += column_spectrum(g, o.jobs) == predicted_column_spectrum_f0a(*f, alpha);
  };
  const unsigned top = std::min(o.n_max, 15u);
  for (unsigned n = 3; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t d_ok = 0, r_ok = 0, c_ok = 0;
    for (Element a = 1; a < f->size(); ++a) one(f, a, d_ok, r_ok, c_ok);
    const std::int64_t total = f->size() - 1;
    r.all("modinv-defect-closed-form", at_n(n) + " all alpha", total, d_ok);
    r.all("modinv-row-spectrum", at_n(n) + " all alpha", total, r_ok);
    r.all("modinv-column-spectrum", at_n(n) + " all alpha", total, c_ok);
  }
  const unsigned sampled = top + 1;
  if (sampled >= 3 && sampled <= 16) {
    auto f = make_field(sampled);
    std::mt19937_64 rng(o.seed);
    std::int64_t d_ok = 0, r_ok = 0, c_ok = 0;
    for (int i = 0; i < 3; ++i) one(f, 1 + static_cast<Element>(rng() % (f->size() - 1)), d_ok, r_ok, c_ok);
    r.all("modinv-defect-closed-form", at_n(sampled) + " 3 sampled alpha", 3, d_ok);
    r.all("modinv-row-spectrum", at_n(sampled) + " 3 sampled alpha", 3, r_ok);
    r.all("modinv-column-spectrum", at_n(sampled) + " 3 sampled alpha", 3, c_ok);
  }
  return r.take();
}

std::vector<Check> c6(const SuiteOptions& o) {
  Recorder r(6);
  for (unsigned n : {4u, 6u, 8u, 10u}) {
    auto f = make_field(n);
    const Element alpha = f->generator();
    const auto c = trace_counters_f0a(*f, alpha);
    const std::int64_t offset = n % 4 == 0 ? 4 : 0;
    r.eq("k-s-relation", at_n(n) + " k - s", offset, c.k - c.s);
    r.add("k-s-relation-predicate", at_n(n), "true", trace_counter_relation_check(n, c) ? "true" : "false",
          trace_counter_relation_check(n, c));
    const auto closed = f0a_defect_closed_form(n, c);
    r.eq("k-only-formula", at_n(n) + " vs trace-count closed form", closed, defect_from_k(n, c.k));
    r.eq("k-only-formula-brute", at_n(n) + " vs brute force",
         d_value(modified_inverse(f, {{0, alpha}}), o.jobs).apn_defect, defect_from_k(n, c.k));
  }
  return r.take();
}

std::vector<Check> c7(const SuiteOptions& o) {
  Recorder r(7);
  const std::pair<unsigned, unsigned> cases[] = {{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}};
  for (const auto& [n, t] : cases) {
    auto f = make_field(n);
    const std::int64_t q = f->size();
    const unsigned s = std::gcd(n, t);
    const std::int64_t expected = q * q - 1 + q * (q - 1) * (std::int64_t{1} << (s - 2));
    const auto g = gold(f, t);
    const std::string inst = at_n(n) + " t=" + std::to_string(t);
    r.eq("kernel-defect", inst, expected, do_closed_form(g));
    r.eq("kernel-defect-brute", inst, expected, d_value(g, o.jobs).apn_defect);
  }
  return r.take();
}

std::vector<Check> c8(const SuiteOptions& o) {
  Recorder r(8);
  for (unsigned n = 2; n <= std::min(o.n_max, 12u); ++n) {
    auto f = make_field(n);
    const std::int64_t q = f->size();
    for (unsigned t = 1; t <= n / 2; ++t) {
      const unsigned s = std::gcd(n, t);
      if (s < 2) continue;
      r.eq("two-valued-d", "gold " + at_n(n) + " t=" + std::to_string(t), two_valued_closed_form(n, s),
           d_value(gold(f, t), o.jobs).d_value);
    }
    for (unsigned i : std::set<unsigned>{0, 1, n - 1}) {
      const std::uint64_t d = std::uint64_t{1} << i;
      r.eq("two-valued-d", "x^" + std::to_string(d) + " " + at_n(n), -(q - 1) * q * q / 4,
           d_value(from_power(f, d), o.jobs).d_value);
    }
    r.eq("linear-extreme", at_n(n), -(q - 1) * q * q / 4, two_valued_closed_form(n, n));
  }
  return r.take();
}

std::vector<Check> c9(const SuiteOptions& o) {
  Recorder r(9);
  for (const auto& row : kTableRows) {
    const auto g = row_function(row);
    r.eq("table-row-d", row_name(row), family_d_value(row.family, row.n, {row.t}), d_value(g, o.jobs).d_value);
    std::map<std::uint32_t, std::uint64_t> omega;
    const bool uniform = diff_spectrum(g, o.jobs).normalized(omega);
    std::map<std::uint32_t, std::uint64_t> expected;
    for (const auto& [d, w] : family_spectrum(row.family, row.n, {row.t})) expected[d] = static_cast<std::uint64_t>(w);
    const bool ok = uniform && omega == expected;
    r.add("table-row-spectrum", row_name(row), "closed form", ok ? "equal" : "different", ok);
  }
  return r.take();
}

std::vector<Check> c10(const SuiteOptions& o) {
  Recorder r(10);
  const unsigned top = std::min(o.n_max, 12u);
  for (unsigned n = 2; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (std::uint64_t d = 0; d < f->size() - 1; ++d) good += defect_vf_identity_check(from_power(f, d), o.jobs).equal;
    r.all("defect-flat-identity", "all powers " + at_n(n), f->size() - 1, good);
  }
  for (unsigned n = 3; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (Element a = 1; a < f->size(); ++a) good += defect_vf_identity_check(modified_inverse(f, {{0, a}}), o.jobs).equal;
    r.all("defect-flat-identity", "modinv all alpha " + at_n(n), f->size() - 1, good);
  }
  std::mt19937_64 rng(o.seed);
  for (unsigned n : {4u, 5u, 6u}) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (unsigned i = 0; i < o.samples; ++i) {
      good += defect_vf_identity_check(FuncTable(f, random_table(f->size(), rng)), o.jobs).equal;
    }
    r.all("defect-flat-identity", "random tables " + at_n(n), o.samples, good);
  }
  return r.take();
}

std::vector<Check> c11(const SuiteOptions& o) {
  Recorder r(11);
  for (unsigned n : {4u, 6u, 8u}) {
    auto f = make_field(n);
    const std::int64_t inv = vanishing_flats(inverse_map(f), o.jobs).size();
    r.eq("inverse-flat-count", at_n(n), (q_of(n) - 1) / 3, inv);
    std::int64_t good = 0, formula_ok = 0;
    for (Element a = 1; a < f->size(); ++a) {
      const std::int64_t vf = vanishing_flats(modified_inverse(f, {{0, a}}), o.jobs).size();
      good += vf == inv;
      const auto c = trace_counters_f0a(*f, a);
      const std::int64_t k = static_cast<std::int64_t>(row_spectrum(modified_inverse(f, {{0, a}}), o.jobs).size());
      const std::int64_t num = n % 4 == 0 ? q_of(n) + c.s - k + 3 : q_of(n) + c.s - k - 1;
      formula_ok += num % 3 == 0 && num / 3 == vf;
    }
    r.all("modinv-flat-count-equals-inverse", at_n(n) + " all alpha", f->size() - 1, good);
    r.all("modinv-flat-count-formula", at_n(n) + " all alpha", f->size() - 1, formula_ok);
  }
  for (unsigned n : {3u, 5u, 7u}) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (Element a = 1; a < f->size(); ++a) {
      const auto c = trace_counters_f0a(*f, a);
      const std::int64_t num = q_of(n) + c.ell - c.k - 1;
      const std::int64_t vf = vanishing_flats(modified_inverse(f, {{0, a}}), o.jobs).size();
      good += num % 3 == 0 && num / 3 == vf;
    }
    r.all("modinv-flat-count-formula", at_n(n) + " all alpha", f->size() - 1, good);
  }
  for (unsigned n : {4u, 6u}) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (Element a = 1; a < f->size(); ++a) {
      good += closed_vf_f0a(*f, a).flats == vanishing_flats(modified_inverse(f, {{0, a}}), o.jobs).flats;
    }
    r.all("modinv-flat-construction", at_n(n) + " all alpha", f->size() - 1, good);
  }
  return r.take();
}

std::vector<Check> c12(const SuiteOptions& o) {
  Recorder r(12);
  const auto triple = [&](const FuncTable& g) {
    const auto vf = vanishing_flats(g, o.jobs);
    return vf.raw_count == 3 * vf.size();
  };
  {
    std::int64_t good = 0;
    for (const auto& row : kTableRows) good += triple(row_function(row));
    r.all("raw-count-three-times", "table rows", static_cast<std::int64_t>(kTableRows.size()), good);
  }
  const unsigned top = std::min(o.n_max, 12u);
  for (unsigned n = 2; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (std::uint64_t d = 0; d < f->size() - 1; ++d) good += triple(from_power(f, d));
    r.all("raw-count-three-times", "all powers " + at_n(n), f->size() - 1, good);
    if (n >= 3) {
      good = 0;
      for (Element a = 1; a < f->size(); ++a) good += triple(modified_inverse(f, {{0, a}}));
      r.all("raw-count-three-times", "modinv all alpha " + at_n(n), f->size() - 1, good);
    }
  }
  std::mt19937_64 rng(o.seed);
  for (unsigned n : {4u, 5u, 6u}) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (unsigned i = 0; i < o.samples; ++i) good += triple(FuncTable(f, random_table(f->size(), rng)));
    r.all("raw-count-three-times", "random tables " + at_n(n), o.samples, good);
  }
  return r.take();
}

std::vector<Check> c13(const SuiteOptions& o) {
  Recorder r(13);
  const unsigned top = std::min(o.n_max, 16u);
  for (unsigned n = 3; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (Element a = 1; a < f->size(); ++a) {
      good += same_values(eval_chain(f, transposition_chain_with_zero(*f, a)), modified_inverse(f, {{0, a}}));
    }
    r.all("two-step-chain", at_n(n) + " all alpha", f->size() - 1, good);
  }
  std::mt19937_64 rng(o.seed);
  for (unsigned n = 4; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (int i = 0; i < 100; ++i) {
      const Element a = 1 + static_cast<Element>(rng() % (f->size() - 1));
      Element b = a;
      while (b == a) b = 1 + static_cast<Element>(rng() % (f->size() - 1));
      good += same_values(eval_chain(f, transposition_chain(*f, a, b)), modified_inverse(f, {{a, b}}));
    }
    r.all("four-step-chain", at_n(n) + " 100 pairs", 100, good);
  }
  const unsigned two[] = {2, 2};
  const unsigned one[] = {2};
  r.eq("rank-formula", "two transpositions q=16", 7, carlitz_rank_formula(two, false, 16).k);
  r.eq("rank-formula", "one transposition q=16", 4, carlitz_rank_formula(one, false, 16).k);
  r.eq("rank-formula", "transposition with 0, q=8", 2, carlitz_rank_formula(one, true, 8).k);
  return r.take();
}

std::vector<Check> c14(const SuiteOptions& o) {
  Recorder r(14);
  const unsigned top = std::min(o.n_max, 12u);
  for (unsigned n = 4; n <= top; ++n) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (std::uint64_t d = 0; d < f->size() - 1; ++d) {
      const auto e = power_equivalences_check(from_power(f, d));
      good += e.apn == e.p1 && e.apn == e.one_papn && e.apn == e.s1_full;
    }
    r.all("power-equivalences", "all powers " + at_n(n), f->size() - 1, good);
  }
  for (unsigned n = 4; n <= top; n += 2) {
    const auto e = locally_apn_implications(inverse_map(make_field(n)));
    const bool ok = e.locally_apn && !e.zero_papn && !e.apn;
    r.add("inverse-local", "inverse " + at_n(n), "locally-APN, not 0-pAPN, not APN",
          std::string(e.locally_apn ? "locally-APN" : "not locally-APN") + (e.zero_papn ? ", 0-pAPN" : ", not 0-pAPN") +
              (e.apn ? ", APN" : ", not APN"),
          ok);
  }
  std::int64_t counter_local = 0, counter_lemma = 0, perms = 0;
  for (unsigned n = 2; n <= top; ++n) {
    auto f = make_field(n);
    for (std::uint64_t d = 1; d < f->size() - 1; ++d) {
      if (std::gcd<std::uint64_t>(d, f->size() - 1) != 1) continue;
      ++perms;
      const auto e = locally_apn_implications(from_power(f, d));
      counter_local += e.locally_apn && e.zero_papn && !e.apn;
      counter_lemma += e.locally_apn && e.delta >= 4 && e.zero_papn;
    }
  }
  r.eq("local-and-zero-implies-apn", "counterexamples over " + std::to_string(perms) + " power permutations", 0,
       counter_local);
  r.eq("local-implies-not-zero", "counterexamples over " + std::to_string(perms) + " power permutations", 0,
       counter_lemma);
  return r.take();
}

std::vector<Check> c15(const SuiteOptions& o) {
  Recorder r(15);
  const auto consistent = [&](const FuncTable& g) {
    const auto t = ddt(g, o.jobs);
    const auto vf = vanishing_flats(g, o.jobs);
    return d_value(g, o.jobs).d_value == d_value_from_spectrum(t) && vf_count_formula(t) == vf.size() &&
           flats_from_triples(jwr_violating_triples(g)).flats == vf.flats;
  };
  std::mt19937_64 rng(o.seed);
  for (unsigned n : {4u, 5u}) {
    auto f = make_field(n);
    std::int64_t good = 0;
    for (unsigned i = 0; i < o.samples; ++i) good += consistent(FuncTable(f, random_table(f->size(), rng)));
    r.all("oracle-consistency", "random tables " + at_n(n), o.samples, good);
  }
  for (unsigned n = 2; n <= 6; ++n) {
    const auto named = small_named_functions(n);
    std::int64_t good = 0;
    for (const auto& nf : named) good += consistent(nf.g);
    r.all("oracle-consistency", "named functions " + at_n(n), static_cast<std::int64_t>(named.size()), good);
  }
  return r.take();
}

constexpr std::array<Criterion, 15> kCriteria = {{
    {1, "modified inverse over F_16: spectra, uniformity and marked cells match the reference square", c1},
    {2, "inverse over F_16: uniformity, five vanishing flats, D_aF(0) = 1/a", c2},
    {3, "inverse APN-defect equals 9(q-1)", c3},
    {4, "modified inverse: defect 113 at n=4, |R-Spec| = 12 at n=6, defect differs from inverse", c4},
    {5, "modified inverse defect and spectra equal the trace-count closed forms", c5},
    {6, "k versus s relation and the k-only defect formula", c6},
    {7, "kernel-based defect of Gold maps", c7},
    {8, "two-valued spectra: D = -(q-1) q 2^(s-2)", c8},
    {9, "power-family rows versus brute force", c9},
    {10, "APN-defect = q - 12|VF| + sum(3w - chi) - 1", c10},
    {11, "vanishing-flat counts for inverse and modified inverse", c11},
    {12, "raw flat incidences equal 3|VF|", c12},
    {13, "Carlitz chains and rank formula", c13},
    {14, "power-function equivalences and local APN-ness", c14},
    {15, "oracle consistency on random and named functions", c15},
}};

}  // namespace

std::optional<Suite> suite_from_string(std::string_view s) {
  if (s == "examples") return Suite::kExamples;
  if (s == "power") return Suite::kPower;
  if (s == "f0a") return Suite::kF0a;
  if (s == "identities") return Suite::kIdentities;
  if (s == "all") return Suite::kAll;
  return std::nullopt;
}

std::span<const Criterion> criteria() { return kCriteria; }

std::vector<int> suite_criteria(Suite s) {
  switch (s) {
    case Suite::kExamples: return {1, 2};
    case Suite::kPower: return {3, 7, 8, 9, 14};
    case Suite::kF0a: return {4, 5, 6, 11, 13};
    case Suite::kIdentities: return {10, 12, 15};
    case Suite::kAll: break;
  }
  std::vector<int> all(kCriteria.size());
  std::iota(all.begin(), all.end(), 1);
  return all;
}

std::vector<Check> run_criterion(int id, const SuiteOptions& opts) {
  for (const auto& c : kCriteria) {
    if (c.id != id) continue;
    try {
      return c.run(opts);
    } catch (const std::exception& e) {
      // Report, do not throw.
      return {Check{id, "exception", std::string(c.title), "no error", e.what(), false}};
    }
  }
  return {};
}

std::vector<Check> run_suite(Suite s, const SuiteOptions& opts) {
  std::vector<Check> out;
  for (int id : suite_criteria(s)) {
    auto part = run_criterion(id, opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace apnkit::cli
