#include "apnkit/spectra.hpp"

#include <algorithm>

#include "apnkit/diffcore.hpp"
#include "apnkit/error.hpp"
#include "apnkit/parallel.hpp"

namespace apnkit {
namespace {

void require_power(const FuncTable& g) {
  if (!g.power_exponent()) throw Error(ErrorCode::kNotAPowerFunction, "function was not built as x^d");
}

// Points x0 with nabla(a, x0) = 2 in every row a in `rows` (all rows if empty).
std::vector<bool> good_columns(const FuncTable& g, const std::vector<Element>& rows, unsigned jobs) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  const unsigned workers = worker_count(rows.size(), jobs);
  std::vector<std::vector<std::uint32_t>> counts(workers, std::vector<std::uint32_t>(q, 0));
  std::vector<std::vector<bool>> bad(workers, std::vector<bool>(q, false));
  parallel_for(rows.size(), workers, [&](std::size_t i, unsigned w) {
    const Element a = rows[i];
    auto& c = counts[w];
    for (Element x = 0; x < q; ++x) ++c[v[x] ^ v[x ^ a]];
    for (Element x = 0; x < q; ++x) {
      if (c[v[x] ^ v[x ^ a]] != 2) bad[w][x] = true;
    }
    std::fill(c.begin(), c.end(), 0);
  });
  std::vector<bool> good(q, true);
  for (const auto& b : bad) {
    for (Element x = 0; x < q; ++x) {
      if (b[x]) good[x] = false;
    }
  }
  return good;
}

std::vector<Element> all_directions(std::uint32_t q) {
  std::vector<Element> rows(q - 1);
  for (Element a = 1; a < q; ++a) rows[a - 1] = a;
  return rows;
}

bool column_is_good(const FuncTable& g, Element x0) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  for (Element a = 1; a < q; ++a) {
    const Element target = v[x0] ^ v[x0 ^ a];
    std::uint32_t hits = 0;
    for (Element x = 0; x < q; ++x) hits += (v[x] ^ v[x ^ a]) == target;
    if (hits != 2) return false;
  }
  return true;
}

}  // namespace

void sort_canonical(const Field& f, ElementSet& s) {
  std::sort(s.begin(), s.end(), [&f](Element x, Element y) { return f.position(x) < f.position(y); });
}

ElementSet row_spectrum(const FuncTable& g, unsigned jobs) {
  ElementSet out;
  for (const auto& p : row_profiles(g, jobs)) {
    if (p.histogram.size() == 1 && p.histogram.begin()->first == 2) out.push_back(p.a);
  }
  sort_canonical(g.field(), out);
  return out;
}

ElementSet column_spectrum(const FuncTable& g, unsigned jobs) {
  const auto good = good_columns(g, all_directions(g.field().size()), jobs);
  ElementSet out;
  for (Element x = 0; x < good.size(); ++x) {
    if (good[x]) out.push_back(x);
  }
  sort_canonical(g.field(), out);
  return out;
}

SpectraReport spectra_report(const FuncTable& g, unsigned jobs) {
  SpectraReport r;
  r.row_spec = row_spectrum(g, jobs);
  r.col_spec = column_spectrum(g, jobs);
  r.is_apn = r.row_spec.size() == g.field().size() - 1;
  return r;
}

ElementSet predicted_row_spectrum_f0a(const Field& f, Element alpha) {
  if (alpha == 0) throw Error(ErrorCode::kZeroAlpha, "alpha must be nonzero");
  const std::uint32_t q = f.size();
  ElementSet out;
  if (f.degree() % 2 == 1) {
    out.push_back(alpha);
    for (Element a = 1; a < q; ++a) {
      if (a == alpha) continue;
      const int t1 = f.trace(f.div(alpha, a ^ alpha));
      const int t2 = f.trace(f.div(alpha, a));
      if (t1 * (t2 ^ 1) == 1) out.push_back(a);
    }
  } else {
    const Element w = f.omega();
    const Element aw = f.mul(alpha, w);
    const Element aw2 = f.mul(aw, w);
    for (Element a = 1; a < q; ++a) {
      if (a == alpha || a == aw || a == aw2) continue;
      if (f.trace(f.div(alpha, a ^ alpha)) == 1 && f.trace(f.div(alpha, a)) == 1) out.push_back(a);
    }
  }
  sort_canonical(f, out);
  return out;
}

ElementSet predicted_column_spectrum_f0a(const Field& f, Element alpha) {
  if (alpha == 0) throw Error(ErrorCode::kZeroAlpha, "alpha must be nonzero");
  ElementSet out;
  if (f.degree() % 2 == 1) return out;
  const Element w = f.omega();
  const Element aw = f.mul(alpha, w);
  const Element aw2 = f.mul(aw, w);
  for (Element x = 1; x < f.size(); ++x) {
    if (x == alpha || x == aw || x == aw2) continue;
    if (f.trace(f.div(alpha, x ^ alpha)) == 1) out.push_back(x);
  }
  sort_canonical(f, out);
  return out;
}

std::vector<std::array<Element, 3>> jwr_violating_triples(const FuncTable& g) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  std::vector<std::array<Element, 3>> out;
  // x + y + z differs from each of x, y, z whenever the three are distinct.
  for (Element x = 0; x < q; ++x) {
    for (Element y = x + 1; y < q; ++y) {
      const Element partial = v[x] ^ v[y];
      const Element xy = x ^ y;
      for (Element z = y + 1; z < q; ++z) {
        if ((partial ^ v[z] ^ v[xy ^ z]) == 0) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

bool is_locally_apn(const FuncTable& g) {
  require_power(g);
  std::vector<std::uint32_t> counts(g.field().size(), 0);
  for (Element b : derivative_row(g, 1)) ++counts[b];
  for (Element b = 2; b < counts.size(); ++b) {
    if (counts[b] > 2) return false;
  }
  return true;
}

PowerEquivalences power_equivalences_check(const FuncTable& g) {
  require_power(g);
  PowerEquivalences r;
  const RowProfile p1 = row_profile(g, 1);
  r.p1 = p1.histogram.size() == 1 && p1.histogram.begin()->first == 2;
  r.s1_full = (p1.histogram.count(2) ? 2 * p1.histogram.at(2) : 0) == g.field().size();
  r.one_papn = column_is_good(g, 1);
  r.apn = delta_uniformity(g) == 2;
  return r;
}

LocalApnImplications locally_apn_implications(const FuncTable& g) {
  require_power(g);
  if (!g.is_permutation()) throw Error(ErrorCode::kNotAPermutation, "x^d is not a permutation");
  LocalApnImplications r;
  r.locally_apn = is_locally_apn(g);
  r.zero_papn = column_is_good(g, 0);
  r.delta = delta_uniformity(g);
  r.apn = r.delta == 2;
  return r;
}

}  // namespace apnkit
