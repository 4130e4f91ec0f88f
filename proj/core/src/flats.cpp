#include "apnkit/flats.hpp"

#include <algorithm>
#include <string>

#include "apnkit/defect.hpp"
#include "apnkit/error.hpp"
#include "apnkit/parallel.hpp"

namespace apnkit {
namespace {

// Root of y^2 + y = c; the caller has checked Tr(c) = 0.
Element as_root(const Field& f, Element c) { return f.solve_quadratic(1, 1, c).front(); }

}  // namespace

Flat make_flat(Element x, Element y, Element z, Element w) {
  Flat out{x, y, z, w};
  std::sort(out.begin(), out.end());
  return out;
}

void canonicalize(FlatSet& s) {
  std::sort(s.flats.begin(), s.flats.end());
  s.flats.erase(std::unique(s.flats.begin(), s.flats.end()), s.flats.end());
}

FlatSet vanishing_flats(const FuncTable& g, unsigned jobs) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  std::vector<std::vector<Flat>> per_row(q - 1);
  const unsigned workers = worker_count(q - 1, jobs);
  std::vector<std::vector<std::pair<Element, Element>>> scratch(workers);
  parallel_for(q - 1, workers, [&](std::size_t i, unsigned w) {
    const Element a = static_cast<Element>(i + 1);
    auto& pairs = scratch[w];
    pairs.clear();
    // One representative y < y + a per pair, keyed by the derivative value.
    for (Element y = 0; y < q; ++y) {
      if ((y ^ a) > y) pairs.emplace_back(v[y] ^ v[y ^ a], y);
    }
    std::sort(pairs.begin(), pairs.end());
    auto& out = per_row[i];
    for (std::size_t lo = 0; lo < pairs.size();) {
      std::size_t hi = lo + 1;
      while (hi < pairs.size() && pairs[hi].first == pairs[lo].first) ++hi;
      for (std::size_t j = lo; j < hi; ++j) {
        for (std::size_t k = j + 1; k < hi; ++k) {
          const Element y = pairs[j].second;
          const Element z = pairs[k].second;
          out.push_back(make_flat(y, y ^ a, z, z ^ a));
        }
      }
      lo = hi;
    }
  });
  FlatSet s;
  for (auto& row : per_row) {
    s.raw_count += row.size();
    s.flats.insert(s.flats.end(), row.begin(), row.end());
  }
  canonicalize(s);
  return s;
}

FlatSet flats_from_triples(std::span<const std::array<Element, 3>> triples) {
  FlatSet s;
  s.raw_count = triples.size();
  s.flats.reserve(triples.size());
  for (const auto& t : triples) s.flats.push_back(make_flat(t[0], t[1], t[2], t[0] ^ t[1] ^ t[2]));
  canonicalize(s);
  return s;
}

bool is_vanishing_flat(const FuncTable& g, const Flat& f) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!g.field().contains(f[i])) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (f[i] == f[j]) return false;
    }
  }
  if ((f[0] ^ f[1] ^ f[2] ^ f[3]) != 0) return false;
  return (g(f[0]) ^ g(f[1]) ^ g(f[2]) ^ g(f[3])) == 0;
}

std::uint64_t vf_count_formula(const DDTable& t) {
  std::uint64_t sum = 0;
  for (Element a = 1; a < t.q(); ++a) {
    for (std::uint32_t delta : t.row(a)) {
      const std::uint64_t k = delta / 2;
      if (k >= 2) sum += k * (k - 1) / 2;
    }
  }
  if (sum % 3 != 0) throw Error(ErrorCode::kNonIntegralCount, "sum of C(delta/2, 2) = " + std::to_string(sum));
  return sum / 3;
}

std::uint64_t vf_count_from_profiles(std::span<const RowProfile> profiles) {
  std::uint64_t sum = 0;
  for (const auto& p : profiles) {
    for (const auto& [m, count] : p.histogram) {
      const std::uint64_t k = m / 2;
      sum += count * (k * (k - 1) / 2);
    }
  }
  if (sum % 3 != 0) throw Error(ErrorCode::kNonIntegralCount, "sum of C(delta/2, 2) = " + std::to_string(sum));
  return sum / 3;
}

FlatSet closed_vf_inverse(const Field& f) {
  if (f.degree() % 2 != 0) throw Error(ErrorCode::kOddN, "closed form needs n even");
  const Element w = f.omega();
  const Element w2 = f.mul(w, w);
  FlatSet s;
  for (std::uint32_t i = 0; i < (f.size() - 1) / 3; ++i) {
    const Element z = f.exp(i);
    s.flats.push_back(make_flat(0, z, f.mul(z, w), f.mul(z, w2)));
  }
  s.raw_count = 3 * s.flats.size();
  canonicalize(s);
  return s;
}

FlatSet closed_vf_f0a(const Field& f, Element alpha) {
  if (alpha == 0) throw Error(ErrorCode::kZeroAlpha, "alpha must be nonzero");
  const bool even = f.degree() % 2 == 0;
  Element w = 0;
  Element w2 = 0;
  Element aw = 0;
  Element aw2 = 0;
  if (even) {
    w = f.omega();
    w2 = f.mul(w, w);
    aw = f.mul(alpha, w);
    aw2 = f.mul(alpha, w2);
  }
  FlatSet s;
  for (Element a = 1; a < f.size(); ++a) {
    if (a == alpha || (even && (a == aw || a == aw2))) continue;
    const Element c1 = f.div(alpha, a ^ alpha);
    if (f.trace(c1) == 0) {
      const Element ar = f.mul(a, as_root(f, c1));
      s.flats.push_back(make_flat(0, a, ar, ar ^ a));
    }
    const Element c2 = f.div(a ^ alpha, a);
    if (f.trace(c2) == 0) {
      const Element ar = f.mul(a, as_root(f, c2));
      s.flats.push_back(make_flat(alpha, alpha ^ a, ar, ar ^ a));
    }
  }
  if (even) {
    s.flats.push_back(make_flat(0, alpha, aw, aw2));
    if (f.degree() % 4 == 0) {
      // Rows alpha*w and alpha*w^2 carry a value of multiplicity 6; its three
      // pairs give three flats each, one of them the flat just added.
      const std::array<std::pair<Element, Element>, 2> rows = {{{aw, w}, {aw2, w2}}};
      for (const auto& [a, c] : rows) {
        const Element ar = f.mul(a, as_root(f, c));
        std::array<Element, 6> dset = {0, alpha, aw, aw2, ar, ar ^ a};
        std::vector<Element> reps;
        for (Element y : dset) reps.push_back(std::min(y, y ^ a));
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
        for (std::size_t i = 0; i < reps.size(); ++i) {
          for (std::size_t j = i + 1; j < reps.size(); ++j) {
            s.flats.push_back(make_flat(reps[i], reps[i] ^ a, reps[j], reps[j] ^ a));
          }
        }
      }
    }
  }
  s.raw_count = s.flats.size();
  canonicalize(s);
  return s;
}

DefectVfIdentity defect_vf_identity_check(const FuncTable& g, unsigned jobs) {
  const std::int64_t q = g.field().size();
  const DefectReport report = d_value(g, jobs);
  const auto vf = static_cast<std::int64_t>(vanishing_flats(g, jobs).size());
  std::int64_t weights = 0;
  for (const auto& row : report.per_row) weights += 3 * row.w - row.chi;
  DefectVfIdentity r;
  r.lhs = report.apn_defect;
  r.rhs = q - 12 * vf + weights - 1;
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace apnkit
