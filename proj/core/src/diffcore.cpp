#include "apnkit/diffcore.hpp"

#include <algorithm>
#include <string>

#include "apnkit/error.hpp"
#include "apnkit/parallel.hpp"

namespace apnkit {
namespace {

void check_direction(const Field& f, Element a) {
  if (a == 0) throw Error(ErrorCode::kZeroDirection, "direction a must be nonzero");
  if (!f.contains(a)) throw Error(ErrorCode::kIndexOutOfRange, "direction out of range");
}

// Scratch for counting one row; counts is left all-zero after each call.
struct RowCounter {
  std::vector<std::uint32_t> counts;
  std::vector<Element> touched;

  explicit RowCounter(std::uint32_t q) : counts(q, 0) { touched.reserve(q); }

  RowProfile profile(const FuncTable& g, Element a) {
    const auto v = g.values();
    const std::uint32_t q = g.field().size();
    touched.clear();
    // D_aG(x) = D_aG(x + a), so each value is hit from both ends of a pair;
    // counting only x < x + a and doubling halves the work.
    for (Element x = 0; x < q; ++x) {
      if ((x ^ a) < x) continue;
      const Element b = v[x] ^ v[x ^ a];
      if (counts[b]++ == 0) touched.push_back(b);
    }
    RowProfile p;
    p.a = a;
    for (Element b : touched) {
      ++p.histogram[2 * counts[b]];
      counts[b] = 0;
    }
    return p;
  }
};

}  // namespace

std::vector<Element> derivative_row(const FuncTable& g, Element a) {
  check_direction(g.field(), a);
  const auto v = g.values();
  std::vector<Element> row(v.size());
  for (Element x = 0; x < v.size(); ++x) row[x] = v[x] ^ v[x ^ a];
  return row;
}

DiffSquare::DiffSquare(FieldPtr field, std::vector<Element> data)
    : field_(std::move(field)), data_(std::move(data)) {
  const std::size_t q = field_->size();
  if (data_.size() != (q - 1) * q) throw Error(ErrorCode::kInvalidSpec, "difference square has wrong size");
}

std::vector<Element> DiffSquare::canonical_row(std::uint32_t i) const {
  const Element a = field_->exp(i);
  const auto order = field_->ordering();
  const auto r = row(a);
  std::vector<Element> out(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) out[j] = r[order[j]];
  return out;
}

DiffSquare difference_square(const FuncTable& g, unsigned jobs) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  std::vector<Element> data(static_cast<std::size_t>(q - 1) * q);
  parallel_for(q - 1, jobs, [&](std::size_t i, unsigned) {
    const Element a = static_cast<Element>(i + 1);
    Element* out = data.data() + i * q;
    for (Element x = 0; x < q; ++x) out[x] = v[x] ^ v[x ^ a];
  });
  return DiffSquare(g.field_ptr(), std::move(data));
}

std::uint32_t nabla(const FuncTable& g, Element a, Element x) {
  return static_cast<std::uint32_t>(dset(g, a, x).size());
}

std::vector<Element> dset(const FuncTable& g, Element a, Element x) {
  check_direction(g.field(), a);
  if (!g.field().contains(x)) throw Error(ErrorCode::kIndexOutOfRange, "point out of range");
  const auto v = g.values();
  const Element target = v[x] ^ v[x ^ a];
  std::vector<Element> out;
  for (Element y = 0; y < v.size(); ++y) {
    if ((v[y] ^ v[y ^ a]) == target) out.push_back(y);
  }
  return out;
}

DDTable::DDTable(std::uint32_t q, std::vector<std::uint32_t> counts) : q_(q), counts_(std::move(counts)) {
  if (q_ < 2 || counts_.size() != static_cast<std::size_t>(q_ - 1) * q_) {
    throw Error(ErrorCode::kMalformedDDT, "DDT must have (q-1)*q entries");
  }
}

void DDTable::validate() const {
  for (Element a = 1; a < q_; ++a) {
    std::uint64_t sum = 0;
    for (std::uint32_t c : row(a)) {
      if (c % 2 != 0) throw Error(ErrorCode::kMalformedDDT, "odd entry in row " + std::to_string(a));
      sum += c;
    }
    if (sum != q_) {
      throw Error(ErrorCode::kMalformedDDT,
                  "row " + std::to_string(a) + " sums to " + std::to_string(sum) + ", expected " + std::to_string(q_));
    }
  }
}

DDTable ddt(const FuncTable& g, unsigned jobs) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(q - 1) * q, 0);
  parallel_for(q - 1, jobs, [&](std::size_t i, unsigned) {
    const Element a = static_cast<Element>(i + 1);
    std::uint32_t* out = counts.data() + i * q;
    for (Element x = 0; x < q; ++x) ++out[v[x] ^ v[x ^ a]];
  });
  return DDTable(q, std::move(counts));
}

std::uint32_t delta_uniformity(const DDTable& t) {
  std::uint32_t best = 0;
  for (Element a = 1; a < t.q(); ++a) {
    for (std::uint32_t c : t.row(a)) best = std::max(best, c);
  }
  return best;
}

std::uint32_t delta_uniformity(const FuncTable& g, unsigned jobs) {
  std::uint32_t best = 0;
  for (const auto& p : row_profiles(g, jobs)) best = std::max(best, p.max_multiplicity());
  return best;
}

bool DiffSpectrum::normalized(std::map<std::uint32_t, std::uint64_t>& out) const {
  out.clear();
  for (const auto& [value, count] : frequency) {
    if (count % (q - 1) != 0) return false;
    out[value] = count / (q - 1);
  }
  return true;
}

DiffSpectrum diff_spectrum(const DDTable& t) {
  DiffSpectrum s;
  s.q = t.q();
  for (Element a = 1; a < t.q(); ++a) {
    for (std::uint32_t c : t.row(a)) ++s.frequency[c];
  }
  return s;
}

DiffSpectrum diff_spectrum(const FuncTable& g, unsigned jobs) {
  DiffSpectrum s;
  const std::uint32_t q = g.field().size();
  s.q = q;
  for (const auto& p : row_profiles(g, jobs)) {
    std::uint64_t nonzero = 0;
    for (const auto& [m, c] : p.histogram) {
      s.frequency[m] += c;
      nonzero += c;
    }
    s.frequency[0] += q - nonzero;
  }
  return s;
}

RowProfile row_profile(const FuncTable& g, Element a) {
  check_direction(g.field(), a);
  RowCounter counter(g.field().size());
  return counter.profile(g, a);
}

RowProfile row_profile(const DDTable& t, Element a) {
  if (a == 0) throw Error(ErrorCode::kZeroDirection, "direction a must be nonzero");
  if (a >= t.q()) throw Error(ErrorCode::kIndexOutOfRange, "direction out of range");
  RowProfile p;
  p.a = a;
  for (std::uint32_t c : t.row(a)) {
    if (c != 0) ++p.histogram[c];
  }
  return p;
}

std::vector<RowProfile> row_profiles(const FuncTable& g, unsigned jobs) {
  const std::uint32_t q = g.field().size();
  std::vector<RowProfile> out(q - 1);
  std::vector<RowCounter> scratch;
  const unsigned workers = worker_count(q - 1, jobs);
  scratch.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) scratch.emplace_back(q);
  parallel_for(q - 1, workers, [&](std::size_t i, unsigned w) {
    out[i] = scratch[w].profile(g, static_cast<Element>(i + 1));
  });
  return out;
}

std::vector<std::vector<Element>> marked_rows(const FuncTable& g, unsigned jobs) {
  const std::uint32_t q = g.field().size();
  const auto v = g.values();
  std::vector<std::vector<Element>> out(q - 1);
  const unsigned workers = worker_count(q - 1, jobs);
  std::vector<std::vector<std::uint32_t>> scratch(workers, std::vector<std::uint32_t>(q, 0));
  parallel_for(q - 1, workers, [&](std::size_t i, unsigned w) {
    auto& counts = scratch[w];
    const Element a = static_cast<Element>(i + 1);
    for (Element x = 0; x < q; ++x) ++counts[v[x] ^ v[x ^ a]];
    for (Element b = 0; b < q; ++b) {
      if (counts[b] > 2) out[i].push_back(b);
      counts[b] = 0;
    }
  });
  return out;
}

}  // namespace apnkit
