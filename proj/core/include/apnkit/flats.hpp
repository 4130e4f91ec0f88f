#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "apnkit/diffcore.hpp"
#include "apnkit/field.hpp"
#include "apnkit/functions.hpp"

namespace apnkit {

/// {x, y, z, x+y+z}, ascending by encoding.
using Flat = std::array<Element, 4>;

Flat make_flat(Element x, Element y, Element z, Element w);

struct FlatSet {
  std::vector<Flat> flats;    // sorted, unique
  std::uint64_t raw_count = 0;  // emissions before deduplication

  std::size_t size() const noexcept { return flats.size(); }
};

/// Sorts and deduplicates `flats` in place; raw_count is left as given.
void canonicalize(FlatSet& s);

/// Flats read off the difference square: every pair of pairs {y, y+a},
/// {z, z+a} sharing a derivative value gives {y, y+a, z, z+a}.
FlatSet vanishing_flats(const FuncTable& g, unsigned jobs = 1);

/// Flats spanned by JWR triples; raw_count is the number of triples.
FlatSet flats_from_triples(std::span<const std::array<Element, 3>> triples);

/// Both closure conditions: four distinct points summing to 0 whose images
/// also sum to 0.
bool is_vanishing_flat(const FuncTable& g, const Flat& f);

/// (1/3) sum over (a, b) of C(delta(a,b)/2, 2). Throws NonIntegralCount.
std::uint64_t vf_count_formula(const DDTable& t);
/// Same count from streamed row profiles.
std::uint64_t vf_count_from_profiles(std::span<const RowProfile> profiles);

/// {0, zeta^i, zeta^i w, zeta^i w^2} for 0 <= i < (q-1)/3. Throws OddN.
FlatSet closed_vf_inverse(const Field& f);
/// Vanishing flats of the inverse modified at {0, alpha}, built from the
/// trace case split. Throws ZeroAlpha.
FlatSet closed_vf_f0a(const Field& f, Element alpha);

struct DefectVfIdentity {
  std::int64_t lhs = 0;  // APN-defect
  std::int64_t rhs = 0;  // q - 12|VF| + sum(3w - chi) - 1
  bool equal = false;
};

DefectVfIdentity defect_vf_identity_check(const FuncTable& g, unsigned jobs = 1);

}  // namespace apnkit
