#pragma once

#include <array>
#include <vector>

#include "apnkit/field.hpp"
#include "apnkit/functions.hpp"

namespace apnkit {

/// Element sets are returned sorted by canonical position (0, 1, zeta, zeta^2, ...).
using ElementSet = std::vector<Element>;

void sort_canonical(const Field& f, ElementSet& s);

/// {a != 0 : D_aG is 2-to-1}.
ElementSet row_spectrum(const FuncTable& g, unsigned jobs = 1);
/// {x0 : nabla(a, x0) = 2 for every a != 0}.
ElementSet column_spectrum(const FuncTable& g, unsigned jobs = 1);

struct SpectraReport {
  ElementSet row_spec;
  ElementSet col_spec;
  bool is_apn = false;
};

SpectraReport spectra_report(const FuncTable& g, unsigned jobs = 1);

/// Trace descriptions of the spectra of the inverse modified at {0, alpha}.
/// Throw ZeroAlpha.
ElementSet predicted_row_spectrum_f0a(const Field& f, Element alpha);
ElementSet predicted_column_spectrum_f0a(const Field& f, Element alpha);

/// Unordered triples x < y < z (by encoding) with
/// G(x) + G(y) + G(z) + G(x + y + z) = 0. Cost is O(q^3).
std::vector<std::array<Element, 3>> jwr_violating_triples(const FuncTable& g);

/// delta_G(1, b) <= 2 for all b outside F_2. Throws NotAPowerFunction.
bool is_locally_apn(const FuncTable& g);

struct PowerEquivalences {
  bool apn = false;
  bool p1 = false;          // D_1G is 2-to-1
  bool one_papn = false;    // 1 is in the column spectrum
  bool s1_full = false;     // |S_1| = q
};

/// Throws NotAPowerFunction.
PowerEquivalences power_equivalences_check(const FuncTable& g);

struct LocalApnImplications {
  bool locally_apn = false;
  bool zero_papn = false;
  bool apn = false;
  std::uint32_t delta = 0;
};

/// Throws NotAPowerFunction or NotAPermutation.
LocalApnImplications locally_apn_implications(const FuncTable& g);

}  // namespace apnkit
