#pragma once

#include <array>

// Reference difference squares over F_16, modulus x^4 + x + 1, zeta = x.
// Row i is the direction zeta^i; column j is the j-th element in canonical
// order (0, 1, zeta, ..., zeta^14). Cells are zeta-exponents of D_aG(x).

namespace golden {

// Inverse modified at {0, zeta}; circled cells are values of multiplicity > 2.
inline constexpr std::array<std::array<int, 16>, 15> kModifiedInverse = {{
    {{3, 3, 11, 5, 13, 11, 0, 11, 14, 5, 14, 0, 7, 7, 11, 13}},
    {{14, 12, 14, 9, 4, 12, 9, 14, 10, 13, 4, 13, 14, 6, 6, 10}},
    {{2, 9, 10, 2, 8, 3, 10, 8, 13, 9, 12, 3, 12, 13, 5, 5}},
    {{5, 4, 6, 10, 5, 7, 2, 10, 7, 12, 6, 11, 2, 11, 12, 4}},
    {{10, 0, 0, 7, 9, 10, 6, 1, 9, 6, 11, 7, 10, 1, 10, 11}},
    {{11, 10, 13, 13, 6, 8, 11, 5, 0, 8, 5, 10, 6, 9, 0, 9}},
    {{4, 8, 4, 1, 1, 5, 7, 4, 4, 14, 7, 4, 4, 5, 8, 14}},
    {{6, 13, 1, 8, 0, 0, 4, 6, 6, 3, 13, 6, 3, 8, 4, 1}},
    {{1, 6, 5, 6, 7, 14, 14, 3, 5, 1, 2, 5, 5, 2, 7, 3}},
    {{8, 2, 12, 11, 12, 6, 13, 13, 2, 4, 8, 1, 11, 4, 1, 6}},
    {{12, 5, 7, 4, 10, 4, 5, 12, 12, 7, 3, 12, 0, 10, 3, 0}},
    {{9, 14, 9, 0, 3, 9, 3, 9, 11, 11, 0, 2, 9, 14, 9, 2}},
    {{0, 1, 2, 3, 14, 2, 8, 2, 3, 10, 10, 14, 1, 0, 2, 8}},
    {{13, 7, 3, 12, 2, 13, 1, 7, 1, 2, 9, 9, 13, 3, 13, 12}},
    {{7, 11, 8, 14, 11, 1, 12, 0, 8, 0, 1, 8, 8, 12, 14, 7}},
}};

inline constexpr std::array<std::array<bool, 16>, 15> kModifiedInverseCircled = {{
    {{false, false, true, false, false, true, false, true, false, false, false, false, false, false, true, false}},
    {{true, false, true, false, false, false, false, true, false, false, false, false, true, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, false, false, false, true, false, false, false, false, false, false, true, false, true, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, true, false, false, false, false, true, true, false, false, true, true, false, false, false}},
    {{true, false, false, false, false, false, false, true, true, false, false, true, false, false, false, false}},
    {{false, false, true, false, false, false, false, false, true, false, false, true, true, false, false, false}},
    {{false, false, false, false, false, false, false, false, false, false, false, false, false, false, false, false}},
    {{true, false, false, false, false, false, false, true, true, false, false, true, false, false, false, false}},
    {{true, false, true, false, false, true, false, true, false, false, false, false, true, false, true, false}},
    {{false, false, true, false, false, true, false, true, false, false, false, false, false, false, true, false}},
    {{true, false, false, false, false, true, false, false, false, false, false, false, true, false, true, false}},
    {{false, false, true, false, false, false, false, false, true, false, false, true, true, false, false, false}},
}};

// Inverse map. Cell (row 10, column 13) holds 5 here; the true value is 10.
inline constexpr std::array<std::array<int, 16>, 15> kInverse = {{
    {{0, 0, 10, 5, 13, 10, 0, 11, 14, 5, 14, 0, 7, 7, 11, 13}},
    {{14, 12, 14, 9, 4, 12, 9, 14, 10, 13, 4, 13, 14, 6, 6, 10}},
    {{13, 9, 11, 13, 8, 3, 11, 8, 13, 9, 12, 3, 12, 13, 5, 5}},
    {{12, 4, 8, 10, 12, 7, 2, 10, 7, 12, 8, 11, 2, 11, 12, 4}},
    {{11, 3, 3, 7, 9, 11, 6, 1, 9, 6, 11, 7, 10, 1, 10, 11}},
    {{10, 10, 2, 2, 6, 8, 10, 5, 0, 8, 5, 10, 6, 9, 0, 9}},
    {{9, 8, 9, 1, 1, 5, 7, 9, 4, 14, 7, 4, 9, 5, 8, 14}},
    {{8, 13, 7, 8, 0, 0, 4, 6, 8, 3, 13, 6, 3, 8, 4, 7}},
    {{7, 6, 12, 6, 7, 14, 14, 3, 5, 7, 2, 12, 5, 2, 7, 3}},
    {{6, 2, 5, 11, 5, 6, 13, 13, 2, 4, 6, 1, 11, 4, 1, 6}},
    {{5, 5, 1, 4, 10, 4, 5, 12, 12, 1, 3, 5, 0, 5, 3, 0}},
    {{4, 14, 4, 0, 3, 9, 3, 4, 11, 11, 0, 2, 4, 14, 9, 2}},
    {{3, 1, 13, 3, 14, 2, 8, 2, 3, 10, 10, 14, 1, 3, 13, 8}},
    {{2, 7, 0, 12, 2, 13, 1, 7, 1, 2, 9, 9, 13, 0, 2, 12}},
    {{1, 11, 6, 14, 11, 1, 12, 0, 6, 0, 1, 8, 8, 12, 14, 1}},
}};

}  // namespace golden
