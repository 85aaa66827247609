#pragma once

// Reference data transcribed as published. Indices are 1-based here, exactly as printed;
// consumers convert to the 0-based library indices.

#include <array>

namespace siegel2::tables {

// Values of chi_N on the G basis (A11 A12 A21 B12 B2_11 B2_22 C12 C2_11 C2_22),
// rows chi12 chi13 ... chi56 in lexicographic pair order.
inline constexpr std::array<std::array<int, 9>, 15> kCharacterTable = {{
    {-1, 1, 1, 1, -1, -1, 1, -1, -1},
    {1, 1, -1, 1, 1, 1, -1, -1, 1},
    {-1, -1, 1, 1, -1, -1, -1, -1, 1},
    {1, -1, 1, -1, -1, 1, 1, 1, 1},
    {-1, 1, -1, -1, -1, 1, 1, -1, -1},
    {-1, 1, -1, 1, -1, -1, -1, 1, -1},
    {1, -1, 1, 1, 1, 1, -1, 1, -1},
    {-1, -1, 1, -1, 1, -1, 1, -1, -1},
    {1, 1, -1, -1, 1, -1, 1, 1, 1},
    {-1, -1, -1, 1, -1, -1, 1, 1, 1},
    {1, -1, -1, -1, -1, 1, -1, -1, 1},
    {-1, 1, 1, -1, -1, 1, -1, 1, -1},
    {-1, 1, 1, -1, 1, -1, -1, -1, 1},
    {1, -1, -1, -1, 1, -1, -1, 1, -1},
    {-1, -1, -1, 1, 1, 1, 1, -1, -1},
}};

// S(N) = n_i + n_j as (m'1 m'2 m''1 m''2) bits, in the S-table row order
// D12 D13 D23 D14 D24 D15 D25 D16 D26 D34 D35 D36 D45 D46 D56.
inline constexpr std::array<std::array<int, 4>, 15> kSumVectors = {{
    {1, 1, 1, 1}, {0, 0, 1, 0}, {1, 1, 0, 1}, {1, 1, 1, 0}, {0, 0, 0, 1},
    {1, 0, 0, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0},
    {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1},
}};

struct JacobiEntry {
    int i, j;                   // odd indices, i < j
    int sign;                   // printed sign
    std::array<int, 4> evens;   // printed even indices
};

// D(n_i, n_j) = sign * theta_a theta_b theta_c theta_d as printed.
inline constexpr std::array<JacobiEntry, 15> kJacobi = {{
    {1, 2, +1, {2, 3, 5, 6}},   {1, 3, -1, {6, 7, 9, 10}}, {1, 4, +1, {1, 4, 5, 9}},
    {1, 5, -1, {3, 4, 8, 10}},  {1, 6, +1, {1, 2, 7, 8}},  {2, 3, -1, {1, 4, 6, 8}},
    {2, 4, -1, {5, 7, 8, 10}},  {2, 5, -1, {1, 3, 7, 9}},  {2, 6, +1, {2, 4, 9, 10}},
    {3, 4, +1, {2, 3, 8, 9}},   {3, 5, -1, {1, 2, 5, 10}}, {3, 6, +1, {3, 4, 5, 7}},
    {4, 5, -1, {2, 4, 6, 7}},   {4, 6, +1, {1, 3, 6, 10}}, {5, 6, +1, {5, 6, 8, 9}},
}};

struct BiquadraticTerm {
    int coeff;
    int a, b;  // theta_a^2 theta_b^2
};

// Each printed identity L = R1 +- R2 moved to one side: L - R1 -+ R2 = 0.
inline constexpr std::array<std::array<BiquadraticTerm, 3>, 15> kBiquadratic = {{
    {{{1, 2, 3}, {-1, 1, 4}, {1, 7, 10}}},
    {{{1, 2, 5}, {-1, 7, 9}, {-1, 4, 8}}},
    {{{1, 3, 5}, {-1, 9, 10}, {-1, 1, 8}}},
    {{{1, 2, 6}, {-1, 1, 9}, {-1, 8, 10}}},
    {{{1, 3, 6}, {-1, 4, 9}, {-1, 7, 8}}},
    {{{1, 6, 5}, {-1, 1, 7}, {1, 4, 10}}},
    {{{1, 6, 7}, {-1, 3, 8}, {1, 1, 5}}},
    {{{1, 6, 10}, {-1, 4, 5}, {1, 2, 8}}},
    {{{1, 6, 9}, {-1, 1, 2}, {1, 3, 4}}},
    {{{1, 5, 9}, {-1, 2, 7}, {1, 3, 10}}},
    {{{1, 4, 6}, {-1, 5, 10}, {-1, 3, 9}}},
    {{{1, 1, 6}, {-1, 5, 7}, {1, 2, 9}}},
    {{{1, 6, 8}, {-1, 3, 7}, {1, 2, 10}}},
    {{{1, 5, 8}, {-1, 1, 3}, {1, 2, 4}}},
    {{{1, 8, 9}, {-1, 4, 7}, {1, 1, 10}}},
}};

struct QuarticTerm {
    int coeff;
    int a;  // theta_a^4
};

inline constexpr std::array<std::array<QuarticTerm, 4>, 5> kQuartic = {{
    {{{1, 1}, {-1, 4}, {-1, 5}, {-1, 9}}},
    {{{1, 2}, {-1, 3}, {1, 5}, {-1, 6}}},
    {{{1, 2}, {-1, 3}, {1, 8}, {-1, 9}}},
    {{{1, 1}, {-1, 3}, {-1, 6}, {-1, 10}}},
    {{{1, 1}, {-1, 2}, {-1, 7}, {-1, 8}}},
}};

struct OrbitCount {
    const char* name;
    int count;
};

// Published orbit sizes on subsets of even characteristics (C2 as C(10,2)).
inline constexpr std::array<OrbitCount, 9> kOrbitCensus = {{
    {"C2", 45}, {"C3minus", 60}, {"C3plus", 60}, {"C4minus", 15}, {"C4plus", 15},
    {"C4star", 180}, {"C5minus", 90}, {"C5plus", 90}, {"C5star", 72},
}};

// Published count of image points of the gradients map over Gamma(2,4)/Gamma(4,8).
inline constexpr int kPublishedImagePointCount = 64;

// Published number of independent relations among the ten (rb8) relations.
inline constexpr int kPublishedRb8Independent = 6;

} // namespace siegel2::tables
