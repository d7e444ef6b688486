#pragma once

#include <array>
#include <cstdint>

#include "manin/poly.hpp"
#include "manin/rational.hpp"

namespace manin {

/* Combinatorial data of S, the plane blown up in three collinear points.
 *
 * Cox ring: k[s0,s1,s2,s3,t1,t2,t3] / (s1 t1 + s2 t2 + s3 t3), graded by
 * Pic(S) = Z^4 with basis [E0],[E1],[E2],[E3] where E0 is the strict
 * transform of the common line and E1..E3 the exceptional curves.
 * deg s_i = [E_i]; deg t_i = [F_i] = [E0] + sum_{j != i, j >= 1} [E_j].
 * Anticanonical class: 3[E0] + 2([E1]+[E2]+[E3]).
 *
 * Generator order everywhere: (s0, s1, s2, s3, t1, t2, t3).
 */

using PicVector = std::array<int, 4>;
using DegreeVec4 = std::array<int, 4>;
using DegreeVec7 = std::array<int, 7>;
using DivTuple7 = std::array<DivisorP1, 7>;

namespace surface {

inline constexpr int kNumGenerators = 7;

// The seven chart index sets of the semistable locus, as bitmasks over the
// generator order (bit 0 = s0, ..., bit 6 = t3).  Their union covers the
// torsor; their intersection is empty.
inline constexpr std::array<uint8_t, 7> kChartMasks = {
    // {s1,s2,t1,t2,t3} {s2,s3,t1,t2,t3} {s1,s3,t1,t2,t3}
    0b1110110, 0b1111100, 0b1111010,
    // {s0,s1,s2,t1,t2} {s0,s1,s3,t1,t3} {s0,s2,s3,t2,t3}
    0b0110111, 0b1011011, 0b1101101,
    // {s0,s1,s2,s3}
    0b0001111,
};

// Pic-degree of each generator, rows in generator order.
inline constexpr std::array<PicVector, 7> kGeneratorDegrees = {{
    {1, 0, 0, 0}, // s0
    {0, 1, 0, 0}, // s1
    {0, 0, 1, 0}, // s2
    {0, 0, 0, 1}, // s3
    {1, 0, 1, 1}, // t1 = [F1]
    {1, 1, 0, 1}, // t2 = [F2]
    {1, 1, 1, 0}, // t3 = [F3]
}};

// Relation lattice: each monomial s_i t_i of the Cox relation has the same
// Pic-degree, so t_i - (s0 + sum_{j != i} s_j) pairs to zero with the grading.
inline constexpr std::array<std::array<int, 7>, 3> kRelationRows = {{
    {-1, 0, -1, -1, 1, 0, 0},
    {-1, -1, 0, -1, 0, 1, 0},
    {-1, -1, -1, 0, 0, 0, 1},
}};

inline constexpr PicVector kAnticanonical = {3, 2, 2, 2};

// Expansion of the anticanonical class in generator degrees: [F1]+[F2]+[F3].
inline constexpr std::array<int, 7> kAnticanonicalWeights = {0, 0, 0, 0, 1, 1, 1};

DegreeVec7 lift_degrees(const DegreeVec4& d);
int anticanonical_degree(const DegreeVec4& d); // 3 d0 + 2 (d1+d2+d3)

// Degree of the section t_i (i in 1..3) in the renormalized count:
// d0 + sum_{j != i} d_j + deg E0 + sum_{j != i} deg E_j - deg F_i.
int psi(int i, const DegreeVec4& d, const std::array<int, 7>& Edeg);

// phi_1 = d0 + d1 + deg E0 + deg E1 - deg F2 - deg F3, and phi_2, phi_3 by
// cyclic permutation of the indices 1,2,3.
int phi(int i, const DegreeVec4& d, const std::array<int, 7>& Edeg);

// True iff at every closed point at least one chart monomial is entirely
// nonvanishing, i.e. min over charts of the chart's valuation sum is 0.
bool is_primitive(const DivTuple7& divs);

// lim_{T->1} (1-T)^r / prod_k (1 - T^{a_k}) = 1 / prod a_k when r factors
// cancel exactly.
Rational cone_limit(int r, const std::vector<int>& exponents);

// 1/24, via cone_limit(4, {3,2,2,2}).
Rational alpha_S();

} // namespace surface

} // namespace manin
