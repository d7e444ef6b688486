#pragma once

#include <optional>
#include <vector>

#include "manin/rational.hpp"
#include "manin/surface.hpp"

namespace manin {

/* Exact linear algebra over F_q for the section-space maps
 * (t_1, ..., t_r) |-> sum s_i t_i of fixed target degree delta, and the
 * counting family built on them.
 */

struct MatFq {
    int rows = 0, cols = 0;
    std::vector<int> a; // row-major

    int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    int at(int i, int j) const { return a[(size_t)i * cols + j]; }
};

// In-place reduction to row echelon form; returns the rank.
int row_reduce(const FieldCtx& F, MatFq& m);

// Basis of the right kernel, each vector of length m.cols.
std::vector<std::vector<int>> kernel_basis(const FieldCtx& F, MatFq m);

// Matrix of (t_i) |-> sum s_i t_i into forms of degree delta, where t_i runs
// over forms of degree delta - deg(s_i); column blocks in the given order.
MatFq section_map_matrix(const FieldCtx& F, const std::vector<BinaryForm>& s, int delta);

// dim ker of the two-section map at target degree delta.
int kernel_dim2(const FieldCtx& F, const BinaryForm& s1, const BinaryForm& s2, int delta);

struct Kernel3Result {
    int dim = 0;
    bool hypotheses = false;  // delta >= both stated degree-pair bounds (after sorting)
    bool formula_ok = false;  // dim == 2(delta+1) - sum deg + deg gcd, when hypotheses hold
};

Kernel3Result kernel_dim3(const FieldCtx& F, const BinaryForm& s1, const BinaryForm& s2,
                          const BinaryForm& s3, int delta);

enum class NSVariant { full, zero0, drop1, drop2, drop3, prod4 };

/* The renormalized counting family at (d, E):
 *   full   — tuples (s0, s, t), all nonzero, with sum s_i t_i w_i = 0 where
 *            w_i is the canonical section of E_i + F_i;
 *   zero0  — t_i may be zero;
 *   drop_k — t_k omitted, relation over i != k, remaining t_i may be zero;
 *   prod4  — (q^{d0+1}-1) prod (q^{d_i+1}-1), no t at all.
 * All counts include the free s0 factor.
 */
BigInt count_NS(const FieldCtx& F, const DegreeVec4& d, const DivTuple7& E, NSVariant v);

// Closed form for the zero0 variant:
// |H*_{d0}| q^{2 + 2d0 + sum d_i + 2 deg E0 + sum deg E_i - sum deg F_i}
//   * sum over nonzero s-triples of q^{deg gcd(div s_i + E_i + F_i)}.
// Requires phi_j, phi_k >= -1 for two distinct j, k.
BigInt count_NS0_closed(const FieldCtx& F, const DegreeVec4& d, const DivTuple7& E);

// Checks drop1 count <= q^{5 + 2d0 + 2d1 + 2d2 + d3 + deg E0 + deg E1 + deg E2 - deg F3}.
bool bound_NS1(const FieldCtx& F, const DegreeVec4& d, const DivTuple7& E);

} // namespace manin
