#include "manin/sections.hpp"

#include <algorithm>
#include <stdexcept>

namespace manin {

int row_reduce(const FieldCtx& F, MatFq& m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        int inv = F.inv(m.at(rank, col));
        for (int j = col; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            int c = m.at(r, col);
            if (c == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(c, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> kernel_basis(const FieldCtx& F, MatFq m) {
    int rank = row_reduce(F, m);
    // identify pivot columns
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(m.cols, false);
    for (int r = 0, c = 0; r < rank; ++r) {
        while (c < m.cols && m.at(r, c) == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = true;
    }
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(m.cols, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFq section_map_matrix(const FieldCtx& F, const std::vector<BinaryForm>& s, int delta) {
    int cols = 0;
    for (const BinaryForm& si : s) {
        int e = delta - si.d;
        if (e >= 0) cols += e + 1;
    }
    MatFq m;
    m.rows = delta + 1;
    m.cols = cols;
    m.a.assign((size_t)m.rows * m.cols, 0);
    int col = 0;
    for (const BinaryForm& si : s) {
        int e = delta - si.d;
        for (int j = 0; j <= e; ++j, ++col)
            for (int k = 0; k <= si.d; ++k)
                m.at(j + k, col) = si.coeffs[k];
    }
    return m;
}

int kernel_dim2(const FieldCtx& F, const BinaryForm& s1, const BinaryForm& s2, int delta) {
    MatFq m = section_map_matrix(F, {s1, s2}, delta);
    return m.cols - row_reduce(F, m);
}

Kernel3Result kernel_dim3(const FieldCtx& F, const BinaryForm& s1, const BinaryForm& s2,
                          const BinaryForm& s3, int delta) {
    Kernel3Result res;
    MatFq m = section_map_matrix(F, {s1, s2, s3}, delta);
    res.dim = m.cols - row_reduce(F, m);
    int deg[3] = {s1.d, s2.d, s3.d};
    std::sort(deg, deg + 3, std::greater<int>());
    res.hypotheses = delta >= deg[0] + deg[1] - 1 && delta >= deg[1] + deg[2] - 1;
    if (res.hypotheses) {
        int g = form_gcd(F, form_gcd(F, s1, s2), s3).d;
        int expected = 2 * (delta + 1) - (s1.d + s2.d + s3.d) + g;
        res.formula_ok = (res.dim == expected);
    }
    return res;
}

namespace {

std::array<int, 7> degrees_of(const DivTuple7& E) {
    std::array<int, 7> d;
    for (int i = 0; i < 7; ++i) d[i] = E[i].degree();
    return d;
}

// kernel dimension of the map restricted to the blocks listed in `use`
int subset_kernel_dim(const FieldCtx& F, const std::vector<BinaryForm>& u,
                      const std::vector<int>& psi, const std::vector<int>& use, int delta) {
    std::vector<BinaryForm> sel;
    for (int i : use)
        if (psi[i] >= 0) sel.push_back(u[i]);
    if (sel.empty()) return 0;
    MatFq m = section_map_matrix(F, sel, delta);
    return m.cols - row_reduce(F, m);
}

} // namespace

BigInt count_NS(const FieldCtx& F, const DegreeVec4& d, const DivTuple7& E, NSVariant v) {
    long long q = F.q();
    auto Edeg = degrees_of(E);

    BigInt s0_factor = int_pow(q, d[0] + 1) - 1;

    if (v == NSVariant::prod4) {
        BigInt total = s0_factor;
        for (int i = 1; i <= 3; ++i) total *= int_pow(q, d[i] + 1) - 1;
        return total;
    }

    std::vector<int> psi(3);
    for (int i = 1; i <= 3; ++i) psi[i - 1] = surface::psi(i, d, Edeg);

    if (v == NSVariant::full)
        for (int i = 0; i < 3; ++i)
            if (psi[i] < 0) return 0; // no nonzero section of negative degree

    int delta = d[0] + d[1] + d[2] + d[3] + Edeg[0] + Edeg[1] + Edeg[2] + Edeg[3];

    // weights: canonical sections of E_i + F_i; every monomial s_i w_i t_i
    // lands in degree delta
    std::vector<BinaryForm> w(3);
    for (int i = 0; i < 3; ++i) w[i] = canonical_section(F, E[1 + i] + E[4 + i]);

    int drop = -1;
    if (v == NSVariant::drop1) drop = 0;
    if (v == NSVariant::drop2) drop = 1;
    if (v == NSVariant::drop3) drop = 2;

    BigInt total = 0;
    unsigned long long n1 = form_count(F, d[1]);
    unsigned long long n2 = form_count(F, d[2]);
    unsigned long long n3 = form_count(F, d[3]);
    std::vector<BinaryForm> u(3);
    for (unsigned long long i1 = 1; i1 < n1; ++i1) {
        u[0] = form_mul(F, form_from_index(F, d[1], i1), w[0]);
        for (unsigned long long i2 = 1; i2 < n2; ++i2) {
            u[1] = form_mul(F, form_from_index(F, d[2], i2), w[1]);
            for (unsigned long long i3 = 1; i3 < n3; ++i3) {
                u[2] = form_mul(F, form_from_index(F, d[3], i3), w[2]);
                if (v == NSVariant::zero0) {
                    int k = subset_kernel_dim(F, u, psi, {0, 1, 2}, delta);
                    total += int_pow(q, k);
                } else if (drop >= 0) {
                    std::vector<int> use;
                    for (int i = 0; i < 3; ++i)
                        if (i != drop) use.push_back(i);
                    total += int_pow(q, subset_kernel_dim(F, u, psi, use, delta));
                } else {
                    // all t_i nonzero, by inclusion-exclusion over t_j = 0
                    BigInt acc = int_pow(q, subset_kernel_dim(F, u, psi, {0, 1, 2}, delta));
                    for (int j = 0; j < 3; ++j) {
                        std::vector<int> use;
                        for (int i = 0; i < 3; ++i)
                            if (i != j) use.push_back(i);
                        acc -= int_pow(q, subset_kernel_dim(F, u, psi, use, delta));
                    }
                    acc += 3; // |J| = 2 leaves a single block, kernel {0}
                    acc -= 1; // |J| = 3
                    total += acc;
                }
            }
        }
    }
    return s0_factor * total;
}

BigInt count_NS0_closed(const FieldCtx& F, const DegreeVec4& d, const DivTuple7& E) {
    long long q = F.q();
    auto Edeg = degrees_of(E);
    int ok = 0;
    for (int i = 1; i <= 3; ++i)
        if (surface::phi(i, d, Edeg) >= -1) ++ok;
    if (ok < 2)
        throw std::invalid_argument("count_NS0_closed: needs phi_j, phi_k >= -1 for two indices");

    long long ex = 2 + 2LL * d[0] + d[1] + d[2] + d[3] + 2LL * Edeg[0]
                   + Edeg[1] + Edeg[2] + Edeg[3] - Edeg[4] - Edeg[5] - Edeg[6];

    BigInt gcd_sum = 0;
    unsigned long long n1 = form_count(F, d[1]);
    unsigned long long n2 = form_count(F, d[2]);
    unsigned long long n3 = form_count(F, d[3]);
    for (unsigned long long i1 = 1; i1 < n1; ++i1) {
        DivisorP1 D1 = divisor_of(F, form_from_index(F, d[1], i1)) + E[1] + E[4];
        for (unsigned long long i2 = 1; i2 < n2; ++i2) {
            DivisorP1 D2 = divisor_of(F, form_from_index(F, d[2], i2)) + E[2] + E[5];
            DivisorP1 g12 = divisor_gcd(D1, D2);
            for (unsigned long long i3 = 1; i3 < n3; ++i3) {
                DivisorP1 D3 = divisor_of(F, form_from_index(F, d[3], i3)) + E[3] + E[6];
                gcd_sum += int_pow(q, divisor_gcd(g12, D3).degree());
            }
        }
    }

    Rational total = Rational(int_pow(q, d[0] + 1) - 1) * q_pow(q, ex) * Rational(gcd_sum);
    if (denominator(total) != 1)
        throw std::logic_error("count_NS0_closed: non-integer total");
    return numerator(total);
}

bool bound_NS1(const FieldCtx& F, const DegreeVec4& d, const DivTuple7& E) {
    auto Edeg = degrees_of(E);
    BigInt n1 = count_NS(F, d, E, NSVariant::drop1);
    long long ex = 5 + 2LL * d[0] + 2LL * d[1] + 2LL * d[2] + d[3]
                   + Edeg[0] + Edeg[1] + Edeg[2] - Edeg[6];
    return Rational(n1) <= q_pow(F.q(), ex);
}

} // namespace manin
