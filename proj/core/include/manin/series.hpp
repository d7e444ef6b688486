#pragma once

#include <array>
#include <vector>

#include "manin/poly.hpp"
#include "manin/rational.hpp"

namespace manin {

/* Truncated formal power series in 1..3 variables, dense exact-rational
 * coefficients.  shape[i] is the number of stored exponents of variable i
 * (exponents 0..shape[i]-1); unused variables have shape 1.  Multiplication
 * is lower-triangular in every exponent, so coefficients below the
 * truncation are exact.
 */
class TruncSeries {
public:
    TruncSeries(int r, std::array<int, 3> shape);
    static TruncSeries one(int r, std::array<int, 3> shape);

    int vars() const { return r_; }
    const std::array<int, 3>& shape() const { return shape_; }

    Rational& at(int i, int j = 0, int k = 0) { return c_[idx(i, j, k)]; }
    const Rational& at(int i, int j = 0, int k = 0) const { return c_[idx(i, j, k)]; }

    TruncSeries mul(const TruncSeries& o) const;
    TruncSeries add(const TruncSeries& o) const;
    TruncSeries sub(const TruncSeries& o) const;

    Rational eval(const std::array<Rational, 3>& t) const;

private:
    int r_;
    std::array<int, 3> shape_;
    std::vector<Rational> c_;
    size_t idx(int i, int j, int k) const {
        return ((size_t)i * shape_[1] + j) * shape_[2] + k;
    }
};

// Zeta series of P^1/F_q: coefficient of T^d is the number of effective
// divisors of degree d, (q^{d+1}-1)/(q-1); equals 1/((1-T)(1-qT)).
TruncSeries zeta_p1(long long q, int trunc);

// F_nu: coefficient of prod T_i^{n_i} is rho^{min_i(n_i + nu_i)}.
TruncSeries F_nu_direct(const std::vector<int>& nu, const Rational& rho, int trunc);

// The polynomial (1 - rho prod T_i) prod(1 - T_i) F_nu, assembled from its
// closed-form coefficients; degree <= max(nu)+1 in each variable.
TruncSeries F_tilde_closed(const std::vector<int>& nu, const Rational& rho);

// Single closed-form coefficient of F_tilde at exponent n.
Rational F_tilde_coeff(const std::vector<int>& nu, const Rational& rho,
                       const std::vector<int>& n);

// sum over effective-divisor tuples G of the given degrees of
// q^{deg gcd(D_i + G_i)}, by exhaustive enumeration (r <= 2).
BigInt gcd_sum_brute(const FieldCtx& F, const std::vector<DivisorP1>& D,
                     const std::vector<int>& d);

// Same quantity by coefficient extraction from the Euler product
// prod_v F_{(v(D_i))}(q_v, T^{f_v}); factors of places beyond the truncation
// are identically 1 there, so the truncation is exact.
BigInt gcd_sum_euler(const FieldCtx& F, const std::vector<DivisorP1>& D,
                     const std::vector<int>& d, int cutoff);

// lim_{T -> 1/q} (1-qT)^4 Z(q^2 T^3) Z(q T^2)^3 for Z the zeta function of
// P^1, by exact cancellation of the (1-qT) factors.
Rational main_term_residue(long long q);

// Least-squares fit of a_n = beta * n^{k-1} * alpha_inv^n over the tail of
// the coefficient list; diagnostic only.
double tauber_fit(const std::vector<double>& coeffs, int k, double alpha_inv,
                  int tail_start = -1);

} // namespace manin
