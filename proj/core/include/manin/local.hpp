#pragma once

#include "manin/moebius.hpp"
#include "manin/rational.hpp"

namespace manin {

/* Local computations at a place with residue field kappa_v: densities of the
 * torsor equation with prescribed zero patterns, their closed form, and the
 * point count of the surface over kappa_v.
 */

// #{(x0, x, y) in kappa^n : sum x_i y_i = 0} / q_v^6, where coordinate j is
// forced to 0 when n_j = 1 and free otherwise (x0 is a free factor).
Rational dens(const ExpVec7& n, const FieldCtx& F);

// (1/(1 - q_v^{-2})) q_v^{-e0 - sum(e_i + f_i)} Ftilde_{(e_i+f_i)}(q_v, q_v^{-1})
// from the coefficient closed form.
Rational fact_closed(const ExpVec7& n, long long qv);

// The same value along the series route
// (1 - q_v^{-1})^3 q_v^{-e0} sum_{n_i >= e_i + f_i} q_v^{min n_i - sum n_i},
// summed exactly with closed geometric tails.
Rational fact_sum(const ExpVec7& n, long long qv);

// #{7-tuples in kappa^7 with sum x_i y_i = 0 and some chart monomial entirely
// nonzero} / (q_v - 1)^4; throws if the division is not exact.
long long s_count_torsor(const FieldCtx& F);

struct LocalReport {
    Rational dens_sum;   // sum_n mu0(n) dens(n)
    Rational fact_total; // sum_n mu0(n) fact(n)
    Rational point_side; // (1 - 1/q_v)^4 |S(kappa_v)| / q_v^2
    long long surface_points = 0;
    bool pass = false;
};

LocalReport verify_local(const FieldCtx& F);

} // namespace manin
