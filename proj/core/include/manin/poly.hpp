#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "manin/field.hpp"

namespace manin {

/* Univariate polynomials over a FieldCtx are dense coefficient vectors,
 * coeff[i] = coefficient of X^i, no trailing zeros (zero poly = empty).
 */
using Poly = std::vector<int>;

inline int poly_deg(const Poly& a) { return (int)a.size() - 1; }
void poly_trim(Poly& a);
Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
// a = q*b + r with deg r < deg b
void poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_monic(const FieldCtx& F, const Poly& a);
Poly poly_gcd(const FieldCtx& F, Poly a, Poly b); // monic (or zero)
bool poly_is_irreducible(const FieldCtx& F, const Poly& a);

// Monic irreducibles over F_q grouped by degree; index e-1 holds degree e.
std::vector<std::vector<Poly>> monic_irreducibles(const FieldCtx& F, int max_deg);

/* A closed point of P^1 over F_q: either the point at infinity or a monic
 * irreducible in the affine coordinate X.
 */
struct ClosedPoint {
    bool at_infinity = false;
    Poly minpoly;          // empty when at_infinity
    int deg = 1;

    auto operator<=>(const ClosedPoint&) const = default;
};

// All closed points of degree <= max_deg, grouped: result[e-1] has degree e.
// Infinity is listed first among the degree-1 points.
std::vector<std::vector<ClosedPoint>> closed_points(const FieldCtx& F, int max_deg);

// Number of closed points of P^1/F_q of exact degree e (necklace count + the
// extra rational point at infinity for e = 1).
long long closed_point_count(long long q, int e);

/* Effective divisor on P^1: closed points with positive multiplicities. */
struct DivisorP1 {
    std::map<ClosedPoint, int> mult;

    int degree() const;
    void add_point(const ClosedPoint& P, int k);
    bool operator==(const DivisorP1&) const = default;
};

DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b);
DivisorP1 divisor_gcd(const DivisorP1& a, const DivisorP1& b);
int valuation(const DivisorP1& D, const ClosedPoint& P);

/* Homogeneous form of degree d in (X, Y); coeffs[i] multiplies X^i Y^{d-i}.
 * The dehomogenization at Y=1 reuses the same coefficient vector, so the
 * multiplicity at infinity is the number of leading zero coefficients.
 */
struct BinaryForm {
    int d = 0;
    std::vector<int> coeffs; // size d+1

    bool is_zero() const {
        for (int c : coeffs) if (c != 0) return false;
        return true;
    }
    bool operator==(const BinaryForm&) const = default;
};

BinaryForm form_from_poly(const FieldCtx& F, const Poly& p, int d); // homogenize to degree d
BinaryForm form_mul(const FieldCtx& F, const BinaryForm& a, const BinaryForm& b);
BinaryForm form_gcd(const FieldCtx& F, const BinaryForm& a, const BinaryForm& b);
int form_valuation(const FieldCtx& F, const BinaryForm& a, const ClosedPoint& P);
DivisorP1 divisor_of(const FieldCtx& F, const BinaryForm& a);

// Unique form of the divisor's degree with divisor D and leading nonzero
// coefficient 1 (i.e. monic after pulling out the infinity factor).
BinaryForm canonical_section(const FieldCtx& F, const DivisorP1& D);

/* Deterministic indexing of all q^{d+1} forms of degree d: index digits in
 * base q are the coefficients, so index 0 is the zero form.  Contiguous index
 * ranges partition the stream for parallel consumption.
 */
BinaryForm form_from_index(const FieldCtx& F, int d, unsigned long long idx);
unsigned long long form_count(const FieldCtx& F, int d); // q^{d+1}

// Representatives of nonzero forms modulo scalars: first nonzero coefficient
// (scanning from index 0) equal to 1.  There are (q^{d+1}-1)/(q-1) of them.
std::vector<BinaryForm> normalized_forms(const FieldCtx& F, int d);

// All effective divisors of degree d (via normalized forms).
std::vector<DivisorP1> enumerate_divisors(const FieldCtx& F, int d);

} // namespace manin
