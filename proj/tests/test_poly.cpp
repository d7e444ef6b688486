#include <doctest.h>

#include <random>

#include "manin/poly.hpp"

using namespace manin;

TEST_CASE("closed points of P^1 over F_2 up to degree 4") {
    FieldCtx F(2, 1);
    auto pts = closed_points(F, 4);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].size() == 3); // infinity, X, X+1
    CHECK(pts[1].size() == 1); // X^2+X+1
    CHECK(pts[2].size() == 2);
    CHECK(pts[3].size() == 3);
    CHECK(pts[0][0].at_infinity);
    for (size_t e = 1; e <= 4; ++e) {
        CHECK((long long)pts[e - 1].size() == closed_point_count(2, (int)e));
        for (const ClosedPoint& P : pts[e - 1]) {
            CHECK(P.deg == (int)e);
            if (!P.at_infinity) CHECK(poly_is_irreducible(F, P.minpoly));
        }
    }
}

TEST_CASE("closed point counts match the necklace formula over F_3") {
    FieldCtx F(3, 1);
    auto pts = closed_points(F, 4);
    for (size_t e = 1; e <= 4; ++e)
        CHECK((long long)pts[e - 1].size() == closed_point_count(3, (int)e));
    CHECK(closed_point_count(3, 1) == 4); // three affine points and infinity
}

TEST_CASE("divisor of a product is the sum of divisors") {
    std::mt19937 rng(42);
    for (int pf : {2, 3}) {
        FieldCtx F(pf, 1);
        for (int it = 0; it < 200; ++it) {
            int da = 1 + (int)(rng() % 4), db = 1 + (int)(rng() % 4);
            BinaryForm a = form_from_index(F, da, 1 + rng() % (form_count(F, da) - 1));
            BinaryForm b = form_from_index(F, db, 1 + rng() % (form_count(F, db) - 1));
            if (a.is_zero() || b.is_zero()) continue;
            DivisorP1 lhs = divisor_of(F, form_mul(F, a, b));
            DivisorP1 rhs = divisor_of(F, a) + divisor_of(F, b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("form gcd realizes the divisor gcd") {
    std::mt19937 rng(7);
    FieldCtx F(2, 1);
    for (int it = 0; it < 300; ++it) {
        int da = 1 + (int)(rng() % 5), db = 1 + (int)(rng() % 5);
        BinaryForm a = form_from_index(F, da, 1 + rng() % (form_count(F, da) - 1));
        BinaryForm b = form_from_index(F, db, 1 + rng() % (form_count(F, db) - 1));
        if (a.is_zero() || b.is_zero()) continue;
        BinaryForm g = form_gcd(F, a, b);
        CHECK(divisor_of(F, g) == divisor_gcd(divisor_of(F, a), divisor_of(F, b)));
    }
}

TEST_CASE("canonical section realizes every divisor in the right degree") {
    for (int pf : {2, 3}) {
        FieldCtx F(pf, 1);
        for (int d = 0; d <= 4; ++d)
            for (const DivisorP1& D : enumerate_divisors(F, d)) {
                BinaryForm f = canonical_section(F, D);
                CHECK(f.d == d);
                CHECK(divisor_of(F, f) == D);
            }
    }
}

TEST_CASE("effective divisors counted two ways") {
    for (int pf : {2, 3}) {
        FieldCtx F(pf, 1);
        long long q = pf;
        for (int d = 0; d <= 5; ++d) {
            long long expect = 0, pw = 1;
            for (int i = 0; i <= d; ++i) { expect += pw; pw *= q; }
            auto divs = enumerate_divisors(F, d);
            CHECK((long long)divs.size() == expect); // (q^{d+1}-1)/(q-1)
            for (const DivisorP1& D : divs) CHECK(D.degree() == d);
            // and they are pairwise distinct
            for (size_t i = 1; i < divs.size(); ++i)
                CHECK(!(divs[i] == divs[0]));
        }
    }
}

TEST_CASE("valuation at infinity counts leading zero coefficients") {
    FieldCtx F(2, 1);
    ClosedPoint inf = closed_points(F, 1)[0][0];
    REQUIRE(inf.at_infinity);
    BinaryForm f{3, {1, 1, 0, 0}}; // (X + Y) Y^2 ... X-coeffs low to high
    CHECK(form_valuation(F, f, inf) == 2);
}

TEST_CASE("polynomial division invariant") {
    std::mt19937 rng(11);
    FieldCtx F(3, 1);
    for (int it = 0; it < 200; ++it) {
        Poly a, b;
        for (int i = 0; i < 6; ++i) a.push_back((int)(rng() % 3));
        for (int i = 0; i < 3; ++i) b.push_back((int)(rng() % 3));
        poly_trim(a);
        poly_trim(b);
        if (b.empty()) continue;
        Poly q, r;
        poly_divmod(F, a, b, q, r);
        CHECK(poly_deg(r) < poly_deg(b));
        CHECK(poly_add(F, poly_mul(F, q, b), r) == a);
    }
}
