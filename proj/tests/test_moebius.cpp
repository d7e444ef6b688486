#include <doctest.h>

#include <bit>

#include "manin/moebius.hpp"

using namespace manin;

TEST_CASE("mu0 inverts the chart indicator on all 128 binary patterns") {
    MoebiusTable mu;
    for (unsigned n = 0; n < 128; ++n) {
        int sum = 0;
        unsigned m = n;
        for (;;) {
            sum += mu.mu0(m);
            if (m == 0) break;
            m = (m - 1) & n;
        }
        CHECK(sum == (mu.in_01S(n) ? 1 : 0));
    }
}

TEST_CASE("indicator membership examples") {
    MoebiusTable mu;
    CHECK(mu.in_01S(ExpVec7{1, 0, 0, 0, 0, 0, 0})); // e0 alone: a chart avoids s0
    CHECK(!mu.in_01S(ExpVec7{1, 1, 1, 1, 1, 1, 1}));
    CHECK(mu.in_01S(0u));
}

TEST_CASE("mu0 vanishing families") {
    MoebiusTable mu;
    // any entry >= 2
    CHECK(mu.mu0(ExpVec7{0, 2, 0, 0, 0, 0, 0}) == 0);
    CHECK(mu.mu0(ExpVec7{0, 0, 0, 0, 0, 3, 1}) == 0);
    for (unsigned n = 0; n < 128; ++n) {
        // singletons
        if (std::popcount(n) == 1) CHECK(mu.mu0(n) == 0);
        // no s-section vanishes at all
        if (n != 0 && (n & 0b0001111u) == 0) CHECK(mu.mu0(n) == 0);
        // patterns still inside the semistable locus
        if (n != 0 && mu.in_01S(n)) CHECK(mu.mu0(n) == 0);
    }
    // e_i = 1 together with f_i = 1, the other two e_j = 0, e0 = 0
    for (int i = 1; i <= 3; ++i)
        for (unsigned f = 0; f < 8; ++f) {
            unsigned fi = f | (1u << (i - 1));
            unsigned n = (1u << i) | ((fi & 1 ? 1u : 0u) << 4)
                         | ((fi & 2 ? 1u : 0u) << 5) | ((fi & 4 ? 1u : 0u) << 6);
            CHECK(mu.mu0(n) == 0);
        }
}

TEST_CASE("mu0 slice sums and support") {
    MoebiusTable mu;
    for (unsigned e0 = 0; e0 <= 1; ++e0) {
        int s = 0;
        for (unsigned rest = 0; rest < 64; ++rest) s += mu.mu0(e0 | (rest << 1));
        CHECK(s == 0);
    }
    CHECK(mu.support().size() == 64);
    for (unsigned m : mu.support()) {
        CHECK(mu.mu0(m) != 0);
        if (m != 0) CHECK((m & 0b0001111u) != 0);
    }
    CHECK(mu.mu0(ExpVec7{0, 1, 1, 0, 0, 0, 1}) != 0);
}

TEST_CASE("divisor extension is multiplicative over disjoint supports") {
    FieldCtx F(2, 1);
    MoebiusTable mu;
    auto pts = closed_points(F, 2);
    ClosedPoint P = pts[0][1], Q = pts[0][2], R = pts[1][0];

    auto tuple_at = [](const ClosedPoint& P, unsigned mask) {
        DivTuple7 E;
        for (int i = 0; i < 7; ++i)
            if (mask & (1u << i)) E[i].add_point(P, 1);
        return E;
    };
    auto merge = [](DivTuple7 a, const DivTuple7& b) {
        for (int i = 0; i < 7; ++i) a[i] = a[i] + b[i];
        return a;
    };
    for (unsigned m1 : {0b0000110u, 0b0010001u, 0b1111111u, 0b0100010u})
        for (unsigned m2 : {0b0001110u, 0b0110001u, 0b0000011u}) {
            DivTuple7 E1 = tuple_at(P, m1), E2 = tuple_at(Q, m2), E3 = tuple_at(R, m2);
            CHECK(mu.mu_div(merge(E1, E2)) == (long long)mu.mu0(m1) * mu.mu0(m2));
            CHECK(mu.mu_div(merge(E1, E3)) == (long long)mu.mu0(m1) * mu.mu0(m2));
        }
    // multiplicity two at a point kills the weight
    DivTuple7 E = tuple_at(P, 0b0000110u);
    E[1].add_point(P, 1);
    CHECK(mu.mu_div(E) == 0);
    CHECK(mu.mu_div(DivTuple7{}) == 1);
}
