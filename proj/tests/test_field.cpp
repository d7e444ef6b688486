#include <doctest.h>

#include <stdexcept>

#include "manin/field.hpp"

using namespace manin;

TEST_CASE("multiplicative group of F_8 has exponent 7") {
    FieldCtx F(2, 3);
    for (int a = 1; a < 8; ++a) {
        int x = a;
        for (int i = 1; i < 7; ++i) x = F.mul(x, a);
        CHECK(x == 1);
    }
}

TEST_CASE("field axioms on every table-backed field in use") {
    for (auto [p, f] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        FieldCtx F(p, f);
        int q = F.q();
        CHECK(q == [&] { int r = 1; for (int i = 0; i < f; ++i) r *= p; return r; }());
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.mul(a, 1) == a);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
}

TEST_CASE("characteristic shows in repeated addition") {
    FieldCtx F(2, 2);
    for (int a = 0; a < 4; ++a) CHECK(F.add(a, a) == 0); // char 2, even though q = 4
}

TEST_CASE("prime subfield embeds as the digit-0 slice") {
    FieldCtx F(3, 2);
    // indices 0,1,2 are the prime-field constants
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(F.mul(a, b) == (a * b) % 3);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx(2, 0), std::invalid_argument);
}

TEST_CASE("pow agrees with repeated multiplication") {
    FieldCtx F(5, 1);
    for (int a = 1; a < 5; ++a) {
        int x = 1;
        for (int e = 0; e < 10; ++e) {
            CHECK(F.pow(a, e) == x);
            x = F.mul(x, a);
        }
    }
}
