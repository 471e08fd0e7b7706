#include "atomlab/zaks.hpp"

#include <doctest.h>

using namespace atomlab;

TEST_CASE("defining relations hold at every index") {
    ZaksPresentation z(6);
    for (int n = 1; n <= 6; ++n) CHECK(z.relation_check(n));
    CHECK_THROWS_AS(z.relation_check(7), std::out_of_range);
    CHECK_THROWS_AS(z.relation_check(0), std::out_of_range);
}

TEST_CASE("the printed vector fails the defining relation") {
    ZaksPresentation z(4);
    for (int n = 1; n <= 4; ++n) {
        MonoidValue lhs = z.u() + z.v();
        MonoidValue rhs = z.x(n) + z.printed_y(n);
        for (int i = 0; i < n; ++i) rhs = rhs + z.w();
        CHECK(lhs != rhs);
    }
}

TEST_CASE("membership through the integer-cone kernel") {
    ZaksPresentation z(4);
    CHECK(z.member(z.u()));
    CHECK(z.member(z.y(3)));
    CHECK_FALSE(z.member(MonoidValue::zero(ValueTag::IntVec, 7).minus(z.u())));
    MonoidValue uv = z.u() + z.v();
    CHECK(z.member(uv));
    // the relation gives a second route: n*w + x_n + y_n
    MonoidValue route2 = z.x(2) + z.y(2) + z.w() + z.w();
    CHECK(route2 == uv);
    CHECK_THROWS_AS(z.member(MonoidValue::int_vec({Int(1)})), TagMismatch);
}

TEST_CASE("u + v has depth + 1 distinct factorizations") {
    for (int depth = 2; depth <= 4; ++depth) {
        ZaksPresentation z(depth);
        MonoidKernel k(z.pres());
        auto facts = k.factorizations(z.u() + z.v());
        CHECK(facts.size() == static_cast<std::size_t>(depth) + 1);
    }
}
