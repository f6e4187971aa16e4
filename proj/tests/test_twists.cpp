// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include "twists.hpp"

using namespace modtor;

namespace {

Fe el(const FieldRef& k, std::initializer_list<int> br) { return k->make_element(std::vector<int>(br)); }

}  // namespace

TEST_CASE("characteristic-3 twist structures") {
    auto k = FieldSpec::gf(3, 3);

    TwistPair t = twist_pair(k, el(k, {2, 0, 0}));
    CHECK(t.s1 == GroupStructure{1, 24});
    CHECK(t.s2 == GroupStructure{1, 32});
    CHECK(curve_j(t.e1) == t.j);
    CHECK(curve_j(t.e2) == t.j);

    TwistPair u = twist_pair(k, el(k, {2, 0, 2}));
    CHECK(u.s1 == GroupStructure{2, 12});
    CHECK(u.s2 == GroupStructure{2, 16});
}

TEST_CASE("characteristic-5 twist structures") {
    auto k = FieldSpec::gf(5, 3);

    TwistPair t = twist_pair(k, el(k, {4, 1, 0}));
    CHECK(t.s1 == GroupStructure{1, 144});
    CHECK(t.s2 == GroupStructure{1, 108});

    TwistPair u = twist_pair(k, el(k, {3, 2, 2}));
    CHECK(u.s1 == GroupStructure{2, 72});
    CHECK(u.s2 == GroupStructure{2, 54});

    TwistPair v = twist_pair(k, el(k, {4, 4, 4}));
    CHECK(v.s1 == GroupStructure{2, 72});
    CHECK(v.s2 == GroupStructure{2, 54});
}

TEST_CASE("marking by twist exponents") {
    auto f27 = FieldSpec::gf(3, 3);
    CHECK(mark_j(f27, el(f27, {2, 0, 0}), 32));
    CHECK_FALSE(mark_j(f27, el(f27, {2, 0, 2}), 32));
    CHECK_FALSE(mark_j(f27, el(f27, {2, 1, 1}), 32));
    CHECK(mark_j(f27, el(f27, {2, 1, 2}), 32));

    auto f125 = FieldSpec::gf(5, 3);
    // a cyclic Z/120 side has an order-24 element even though 24 does not
    // divide the other side
    CHECK(mark_j(f125, el(f125, {0, 2, 2}), 24));
    CHECK(mark_j(f125, el(f125, {3, 2, 4}), 24));
}

TEST_CASE("twist trace identity across both full fields") {
    for (auto k : {FieldSpec::gf(3, 3), FieldSpec::gf(5, 3)}) {
        const Fe c1728 = k->from_int(1728);
        long checked = 0;
        for (const Fe& j : enumerate_field(*k)) {
            if (j.is_zero()) continue;
            if (k->p() != 3 && j == c1728) continue;
            TwistPair t = twist_pair(k, j);  // runs the 2q+2 check internally
            CHECK(t.s1.order() + t.s2.order() == 2 * k->q() + 2);
            ++checked;
        }
        CHECK(checked == (k->p() == 3 ? k->q() - 1 : k->q() - 2));
    }
}

TEST_CASE("twist construction rejections") {
    auto f27 = FieldSpec::gf(3, 3);
    CHECK_THROWS_AS(twist_pair(f27, f27->zero()), Error);

    auto f125 = FieldSpec::gf(5, 3);
    CHECK_THROWS_AS(twist_pair(f125, f125->zero()), Error);
    CHECK_THROWS_AS(twist_pair(f125, f125->from_int(1728)), Error);  // 1728 = 3 mod 5

    auto f4 = FieldSpec::gf(2, 2);
    CHECK_THROWS_AS(twist_pair(f4, f4->one()), Error);  // characteristic 2

    // alpha must be a non-square
    CHECK_THROWS_AS(twist_pair(f27, f27->make_element(std::vector<int>{2, 0, 0}), 4), Error);
}
