// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include "trace.hpp"

using namespace modtor;

namespace {

struct Fixture {
    const ModelSet& set = builtin_models();
    const Model& m32 = set.get("x0_32");
    const Model& m24 = set.get("x0_24");
    FieldRef f27 = set.field(3, 3);
    FieldRef f125 = set.field(5, 3);
    WCurve<Fe> c32 = reduce_model(m32, f27);
    WCurve<Fe> c24 = reduce_model(m24, f125);
};

EcPoint<Fe> fpt(const FieldRef& k, int x, int y) {
    return EcPoint<Fe>::affine(k->from_int(x), k->from_int(y));
}

}  // namespace

TEST_CASE("frobenius on points") {
    Fixture fx;
    for (const auto& p : ec_enumerate(fx.c32)) {
        EcPoint<Fe> img = frob_point(fx.c32, p);
        CHECK(is_on_curve(fx.c32, img));
        if (is_prime_rational(p)) CHECK(img == p);
        CHECK(frob_point(fx.c32, frob_point(fx.c32, img)) == p);  // frob^3 = id
    }

    // curves with extension-field coefficients are rejected
    WCurve<Fe> bad = fx.c32;
    bad.a6 = fx.f27->make_element(std::vector<int>{0, 1, 0});
    CHECK_THROWS_AS(frob_point(bad, EcPoint<Fe>::inf()), Error);
}

TEST_CASE("trace map reproduces the table values") {
    Fixture fx;
    auto el27 = [&](std::initializer_list<int> br) { return fx.f27->make_element(std::vector<int>(br)); };
    auto el125 = [&](std::initializer_list<int> br) { return fx.f125->make_element(std::vector<int>(br)); };

    EcPoint<Fe> p = EcPoint<Fe>::affine(el27({0, 1, 0}), el27({2, 1, 1}));
    CHECK(trace_map(fx.c32, p) == fpt(fx.f27, 0, 2));

    EcPoint<Fe> q = EcPoint<Fe>::affine(el125({0, 1, 1}), el125({3, 0, 1}));
    CHECK(trace_map(fx.c24, q) == fpt(fx.f125, 0, 1));
}

TEST_CASE("frobenius commutes with the j-formula") {
    Fixture fx;
    for (const auto& p : ec_enumerate(fx.c32)) {
        try {
            Fe j = j_of_point(fx.m32, fx.c32, p);
            CHECK(j_of_point(fx.m32, fx.c32, frob_point(fx.c32, p)) == j.frobenius());
        } catch (const Error& e) {
            CHECK(e.kind() == Err::cuspidal_or_bad_point);
        }
    }
}

TEST_CASE("trace properties on every point") {
    Fixture fx;
    for (const WCurve<Fe>* c : {&fx.c32, &fx.c24}) {
        for (const auto& p : ec_enumerate(*c)) {
            EcPoint<Fe> t = trace_map(*c, p);
            CHECK(is_prime_rational(t));
            CHECK(frob_point(*c, t) == t);  // the trace is Frobenius-fixed
            // trace commutes with negation
            CHECK(trace_map(*c, ec_neg(*c, p)) == ec_neg(*c, t));
            // on prime-rational points the trace is multiplication by 3
            if (is_prime_rational(p)) CHECK(t == ec_scalar_mul(*c, 3, p));
        }
    }
}

TEST_CASE("forbidden trace targets per branch") {
    Fixture fx;

    // x0_24: all three quadratic-cusp image reductions are forbidden
    auto targets = forbidden_trace_targets(fx.m24, *fx.f125, "");
    REQUIRE(targets.size() == 3);
    CHECK(classify_trace(fx.m24, fx.c24, fpt(fx.f125, 0, 1), "") == TraceClass::forbidden);
    CHECK(classify_trace(fx.m24, fx.c24, fpt(fx.f125, 2, 0), "") == TraceClass::forbidden);
    CHECK(classify_trace(fx.m24, fx.c24, fpt(fx.f125, 1, 2), "") == TraceClass::forbidden);
    CHECK(classify_trace(fx.m24, fx.c24, EcPoint<Fe>::inf(), "") == TraceClass::allowed);
    CHECK(classify_trace(fx.m24, fx.c24, fpt(fx.f125, 0, 4), "") == TraceClass::allowed);
    CHECK(classify_trace(fx.m24, fx.c24, fpt(fx.f125, 3, 0), "") == TraceClass::allowed);

    // x0_32: the branch hypothesis picks which reduction is excluded
    CHECK(classify_trace(fx.m32, fx.c32, fpt(fx.f27, 0, 1), "omega") == TraceClass::forbidden);
    CHECK(classify_trace(fx.m32, fx.c32, fpt(fx.f27, 0, 2), "omega") == TraceClass::allowed);
    CHECK(classify_trace(fx.m32, fx.c32, fpt(fx.f27, 0, 2), "omega_prime") == TraceClass::forbidden);
    CHECK(classify_trace(fx.m32, fx.c32, fpt(fx.f27, 0, 1), "omega_prime") == TraceClass::allowed);
    CHECK(classify_trace(fx.m32, fx.c32, fpt(fx.f27, 1, 0), "omega") == TraceClass::allowed);
    CHECK(classify_trace(fx.m32, fx.c32, fpt(fx.f27, 1, 0), "omega_prime") == TraceClass::allowed);

    // a target outside the prime field is an internal error
    EcPoint<Fe> ext = EcPoint<Fe>::affine(fx.f27->make_element(std::vector<int>{0, 1, 0}),
                                          fx.f27->make_element(std::vector<int>{2, 1, 1}));
    try {
        classify_trace(fx.m32, fx.c32, ext, "omega");
        FAIL("expected InternalError");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::internal);
    }
}
