// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "twists.hpp"

namespace modtor {

TwistPair twist_pair(const FieldRef& k, const Fe& j, int alpha) {
    k->check_spec(j);
    const int p = k->p();
    if (p == 2) fail(Err::unsupported_characteristic, "no twist representatives in characteristic 2");

    Fe al = k->from_int(alpha);
    if (al.is_zero() || al.is_square())
        fail(Err::config, "twist parameter alpha = " + std::to_string(alpha) + " is a square in " + k->describe());

    TwistPair out;
    out.j = j;
    if (p == 3) {
        if (j.is_zero()) fail(Err::unsupported_j, "j = 0 has extra twists in characteristic 3");
        Fe minus_inv_j = -j.inverse();
        out.e1 = WCurve<Fe>{k->zero(), k->one(), k->zero(), k->zero(), minus_inv_j};
        out.e2 = WCurve<Fe>{k->zero(), al, k->zero(), k->zero(), al * al * al * minus_inv_j};
    } else {
        Fe c1728 = k->from_int(1728);
        if (j.is_zero() || j == c1728)
            fail(Err::unsupported_j, "j in {0, 1728} has extra twists");
        Fe t = j / (j - c1728);
        Fe a4 = -(k->from_int(27) * t);
        Fe a6 = k->from_int(54) * t;
        out.e1 = WCurve<Fe>{k->zero(), k->zero(), k->zero(), a4, a6};
        out.e2 = WCurve<Fe>{k->zero(), k->zero(), k->zero(), a4 * al * al, a6 * al * al * al};
    }

    if (curve_j(out.e1) != j || curve_j(out.e2) != j)
        fail(Err::internal, "twist representative has the wrong j-invariant");

    out.s1 = group_structure(out.e1);
    out.s2 = group_structure(out.e2);
    check_twist_trace(out);
    return out;
}

bool mark_j(const FieldRef& k, const Fe& j, long n, int alpha) {
    TwistPair t = twist_pair(k, j, alpha);
    return t.s1.n1 % n == 0 || t.s2.n1 % n == 0;
}

void check_twist_trace(const TwistPair& t) {
    const long q = t.j.spec().q();
    if (t.s1.order() + t.s2.order() != 2 * q + 2)
        fail(Err::internal, "twist orders violate |E1| + |E2| = 2q + 2");
}

}  // namespace modtor
