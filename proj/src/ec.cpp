// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ec.hpp"

#include <numeric>

namespace modtor {

std::string GroupStructure::str() const {
    if (n2 == 1) return "Z/" + std::to_string(n1);
    return "Z/" + std::to_string(n2) + "×Z/" + std::to_string(n1);
}

std::pair<Fe, Fe> canonical_root_pair(const Fe& r1, const Fe& r2) {
    if (r1.in_prime_subfield() && r2.in_prime_subfield())
        return r1.coeff(0) > r2.coeff(0) ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
    const int lo = (r1.spec().p() - 1) / 2;
    int n1 = r1.norm_to_prime();
    if (n1 >= 1 && n1 <= lo) return {r1, r2};
    int n2 = r2.norm_to_prime();
    if (n2 >= 1 && n2 <= lo) return {r2, r1};
    return r1.index() < r2.index() ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

std::vector<EcPoint<Fe>> ec_enumerate(const WCurve<Fe>& c) {
    const FieldSpec& k = c.a4.spec();
    if (k.q() > FieldSpec::enumeration_budget())
        fail(Err::enumeration_too_large, "curve enumeration exceeds the budget");
    if (ec_is_zero(curve_disc(c))) fail(Err::config, "cannot enumerate a singular curve");

    std::vector<EcPoint<Fe>> pts;
    pts.push_back(EcPoint<Fe>::inf());
    for (long i = 0; i < k.q(); ++i) {
        Fe x = k.element(static_cast<uint32_t>(i));
        // complete the square: with a1 = a3 = 0 this is y^2 = f(x)
        if (!c.a1.is_zero() || !c.a3.is_zero())
            fail(Err::config, "enumeration expects a model with a1 = a3 = 0");
        Fe f = x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
        auto roots = k.sqrt(f);
        if (roots.count == 0) continue;
        if (roots.count == 1) {
            pts.push_back(EcPoint<Fe>::affine(x, roots.r[0]));
            continue;
        }
        auto [y1, y2] = canonical_root_pair(roots.r[0], roots.r[1]);
        pts.push_back(EcPoint<Fe>::affine(x, y1));
        pts.push_back(EcPoint<Fe>::affine(x, y2));
    }
    return pts;
}

long point_order(const WCurve<Fe>& c, const EcPoint<Fe>& p) {
    ensure_on_curve(c, p);
    const long bound = 2 * c.a4.spec().q() + 2;  // Hasse upper bound is smaller
    EcPoint<Fe> q = p;
    long k = 1;
    while (!q.infinity) {
        q = detail::add_raw(c, q, p);
        ++k;
        if (k > bound) fail(Err::internal, "point order exceeds the group bound");
    }
    return k;
}

GroupStructure group_structure(const WCurve<Fe>& c) {
    auto pts = ec_enumerate(c);
    const long size = static_cast<long>(pts.size());
    long exponent = 1;
    for (const auto& p : pts) exponent = std::lcm(exponent, point_order(c, p));
    GroupStructure g;
    g.n1 = exponent;
    g.n2 = size / exponent;
    if (g.n1 * g.n2 != size || g.n1 % g.n2 != 0)
        fail(Err::internal, "invariant factors do not multiply to the group order");
    if ((c.a4.spec().q() - 1) % g.n2 != 0)
        fail(Err::internal, "n2 does not divide q-1");
    return g;
}

bool hasse_admits_order(long q, long n) {
    // n <= q + 1 + 2*sqrt(q), decided exactly: for n > q+1 compare
    // (n-q-1)^2 against 4q.
    if (n <= q + 1) return true;
    long s = n - q - 1;
    return s * s <= 4 * q;
}

WCurve<Fe> curve_over(const FieldRef& k, long a1, long a2, long a3, long a4, long a6) {
    return WCurve<Fe>{k->from_int(a1), k->from_int(a2), k->from_int(a3), k->from_int(a4), k->from_int(a6)};
}

std::string point_str(const EcPoint<Fe>& p) {
    if (p.infinity) return "(∞,∞)";
    return "(" + p.x.str() + "," + p.y.str() + ")";
}

std::string point_str(const EcPoint<Rat>& p) {
    if (p.infinity) return "(∞,∞)";
    return "(" + rat_str(p.x) + "," + rat_str(p.y) + ")";
}

}  // namespace modtor
