// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <vector>

#include "ff.hpp"
#include "rat.hpp"

namespace modtor {

/// Long Weierstrass curve y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6
/// over any field K with exact arithmetic (Fe or Rat here).
template <class K>
struct WCurve {
    K a1, a2, a3, a4, a6;
};

template <class K>
struct EcPoint {
    bool infinity = true;
    K x{}, y{};

    static EcPoint inf() { return EcPoint{}; }
    static EcPoint affine(K px, K py) { return EcPoint{false, std::move(px), std::move(py)}; }
};

template <class K>
bool operator==(const EcPoint<K>& a, const EcPoint<K>& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
}

namespace detail {
template <class K>
K kmul(const K& v, int m) {  // m >= 0 small; avoids needing from_int on K
    K sum = v - v;           // zero of the right field
    K acc = v;
    int mm = m;
    while (mm > 0) {
        if (mm & 1) sum = sum + acc;
        acc = acc + acc;
        mm >>= 1;
    }
    return sum;
}
}  // namespace detail

// b- and c-invariants of the general Weierstrass model; valid in every
// characteristic.
template <class K>
K curve_b2(const WCurve<K>& c) { return c.a1 * c.a1 + detail::kmul(c.a2, 4); }
template <class K>
K curve_b4(const WCurve<K>& c) { return detail::kmul(c.a4, 2) + c.a1 * c.a3; }
template <class K>
K curve_b6(const WCurve<K>& c) { return c.a3 * c.a3 + detail::kmul(c.a6, 4); }
template <class K>
K curve_b8(const WCurve<K>& c) {
    return c.a1 * c.a1 * c.a6 + detail::kmul(c.a2 * c.a6, 4) - c.a1 * c.a3 * c.a4 + c.a2 * c.a3 * c.a3 -
           c.a4 * c.a4;
}

template <class K>
bool ec_is_zero(const K& v);

template <>
inline bool ec_is_zero<Fe>(const Fe& v) { return v.is_zero(); }
template <>
inline bool ec_is_zero<Rat>(const Rat& v) { return v == 0; }

template <class K>
K curve_disc(const WCurve<K>& c) {
    using detail::kmul;
    K b2 = curve_b2(c), b4 = curve_b4(c), b6 = curve_b6(c), b8 = curve_b8(c);
    return kmul(b2 * b4 * b6, 9) - b2 * b2 * b8 - kmul(b4 * b4 * b4, 8) - kmul(b6 * b6, 27);
}

/// j-invariant c4^3 / disc; the curve must be nonsingular.
template <class K>
K curve_j(const WCurve<K>& c) {
    using detail::kmul;
    K b2 = curve_b2(c), b4 = curve_b4(c);
    K c4 = b2 * b2 - kmul(b4, 24);
    K disc = curve_disc(c);
    if (ec_is_zero(disc)) fail(Err::config, "singular curve has no j-invariant");
    return c4 * c4 * c4 / disc;
}

template <class K>
bool is_on_curve(const WCurve<K>& c, const EcPoint<K>& p) {
    if (p.infinity) return true;
    K lhs = p.y * p.y + c.a1 * p.x * p.y + c.a3 * p.y;
    K rhs = p.x * p.x * p.x + c.a2 * p.x * p.x + c.a4 * p.x + c.a6;
    return ec_is_zero(lhs - rhs);
}

template <class K>
void ensure_on_curve(const WCurve<K>& c, const EcPoint<K>& p) {
    if (!is_on_curve(c, p)) fail(Err::not_on_curve, "point does not satisfy the curve equation");
}

template <class K>
EcPoint<K> ec_neg(const WCurve<K>& c, const EcPoint<K>& p) {
    if (p.infinity) return p;
    return EcPoint<K>::affine(p.x, (p.y - p.y) - p.y - c.a1 * p.x - c.a3);
}

namespace detail {
// group law without on-curve validation; callers validate once up front
template <class K>
EcPoint<K> add_raw(const WCurve<K>& c, const EcPoint<K>& p, const EcPoint<K>& q) {
    using detail::kmul;
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (p.x == q.x) {
        // q == -p exactly when the y's sum to -a1*x - a3
        K s = p.y + q.y + c.a1 * p.x + c.a3;
        if (ec_is_zero(s)) return EcPoint<K>::inf();
    }
    K lam;
    if (p.x == q.x && p.y == q.y) {
        K num = kmul(p.x * p.x, 3) + kmul(c.a2 * p.x, 2) + c.a4 - c.a1 * p.y;
        K den = kmul(p.y, 2) + c.a1 * p.x + c.a3;
        lam = num / den;
    } else {
        lam = (q.y - p.y) / (q.x - p.x);
    }
    K x3 = lam * lam + c.a1 * lam - c.a2 - p.x - q.x;
    K y3 = lam * (p.x - x3) - p.y - c.a1 * x3 - c.a3;
    return EcPoint<K>::affine(x3, y3);
}
}  // namespace detail

/// Abelian group law with infinity as identity. NotOnCurve if an operand
/// is not on c.
template <class K>
EcPoint<K> ec_add(const WCurve<K>& c, const EcPoint<K>& p, const EcPoint<K>& q) {
    ensure_on_curve(c, p);
    ensure_on_curve(c, q);
    return detail::add_raw(c, p, q);
}

template <class K>
EcPoint<K> ec_scalar_mul(const WCurve<K>& c, long k, const EcPoint<K>& p) {
    ensure_on_curve(c, p);
    EcPoint<K> base = p;
    if (k < 0) {
        base = ec_neg(c, p);
        k = -k;
    }
    EcPoint<K> r = EcPoint<K>::inf();
    while (k > 0) {
        if (k & 1) r = detail::add_raw(c, r, base);
        base = detail::add_raw(c, base, base);
        k >>= 1;
    }
    return r;
}

struct GroupStructure {
    long n2 = 1;  // invariant factors: Z/n2 x Z/n1 with n2 | n1
    long n1 = 1;

    long order() const { return n1 * n2; }
    bool operator==(const GroupStructure&) const = default;
    std::string str() const;
};

/// All points of the curve over its finite base field, infinity first, then
/// x in canonical field order. For an x with two y-roots the first listed
/// root is the one whose norm down to F_p lies in {1, ..., (p-1)/2}; pairs
/// inside the prime subfield are listed larger residue first. This is the
/// fixed presentation order used by every table in this project.
std::vector<EcPoint<Fe>> ec_enumerate(const WCurve<Fe>& c);

/// Canonical (y, -y) ordering described above.
std::pair<Fe, Fe> canonical_root_pair(const Fe& r1, const Fe& r2);

long point_order(const WCurve<Fe>& c, const EcPoint<Fe>& p);

/// Invariant factors from exhaustive element orders: n1 = group exponent,
/// n2 = |E|/n1. Consistency (n2 | n1, n2 | q-1) is re-checked.
GroupStructure group_structure(const WCurve<Fe>& c);

/// true iff a point of order n is not excluded by the Hasse bound alone,
/// i.e. n <= (1+sqrt(q))^2. Exact integer arithmetic.
bool hasse_admits_order(long q, long n);

WCurve<Fe> curve_over(const FieldRef& k, long a1, long a2, long a3, long a4, long a6);

std::string point_str(const EcPoint<Fe>& p);
std::string point_str(const EcPoint<Rat>& p);

}  // namespace modtor
