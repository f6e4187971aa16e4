// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "ec.hpp"

namespace modtor {

/// Representatives of the two F_q-isomorphism classes with a given
/// j-invariant, together with their group structures. E2 is the quadratic
/// twist of E1 by alpha.
struct TwistPair {
    Fe j;
    WCurve<Fe> e1, e2;
    GroupStructure s1, s2;
};

/// Build the standard representatives:
///   p >= 5, j != 0, 1728:  E1: y^2 = x^3 - 27j/(j-1728) x + 54j/(j-1728),
///                          E2 the alpha-twist (x-coeff * alpha^2, const * alpha^3)
///   p = 3,  j != 0:        E1: y^2 = x^3 + x^2 - 1/j,
///                          E2: y^2 = x^3 + alpha x^2 - alpha^3/j
/// alpha must be a non-square in k. UnsupportedJ for the excluded j values,
/// UnsupportedCharacteristic for p = 2.
TwistPair twist_pair(const FieldRef& k, const Fe& j, int alpha = 2);

/// true iff some twist with this j has an element of order n, i.e. n
/// divides the exponent of E1 or of E2.
bool mark_j(const FieldRef& k, const Fe& j, long n, int alpha = 2);

/// |E1(F_q)| + |E2(F_q)| = 2q + 2; InternalError if violated.
void check_twist_trace(const TwistPair& t);

}  // namespace modtor
