// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace modtor {

/// A cusp of X1(N): the class of +-(x, y) with x, y mod N, gcd(x, y, N) = 1,
/// where x only matters mod d = gcd(y, N). Canonical representative: of the
/// two sign choices take the lexicographically smaller (y, x), with x
/// normalized into [1, d].
struct Cusp {
    int x = 1;
    int y = 0;
    int d = 1;  // gcd(y, N)

    bool operator==(const Cusp&) const = default;
    bool operator<(const Cusp& o) const { return std::pair(y, x) < std::pair(o.y, o.x); }
    std::string str() const;  // "±(x,y)"
};

Cusp make_cusp(int n, int x, int y);

/// Per-divisor cusp counts of X1(N): phi(d)*phi(N/d)/2 at each d | N.
/// UnsupportedLevel below 5.
std::vector<std::pair<int, long>> cusp_inventory(int n);

/// All cusps of X1(N), sorted by (d, y, x).
std::vector<Cusp> x1_cusps(int n);
std::vector<Cusp> x1_cusps_at_level(int n, int d);

struct CuspOrbit {
    std::vector<Cusp> members;  // sorted
    bool operator==(const CuspOrbit&) const = default;
};

/// Orbits of the diamond action (x, y) -> (a x, a^-1 y) for a in delta.
/// delta must be a subgroup of (Z/N)^x containing +-1 (InvalidDelta).
/// Output orbits are sorted by smallest member.
std::vector<CuspOrbit> delta_orbits(int n, const std::vector<int>& delta, const std::vector<Cusp>& cusps);

/// Group orbits into Galois conjugacy classes: orbits sharing a y-value are
/// conjugate (transitively). Returns index sets into the orbit list; a class
/// of size 2 is a quadratic cusp of the quotient curve.
std::vector<std::vector<int>> conjugacy_classes(const std::vector<CuspOrbit>& orbits);

/// omega_{N'} sends the cusp (1,1) to (1,N'). InvalidDivisor unless N' | N
/// with gcd(N', N/N') = 1.
Cusp al_on_cusp(int n, int n_prime);

/// The X0(N)-cusp containing (1, N') has its X_Delta fibre made of
/// quadratic (size-2) conjugacy classes?
bool fiber_is_quadratic(int n, const std::vector<int>& delta, int n_prime);

}  // namespace modtor
