// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "cusps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace modtor {

namespace {

long phi(int n) {
    long result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

int inv_mod(int a, int n) {
    for (int b = 1; b < n; ++b)
        if (mod(a * b, n) == 1) return b;
    fail(Err::internal, "residue is not invertible");
}

void check_level(int n) {
    if (n < 5) fail(Err::unsupported_level, "cusp combinatorics implemented for N >= 5");
}

void check_delta(int n, const std::vector<int>& delta) {
    std::set<int> s;
    for (int a : delta) {
        int r = mod(a, n);
        if (std::gcd(r, n) != 1) fail(Err::invalid_delta, "delta contains a non-unit");
        s.insert(r);
    }
    if (!s.count(1) || !s.count(n - 1)) fail(Err::invalid_delta, "delta must contain +1 and -1");
    for (int a : s)
        for (int b : s)
            if (!s.count(mod(a * b, n))) fail(Err::invalid_delta, "delta is not a subgroup");
}

}  // namespace

std::string Cusp::str() const { return "±(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

Cusp make_cusp(int n, int x, int y) {
    check_level(n);
    x = mod(x, n);
    y = mod(y, n);
    const int d = y == 0 ? n : std::gcd(y, n);
    if (std::gcd(std::gcd(x, y), n) != 1) fail(Err::config, "cusp coordinates must be coprime to N");
    auto canon = [&](int cx, int cy) {
        int r = mod(cx, d);
        if (r == 0) r = d;  // only for d = 1
        return Cusp{r, cy, d};
    };
    Cusp a = canon(x, y);
    Cusp b = canon(-x, mod(-y, n));
    return a < b ? a : b;
}

std::vector<std::pair<int, long>> cusp_inventory(int n) {
    check_level(n);
    std::vector<std::pair<int, long>> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.emplace_back(d, phi(d) * phi(n / d) / 2);
    return out;
}

std::vector<Cusp> x1_cusps_at_level(int n, int d) {
    check_level(n);
    if (n % d != 0) fail(Err::invalid_divisor, "level marker must divide N");
    std::set<Cusp> out;
    for (int y = 0; y < n; ++y) {
        if ((y == 0 ? n : std::gcd(y, n)) != d) continue;
        for (int x = 1; x <= d; ++x) {
            if (std::gcd(x, d) != 1) continue;
            out.insert(make_cusp(n, x, y));
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Cusp> x1_cusps(int n) {
    std::vector<Cusp> out;
    for (auto [d, count] : cusp_inventory(n)) {
        auto level = x1_cusps_at_level(n, d);
        if (static_cast<long>(level.size()) != count)
            fail(Err::internal, "cusp count disagrees with the phi(d)phi(N/d)/2 formula");
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<CuspOrbit> delta_orbits(int n, const std::vector<int>& delta, const std::vector<Cusp>& cusps) {
    check_level(n);
    check_delta(n, delta);
    std::set<Cusp> remaining(cusps.begin(), cusps.end());
    std::vector<CuspOrbit> orbits;
    while (!remaining.empty()) {
        Cusp seed = *remaining.begin();
        std::set<Cusp> orbit;
        for (int a : delta) {
            int ar = mod(a, n);
            Cusp img = make_cusp(n, ar * seed.x, inv_mod(ar, n) * seed.y);
            orbit.insert(img);
        }
        CuspOrbit o;
        for (const Cusp& c : orbit) {
            if (!remaining.erase(c))
                fail(Err::internal, "delta action leaves the cusp subset");
            o.members.push_back(c);
        }
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const CuspOrbit& a, const CuspOrbit& b) { return a.members.front() < b.members.front(); });
    return orbits;
}

std::vector<std::vector<int>> conjugacy_classes(const std::vector<CuspOrbit>& orbits) {
    // union-find over shared y-values
    std::vector<int> parent(orbits.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    std::map<int, int> owner_by_y;
    for (size_t i = 0; i < orbits.size(); ++i) {
        for (const Cusp& c : orbits[i].members) {
            auto [it, inserted] = owner_by_y.try_emplace(c.y, static_cast<int>(i));
            if (!inserted) parent[static_cast<size_t>(find(static_cast<int>(i)))] = find(it->second);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < orbits.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    return out;
}

Cusp al_on_cusp(int n, int n_prime) {
    check_level(n);
    if (n_prime < 1 || n % n_prime != 0 || std::gcd(n_prime, n / n_prime) != 1)
        fail(Err::invalid_divisor, "N' must divide N with gcd(N', N/N') = 1");
    return make_cusp(n, 1, n_prime);
}

bool fiber_is_quadratic(int n, const std::vector<int>& delta, int n_prime) {
    const Cusp target = al_on_cusp(n, n_prime);
    // full diamond group: all units mod N
    std::vector<int> full;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) full.push_back(a);
    auto level = x1_cusps_at_level(n, target.d);
    auto x0_orbits = delta_orbits(n, full, level);
    const CuspOrbit* fiber = nullptr;
    for (const auto& o : x0_orbits)
        if (std::find(o.members.begin(), o.members.end(), target) != o.members.end()) fiber = &o;
    if (!fiber) fail(Err::internal, "cusp (1,N') not found among its level's cusps");
    auto orbits = delta_orbits(n, delta, fiber->members);
    auto classes = conjugacy_classes(orbits);
    return std::all_of(classes.begin(), classes.end(),
                       [](const std::vector<int>& c) { return c.size() == 2; });
}

}  // namespace modtor
