// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "trace.hpp"

#include <algorithm>

namespace modtor {

bool is_prime_rational(const EcPoint<Fe>& p) {
    return p.infinity || (p.x.in_prime_subfield() && p.y.in_prime_subfield());
}

EcPoint<Fe> frob_point(const WCurve<Fe>& c, const EcPoint<Fe>& p) {
    for (const Fe* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6})
        if (!a->in_prime_subfield())
            fail(Err::config, "Frobenius acts on curves with prime-field coefficients");
    ensure_on_curve(c, p);
    if (p.infinity) return p;
    EcPoint<Fe> img = EcPoint<Fe>::affine(p.x.frobenius(), p.y.frobenius());
    if (!is_on_curve(c, img)) fail(Err::internal, "Frobenius image left the curve");
    return img;
}

EcPoint<Fe> trace_map(const WCurve<Fe>& c, const EcPoint<Fe>& p) {
    if (c.a4.spec().n() != 3) fail(Err::config, "trace map is defined over cubic extensions");
    EcPoint<Fe> p1 = frob_point(c, p);
    EcPoint<Fe> p2 = frob_point(c, p1);
    EcPoint<Fe> t = detail::add_raw(c, detail::add_raw(c, p, p1), p2);
    if (!is_prime_rational(t)) fail(Err::internal, "trace image is not F_p-rational");
    return t;
}

std::vector<EcPoint<Fe>> forbidden_trace_targets(const Model& m, const FieldSpec& k,
                                                 std::string_view branch) {
    std::vector<EcPoint<Fe>> out;
    if (branch.empty()) {
        for (const auto& img : m.quadratic_cusp_images) out.push_back(reduce_point(k, img));
        return out;
    }
    const Involution& inv = m.involution(branch);
    // on these genus-one models omega_{N'}(infinity) is exactly the
    // translation point, so the branch's excluded class is its T
    bool curated = std::any_of(m.quadratic_cusp_images.begin(), m.quadratic_cusp_images.end(),
                               [&](const EcPoint<Rat>& q) { return q == inv.translation; });
    if (!curated)
        fail(Err::config, "branch translation point is not among the curated quadratic cusp images");
    out.push_back(reduce_point(k, inv.translation));
    return out;
}

TraceClass classify_trace(const Model& m, const WCurve<Fe>& reduced, const EcPoint<Fe>& t,
                          std::string_view branch) {
    if (!is_prime_rational(t)) fail(Err::internal, "trace target must be F_p-rational");
    ensure_on_curve(reduced, t);
    auto forbidden = forbidden_trace_targets(m, reduced.a4.spec(), branch);
    for (const auto& f : forbidden)
        if (t == f) return TraceClass::forbidden;
    return TraceClass::allowed;
}

}  // namespace modtor
