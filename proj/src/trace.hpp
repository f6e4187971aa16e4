// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include "models.hpp"

namespace modtor {

/// Coordinatewise Frobenius (x, y) -> (x^p, y^p). The curve must have
/// prime-subfield coefficients so the image stays on it.
EcPoint<Fe> frob_point(const WCurve<Fe>& c, const EcPoint<Fe>& p);

/// P + frob(P) + frob^2(P) under the group law. Needs a cubic extension;
/// the result is always F_p-rational (checked, InternalError otherwise).
/// On prime-subfield points this is multiplication by 3.
EcPoint<Fe> trace_map(const WCurve<Fe>& c, const EcPoint<Fe>& p);

enum class TraceClass { allowed, forbidden };

/// The reductions of the model's quadratic-cusp image points that the trace
/// of a candidate must avoid. With a branch name given only that branch
/// hypothesis' image is forbidden; with branch = "" all images are.
std::vector<EcPoint<Fe>> forbidden_trace_targets(const Model& m, const FieldSpec& k,
                                                 std::string_view branch);

/// forbidden iff t equals a forbidden target. t must be F_p-rational.
TraceClass classify_trace(const Model& m, const WCurve<Fe>& reduced, const EcPoint<Fe>& t,
                          std::string_view branch);

bool is_prime_rational(const EcPoint<Fe>& p);

}  // namespace modtor
