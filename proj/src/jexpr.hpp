// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ff.hpp"
#include "rat.hpp"

namespace modtor {

/// Expression tree for the curated j-formulas: integer constants, the
/// variable x, +, -, *, /, unary minus and integer powers. Config files
/// carry these as infix strings; parse and print round-trip.
struct JExpr {
    enum class Kind { num, var, add, sub, mul, div, neg, pow };

    Kind kind;
    BigInt value;       // num
    long exponent = 0;  // pow
    std::shared_ptr<const JExpr> a, b;
};

using JExprPtr = std::shared_ptr<const JExpr>;

JExprPtr jexpr_parse(std::string_view text);  // ConfigError on malformed input
std::string jexpr_str(const JExpr& e);

/// Evaluate over a finite field (constants reduced mod p) or over Q.
/// A vanishing denominator raises CuspidalOrBadPoint: at these formulas
/// that means the point sits over a cusp or a degenerate fibre.
Fe jexpr_eval(const JExpr& e, const Fe& x);
Rat jexpr_eval(const JExpr& e, const Rat& x);

}  // namespace modtor
