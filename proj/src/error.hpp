// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>

namespace modtor {

// Every failure in the core carries one of these kinds. The C API and the
// CLI map them onto their exit-code contract (usage/config vs internal).
enum class Err {
    invalid_element,
    division_by_zero,
    spec_mismatch,
    enumeration_too_large,
    not_on_curve,
    bad_prime,
    cuspidal_or_bad_point,
    unsupported_j,
    unsupported_characteristic,
    unsupported_level,
    invalid_delta,
    invalid_divisor,
    graph_closure,
    config,
    io,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    Err kind() const { return kind_; }

    // true for kinds that indicate a broken invariant rather than bad input
    bool is_internal() const { return kind_ == Err::internal || kind_ == Err::graph_closure; }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* err_name(Err kind) {
    switch (kind) {
        case Err::invalid_element: return "InvalidElement";
        case Err::division_by_zero: return "DivisionByZero";
        case Err::spec_mismatch: return "SpecMismatch";
        case Err::enumeration_too_large: return "EnumerationTooLarge";
        case Err::not_on_curve: return "NotOnCurve";
        case Err::bad_prime: return "BadPrime";
        case Err::cuspidal_or_bad_point: return "CuspidalOrBadPoint";
        case Err::unsupported_j: return "UnsupportedJ";
        case Err::unsupported_characteristic: return "UnsupportedCharacteristic";
        case Err::unsupported_level: return "UnsupportedLevel";
        case Err::invalid_delta: return "InvalidDelta";
        case Err::invalid_divisor: return "InvalidDivisor";
        case Err::graph_closure: return "GraphClosureError";
        case Err::config: return "ConfigError";
        case Err::io: return "IoError";
        case Err::internal: return "InternalError";
    }
    return "Error";
}

}  // namespace modtor
