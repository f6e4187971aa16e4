// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace modtor {

using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline bool is_integral(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_str(const Rat& r) {
    if (is_integral(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parse "-3", "16" or "3/4". Config files carry exact rationals in this form.
inline Rat parse_rational(std::string_view text) {
    auto bad = [&] { fail(Err::config, "bad rational literal: " + std::string(text)); };
    size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(text)));
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0);  // unreachable
}

}  // namespace modtor
