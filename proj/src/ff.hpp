// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace modtor {

// plain-value semantics (no expression templates) so the generic curve code
// can treat BigInt/Rat like any other field scalar
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/// An element of F_{p^n}, stored as n residues mod p (low degree first).
///
/// Elements are immutable values. Printing follows the bracket convention
/// [m,n,l] = m*a^2 + n*a + l for extension elements; elements of the prime
/// subfield print as a bare integer. Two elements interoperate only when
/// their field specs agree (same p, n and modulus) — anything else is a
/// hard SpecMismatch error.
class Fe {
  public:
    static constexpr int kMaxDegree = 8;

    Fe() : spec_(nullptr) {}

    const FieldSpec& spec() const;
    bool valid() const { return spec_ != nullptr; }

    bool is_zero() const;
    bool in_prime_subfield() const;
    int coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    /// Position of this element in the field's canonical enumeration:
    /// the bracket digits read as a base-p number.
    uint32_t index() const;

    Fe operator-() const;
    Fe inverse() const;  // DivisionByZero on 0
    Fe pow(long e) const;
    Fe frobenius() const;  // x -> x^p
    int norm_to_prime() const;

    bool is_square() const;

    std::string str() const;

    friend Fe operator+(const Fe& a, const Fe& b);
    friend Fe operator-(const Fe& a, const Fe& b);
    friend Fe operator*(const Fe& a, const Fe& b);
    friend Fe operator/(const Fe& a, const Fe& b);
    friend bool operator==(const Fe& a, const Fe& b);
    friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  private:
    friend class FieldSpec;
    const FieldSpec* spec_;
    std::array<uint8_t, kMaxDegree> c_{};
};

/// F_{p^n} given by a monic irreducible modulus over F_p.
///
/// The spec owns the precomputed square-root and inverse tables, so
/// construction enumerates the whole field once; the enumeration budget
/// (MODTOR_ENUM_BUDGET, default 4096) caps p^n. Irreducibility is checked
/// exhaustively at construction. Instances are immutable and safe to share
/// across threads.
class FieldSpec {
  public:
    /// modulus is given low degree first and must be monic of degree n >= 1.
    static FieldRef make(int p, const std::vector<int>& modulus);

    /// F_{p^n} with the library's default modulus for (p, n). The shipped
    /// defaults are the Conway polynomials x^3+2x+1 for F_27 and x^3+3x+3
    /// for F_125; other sizes fall back to the lexicographically smallest
    /// monic irreducible. Results are cached.
    static FieldRef gf(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Fe zero() const;
    Fe one() const;
    Fe from_int(long v) const;
    Fe from_bigint(const BigInt& v) const;

    /// Build an element from bracket-order coefficients (highest degree
    /// first), e.g. {0,1,0} -> the generator a in F_27. Shorter lists are
    /// the low-degree part. InvalidElement if more than n coefficients.
    Fe make_element(std::span<const int> bracket_coeffs) const;

    /// Element at a canonical enumeration index in [0, q).
    Fe element(uint32_t index) const;

    struct Roots {
        int count = 0;          // 0, 1 (only x=0 or char 2) or 2
        std::array<Fe, 2> r{};  // count entries, r[1] = -r[0] when count == 2
    };
    /// All square roots of x. Empty for non-squares, {0} for zero.
    Roots sqrt(const Fe& x) const;

    bool same_field(const FieldSpec& other) const;

    /// "F_27 = F_3[a]/(a^3 + 2*a + 1)" (prime fields: "F_5")
    std::string describe() const;

    /// Process-wide cap on eagerly enumerated field sizes.
    static long enumeration_budget();

    Fe mul(const Fe& a, const Fe& b) const;
    void check_spec(const Fe& x) const;  // SpecMismatch unless x is from this field

  private:
    FieldSpec() = default;
    friend class Fe;

    int p_ = 0;
    int n_ = 0;
    long q_ = 0;
    std::vector<int> modulus_;
    // x^(n+k) reduced mod the modulus, k in [0, n-2]; rows of length n
    std::vector<std::array<uint8_t, Fe::kMaxDegree>> red_rows_;
    std::vector<int32_t> sqrt_of_;  // index of one square root, -1 if none
    std::vector<uint32_t> inv_of_;  // index of the inverse (0 unused)
};

/// Parse the textual element syntax: "[m,n,l]" or a bare integer.
/// Round-trips exactly with Fe::str().
Fe parse_element(const FieldSpec& k, std::string_view text);

/// All elements in canonical order. EnumerationTooLarge beyond the budget
/// (enforced when the spec is built).
std::vector<Fe> enumerate_field(const FieldSpec& k);

}  // namespace modtor
