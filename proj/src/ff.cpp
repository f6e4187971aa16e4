// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ff.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace modtor {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// polynomial arithmetic over F_p on small int vectors (low degree first)
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
        int c = a[static_cast<size_t>(d)] % p;
        if (c == 0) continue;
        for (int k = 0; k <= dm; ++k) {
            int& t = a[static_cast<size_t>(d - dm + k)];
            t = ((t - c * m[static_cast<size_t>(k)]) % p + p * p) % p;
        }
    }
    a.resize(static_cast<size_t>(dm));
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// trial division by all monic polynomials of degree <= deg(m)/2
bool is_irreducible(const std::vector<int>& m, int p) {
    const int n = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> div(static_cast<size_t>(d) + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                div[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            div[static_cast<size_t>(d)] = 1;
            if (poly_is_zero(poly_mod(m, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

long FieldSpec::enumeration_budget() {
    static const long budget = [] {
        if (const char* env = std::getenv("MODTOR_ENUM_BUDGET")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 4096L;
    }();
    return budget;
}

namespace {

// specs are immutable, so identical presentations share one instance; the
// cache also keeps elements' spec pointers alive for the whole process
std::mutex g_spec_cache_mu;
std::map<std::pair<int, std::vector<int>>, FieldRef>& spec_cache() {
    static std::map<std::pair<int, std::vector<int>>, FieldRef> cache;
    return cache;
}

}  // namespace

FieldRef FieldSpec::make(int p, const std::vector<int>& modulus) {
    if (!is_prime(p)) fail(Err::config, "field characteristic " + std::to_string(p) + " is not prime");
    const int n = static_cast<int>(modulus.size()) - 1;
    if (n < 1 || n > Fe::kMaxDegree) fail(Err::config, "extension degree out of range");
    std::vector<int> m(modulus.size());
    for (size_t i = 0; i < modulus.size(); ++i) m[i] = ((modulus[i] % p) + p) % p;
    if (m.back() != 1) fail(Err::config, "modulus must be monic");

    {
        std::lock_guard<std::mutex> lock(g_spec_cache_mu);
        auto it = spec_cache().find({p, m});
        if (it != spec_cache().end()) return it->second;
    }

    long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > enumeration_budget())
            fail(Err::enumeration_too_large,
                 "field size exceeds enumeration budget " + std::to_string(enumeration_budget()));
    }
    if (n > 1 && !is_irreducible(m, p))
        fail(Err::config, "modulus is reducible over F_" + std::to_string(p));

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->n_ = n;
    spec->q_ = q;
    spec->modulus_ = m;

    // reduction rows: x^(n+k) mod m for k in [0, n-2]
    for (int k = 0; k + 2 <= n; ++k) {
        std::vector<int> x(static_cast<size_t>(n + k) + 1, 0);
        x.back() = 1;
        auto r = poly_mod(x, m, p);
        std::array<uint8_t, Fe::kMaxDegree> row{};
        for (int i = 0; i < n; ++i) row[static_cast<size_t>(i)] = static_cast<uint8_t>(r[static_cast<size_t>(i)]);
        spec->red_rows_.push_back(row);
    }

    // square root and inverse tables over the whole field
    spec->sqrt_of_.assign(static_cast<size_t>(q), -1);
    spec->inv_of_.assign(static_cast<size_t>(q), 0);
    for (long i = 0; i < q; ++i) {
        Fe x = spec->element(static_cast<uint32_t>(i));
        Fe sq = spec->mul(x, x);
        if (spec->sqrt_of_[sq.index()] < 0) spec->sqrt_of_[sq.index()] = static_cast<int32_t>(i);
    }
    for (long i = 1; i < q; ++i) {
        Fe x = spec->element(static_cast<uint32_t>(i));
        Fe y = x;
        // x^(q-2) by square-and-multiply
        Fe r = spec->one();
        long e = q - 2;
        while (e > 0) {
            if (e & 1) r = spec->mul(r, y);
            y = spec->mul(y, y);
            e >>= 1;
        }
        spec->inv_of_[static_cast<size_t>(i)] = r.index();
    }

    std::lock_guard<std::mutex> lock(g_spec_cache_mu);
    auto [it, inserted] = spec_cache().try_emplace({p, m}, spec);
    return it->second;  // a racing builder may have won; both are identical
}

FieldRef FieldSpec::gf(int p, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, FieldRef> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;

    std::vector<int> m;
    if (p == 3 && n == 3) {
        m = {1, 2, 0, 1};  // x^3 + 2x + 1
    } else if (p == 5 && n == 3) {
        m = {3, 3, 0, 1};  // x^3 + 3x + 3
    } else if (n == 1) {
        m = {0, 1};
    } else {
        // smallest monic irreducible of degree n, by constant-first code
        long count = 1;
        for (int i = 0; i < n; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<int> cand(static_cast<size_t>(n) + 1, 0);
            long c = code;
            for (int i = 0; i < n; ++i) {
                cand[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            cand[static_cast<size_t>(n)] = 1;
            if (is_irreducible(cand, p)) {
                m = cand;
                break;
            }
        }
        if (m.empty()) fail(Err::internal, "no irreducible modulus found");
    }
    FieldRef spec = make(p, m);
    cache[{p, n}] = spec;
    return spec;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
}

void FieldSpec::check_spec(const Fe& x) const {
    if (!x.valid() || !same_field(*x.spec_)) fail(Err::spec_mismatch, "elements of different fields");
}

Fe FieldSpec::zero() const { return element(0); }

Fe FieldSpec::one() const { return from_int(1); }

Fe FieldSpec::from_int(long v) const {
    Fe x;
    x.spec_ = this;
    long r = ((v % p_) + p_) % p_;
    x.c_[0] = static_cast<uint8_t>(r);
    return x;
}

Fe FieldSpec::from_bigint(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return from_int(static_cast<long>(r));
}

Fe FieldSpec::make_element(std::span<const int> bracket_coeffs) const {
    if (static_cast<int>(bracket_coeffs.size()) > n_)
        fail(Err::invalid_element, "coefficient list longer than extension degree");
    Fe x;
    x.spec_ = this;
    // bracket order is highest degree first; shorter lists are low-degree
    const int len = static_cast<int>(bracket_coeffs.size());
    for (int i = 0; i < len; ++i) {
        int c = ((bracket_coeffs[static_cast<size_t>(i)] % p_) + p_) % p_;
        x.c_[static_cast<size_t>(len - 1 - i)] = static_cast<uint8_t>(c);
    }
    return x;
}

Fe FieldSpec::element(uint32_t index) const {
    if (index >= static_cast<uint32_t>(q_)) fail(Err::invalid_element, "element index out of range");
    Fe x;
    x.spec_ = this;
    uint32_t c = index;
    for (int i = 0; i < n_; ++i) {
        x.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(c % static_cast<uint32_t>(p_));
        c /= static_cast<uint32_t>(p_);
    }
    return x;
}

Fe FieldSpec::mul(const Fe& a, const Fe& b) const {
    int t[2 * Fe::kMaxDegree - 1] = {0};
    for (int i = 0; i < n_; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < n_; ++j)
            t[i + j] += static_cast<int>(a.c_[static_cast<size_t>(i)]) * b.c_[static_cast<size_t>(j)];
    }
    Fe r;
    r.spec_ = this;
    for (int i = 0; i < n_; ++i) r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(t[i] % p_);
    for (int k = 0; k + 2 <= n_; ++k) {
        int c = t[n_ + k] % p_;
        if (c == 0) continue;
        const auto& row = red_rows_[static_cast<size_t>(k)];
        for (int i = 0; i < n_; ++i) {
            int v = r.c_[static_cast<size_t>(i)] + c * row[static_cast<size_t>(i)];
            r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(v % p_);
        }
    }
    return r;
}

FieldSpec::Roots FieldSpec::sqrt(const Fe& x) const {
    check_spec(x);
    Roots out;
    int32_t ri = sqrt_of_[x.index()];
    if (ri < 0) return out;
    Fe r = element(static_cast<uint32_t>(ri));
    Fe nr = -r;
    out.r[0] = r;
    if (nr == r) {
        out.count = 1;
    } else {
        out.count = 2;
        out.r[1] = nr;
    }
    return out;
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (n_ > 1) {
        os << " = F_" << p_ << "[a]/(";
        bool first = true;
        for (int i = n_; i >= 0; --i) {
            int c = modulus_[static_cast<size_t>(i)];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || c != 1) os << c;
            if (i > 0 && c != 1) os << "*";
            if (i == 1) os << "a";
            if (i > 1) os << "a^" << i;
        }
        os << ")";
    }
    return os.str();
}

const FieldSpec& Fe::spec() const {
    if (!spec_) fail(Err::internal, "uninitialized field element");
    return *spec_;
}

bool Fe::is_zero() const {
    for (int i = 0; i < spec().n(); ++i)
        if (c_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

bool Fe::in_prime_subfield() const {
    for (int i = 1; i < spec().n(); ++i)
        if (c_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

uint32_t Fe::index() const {
    uint32_t v = 0;
    for (int i = spec().n() - 1; i >= 0; --i) v = v * static_cast<uint32_t>(spec().p()) + c_[static_cast<size_t>(i)];
    return v;
}

Fe operator+(const Fe& a, const Fe& b) {
    a.spec().check_spec(b);
    Fe r;
    r.spec_ = a.spec_;
    for (int i = 0; i < a.spec().n(); ++i)
        r.c_[static_cast<size_t>(i)] =
            static_cast<uint8_t>((a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)]) % a.spec().p());
    return r;
}

Fe operator-(const Fe& a, const Fe& b) {
    a.spec().check_spec(b);
    Fe r;
    r.spec_ = a.spec_;
    const int p = a.spec().p();
    for (int i = 0; i < a.spec().n(); ++i)
        r.c_[static_cast<size_t>(i)] =
            static_cast<uint8_t>((a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)] + p) % p);
    return r;
}

Fe operator*(const Fe& a, const Fe& b) {
    a.spec().check_spec(b);
    return a.spec().mul(a, b);
}

Fe operator/(const Fe& a, const Fe& b) { return a * b.inverse(); }

bool operator==(const Fe& a, const Fe& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    if (!a.spec().same_field(b.spec())) return false;
    for (int i = 0; i < a.spec().n(); ++i)
        if (a.c_[static_cast<size_t>(i)] != b.c_[static_cast<size_t>(i)]) return false;
    return true;
}

Fe Fe::operator-() const {
    Fe r;
    r.spec_ = spec_;
    const int p = spec().p();
    for (int i = 0; i < spec().n(); ++i)
        r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>((p - c_[static_cast<size_t>(i)]) % p);
    return r;
}

Fe Fe::inverse() const {
    if (is_zero()) fail(Err::division_by_zero, "inverse of zero");
    return spec().element(spec().inv_of_[index()]);
}

Fe Fe::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Fe r = spec().one();
    Fe b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Fe Fe::frobenius() const { return pow(spec().p()); }

int Fe::norm_to_prime() const {
    Fe r = spec().one();
    Fe x = *this;
    for (int i = 0; i < spec().n(); ++i) {
        r = r * x;
        x = x.frobenius();
    }
    if (!r.in_prime_subfield()) fail(Err::internal, "norm left the prime subfield");
    return r.coeff(0);
}

bool Fe::is_square() const { return spec().sqrt_of_[index()] >= 0; }

std::string Fe::str() const {
    if (spec().n() == 1 || in_prime_subfield()) return std::to_string(c_[0]);
    std::string s = "[";
    for (int i = spec().n() - 1; i >= 0; --i) {
        s += std::to_string(c_[static_cast<size_t>(i)]);
        if (i > 0) s += ",";
    }
    s += "]";
    return s;
}

Fe parse_element(const FieldSpec& k, std::string_view text) {
    auto skip_ws = [&](size_t& i) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    size_t i = 0;
    skip_ws(i);
    auto parse_int = [&](size_t& j) -> int {
        bool neg = false;
        if (j < text.size() && (text[j] == '-' || text[j] == '+')) {
            neg = text[j] == '-';
            ++j;
        }
        if (j >= text.size() || text[j] < '0' || text[j] > '9')
            fail(Err::invalid_element, "bad element literal: " + std::string(text));
        long v = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
            v = v * 10 + (text[j] - '0');
            ++j;
        }
        return static_cast<int>(neg ? -v : v);
    };

    if (i < text.size() && text[i] == '[') {
        ++i;
        std::vector<int> coeffs;
        while (true) {
            skip_ws(i);
            coeffs.push_back(parse_int(i));
            skip_ws(i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != ']') fail(Err::invalid_element, "unterminated bracket element");
        ++i;
        skip_ws(i);
        if (i != text.size()) fail(Err::invalid_element, "trailing characters in element literal");
        return k.make_element(coeffs);
    }
    int v = parse_int(i);
    skip_ws(i);
    if (i != text.size()) fail(Err::invalid_element, "trailing characters in element literal");
    return k.from_int(v);
}

std::vector<Fe> enumerate_field(const FieldSpec& k) {
    if (k.q() > FieldSpec::enumeration_budget())
        fail(Err::enumeration_too_large, "field too large to enumerate");
    std::vector<Fe> out;
    out.reserve(static_cast<size_t>(k.q()));
    for (long i = 0; i < k.q(); ++i) out.push_back(k.element(static_cast<uint32_t>(i)));
    return out;
}

}  // namespace modtor
