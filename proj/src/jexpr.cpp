// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "jexpr.hpp"

#include <cctype>

namespace modtor {

namespace {

JExprPtr node(JExpr::Kind k, JExprPtr a = nullptr, JExprPtr b = nullptr) {
    auto e = std::make_shared<JExpr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    JExprPtr run() {
        JExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(Err::config, "trailing characters in formula");
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    JExprPtr expr() {
        JExprPtr e = term();
        while (true) {
            if (eat('+')) e = node(JExpr::Kind::add, e, term());
            else if (eat('-')) e = node(JExpr::Kind::sub, e, term());
            else return e;
        }
    }

    JExprPtr term() {
        JExprPtr e = factor();
        while (true) {
            if (eat('*')) e = node(JExpr::Kind::mul, e, factor());
            else if (eat('/')) e = node(JExpr::Kind::div, e, factor());
            else return e;
        }
    }

    JExprPtr factor() {
        if (eat('-')) return node(JExpr::Kind::neg, factor());
        JExprPtr base = primary();
        if (eat('^')) {
            skip_ws();
            long exp = 0;
            bool any = false;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                exp = exp * 10 + (text_[pos_] - '0');
                ++pos_;
                any = true;
            }
            if (!any) fail(Err::config, "exponent must be a nonnegative integer");
            auto e = node(JExpr::Kind::pow, base);
            // node() returns shared_ptr<const JExpr>; fill exponent before publishing
            const_cast<JExpr*>(e.get())->exponent = exp;
            return e;
        }
        return base;
    }

    JExprPtr primary() {
        skip_ws();
        if (eat('(')) {
            JExprPtr e = expr();
            if (!eat(')')) fail(Err::config, "missing ')' in formula");
            return e;
        }
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return node(JExpr::Kind::var);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                ++pos_;
            }
            auto e = node(JExpr::Kind::num);
            const_cast<JExpr*>(e.get())->value = BigInt(digits);
            return e;
        }
        fail(Err::config, "unexpected character in formula: '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

int precedence(JExpr::Kind k) {
    switch (k) {
        case JExpr::Kind::add:
        case JExpr::Kind::sub: return 1;
        case JExpr::Kind::mul:
        case JExpr::Kind::div: return 2;
        case JExpr::Kind::neg: return 3;
        case JExpr::Kind::pow: return 4;
        case JExpr::Kind::num:
        case JExpr::Kind::var: return 5;
    }
    return 5;
}

void print(const JExpr& e, std::string& out, int parent_prec) {
    const int prec = precedence(e.kind);
    const bool parens = prec < parent_prec;
    if (parens) out += "(";
    switch (e.kind) {
        case JExpr::Kind::num: out += e.value.str(); break;
        case JExpr::Kind::var: out += "x"; break;
        case JExpr::Kind::add:
            print(*e.a, out, prec);
            out += " + ";
            print(*e.b, out, prec + 1);
            break;
        case JExpr::Kind::sub:
            print(*e.a, out, prec);
            out += " - ";
            print(*e.b, out, prec + 1);
            break;
        case JExpr::Kind::mul:
            print(*e.a, out, prec);
            out += "*";
            print(*e.b, out, prec + 1);
            break;
        case JExpr::Kind::div:
            print(*e.a, out, prec);
            out += "/";
            print(*e.b, out, prec + 1);
            break;
        case JExpr::Kind::neg:
            out += "-";
            print(*e.a, out, prec);
            break;
        case JExpr::Kind::pow:
            print(*e.a, out, prec + 1);
            out += "^" + std::to_string(e.exponent);
            break;
    }
    if (parens) out += ")";
}

bool ec_is_zero_val(const Fe& v) { return v.is_zero(); }
bool ec_is_zero_val(const Rat& v) { return v == 0; }

template <class K, class FromInt>
K eval(const JExpr& e, const K& x, const FromInt& from_int) {
    switch (e.kind) {
        case JExpr::Kind::num: return from_int(e.value);
        case JExpr::Kind::var: return x;
        case JExpr::Kind::add: return eval(*e.a, x, from_int) + eval(*e.b, x, from_int);
        case JExpr::Kind::sub: return eval(*e.a, x, from_int) - eval(*e.b, x, from_int);
        case JExpr::Kind::mul: return eval(*e.a, x, from_int) * eval(*e.b, x, from_int);
        case JExpr::Kind::div: {
            K num = eval(*e.a, x, from_int);
            K den = eval(*e.b, x, from_int);
            if (ec_is_zero_val(den)) fail(Err::cuspidal_or_bad_point, "formula denominator vanishes");
            return num / den;
        }
        case JExpr::Kind::neg: {
            K v = eval(*e.a, x, from_int);
            return from_int(BigInt(0)) - v;
        }
        case JExpr::Kind::pow: {
            K v = eval(*e.a, x, from_int);
            K r = from_int(BigInt(1));
            for (long i = 0; i < e.exponent; ++i) r = r * v;
            return r;
        }
    }
    fail(Err::internal, "corrupt expression tree");
}

}  // namespace

JExprPtr jexpr_parse(std::string_view text) { return Parser(text).run(); }

std::string jexpr_str(const JExpr& e) {
    std::string out;
    print(e, out, 0);
    return out;
}

Fe jexpr_eval(const JExpr& e, const Fe& x) {
    const FieldSpec* k = &x.spec();
    return eval<Fe>(e, x, [k](const BigInt& v) { return k->from_bigint(v); });
}

Rat jexpr_eval(const JExpr& e, const Rat& x) {
    return eval<Rat>(e, x, [](const BigInt& v) { return Rat(v); });
}

}  // namespace modtor
