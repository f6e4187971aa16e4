// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "models.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace modtor {

using nlohmann::json;

bool Model::has_branches() const {
    std::set<int> seen;
    for (const auto& inv : involutions)
        if (!seen.insert(inv.divisor).second) return true;
    return false;
}

std::vector<std::string> Model::branch_names() const {
    std::vector<std::string> out;
    std::set<int> divisors;
    for (const auto& inv : involutions) divisors.insert(inv.divisor);
    for (int d : divisors) {
        std::vector<std::string> names;
        for (const auto& inv : involutions)
            if (inv.divisor == d) names.push_back(inv.name);
        if (names.size() > 1) return names;
    }
    return out;
}

const Involution& Model::involution(std::string_view name) const {
    for (const auto& inv : involutions)
        if (inv.name == name) return inv;
    fail(Err::config, "unknown involution '" + std::string(name) + "' on model " + id);
}

const Model& ModelSet::get(std::string_view id) const {
    for (const auto& m : models)
        if (m.id == id) return m;
    fail(Err::config, "unknown model '" + std::string(id) + "'");
}

bool ModelSet::has(std::string_view id) const {
    return std::any_of(models.begin(), models.end(), [&](const Model& m) { return m.id == id; });
}

FieldRef ModelSet::field(int p, int n) const {
    for (const auto& [fp, fn, mod] : fields)
        if (fp == p && fn == n) return FieldSpec::make(p, mod);
    return FieldSpec::gf(p, n);
}

namespace {

EcPoint<Rat> parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2) fail(Err::config, "point must be a [x, y] pair");
    return EcPoint<Rat>::affine(parse_rational(j[0].get<std::string>()),
                                parse_rational(j[1].get<std::string>()));
}

json point_json(const EcPoint<Rat>& p) { return json::array({rat_str(p.x), rat_str(p.y)}); }

void validate_delta(int level, const std::vector<int>& delta) {
    std::set<int> s;
    for (int a : delta) {
        int r = ((a % level) + level) % level;
        if (std::gcd(r, level) != 1) fail(Err::invalid_delta, "delta contains a non-unit residue");
        s.insert(r);
    }
    if (!s.count(1) || !s.count(level - 1)) fail(Err::invalid_delta, "delta must contain +1 and -1");
    for (int a : s)
        for (int b : s)
            if (!s.count((a * b) % level)) fail(Err::invalid_delta, "delta is not closed under multiplication");
}

void validate_involutions(const Model& m) {
    const int n = m.level;
    for (const auto& inv : m.involutions) {
        if (inv.divisor < 1 || n % inv.divisor != 0 || std::gcd(inv.divisor, n / inv.divisor) != 1)
            fail(Err::invalid_divisor, "involution divisor " + std::to_string(inv.divisor) +
                                           " is not an Atkin-Lehner divisor of " + std::to_string(n));
        if (inv.sign != 1 && inv.sign != -1) fail(Err::config, "involution sign must be +1 or -1");
        if (!is_on_curve(m.curve, inv.translation))
            fail(Err::config, "involution translation point is not on the model curve");
        if (inv.sign == 1) {
            // P + T is an involution only when T is 2-torsion
            auto doubled = ec_scalar_mul(m.curve, 2, inv.translation);
            if (!doubled.infinity) fail(Err::config, "sign +1 involution needs a 2-torsion translation");
        }
    }
    // closure under the multiplication rule across distinct divisors
    for (const auto& i1 : m.involutions) {
        for (const auto& i2 : m.involutions) {
            if (i1.divisor == i2.divisor) continue;
            const int d3 = std::lcm(i1.divisor, i2.divisor) / std::gcd(i1.divisor, i2.divisor);
            const int sign3 = i1.sign * i2.sign;
            // i2 after i1: P -> sign3*P + (i2.sign * T1 + T2)
            EcPoint<Rat> t1 = i2.sign < 0 ? ec_neg(m.curve, i1.translation) : i1.translation;
            EcPoint<Rat> t3 = ec_add(m.curve, t1, i2.translation);
            if (d3 == 1) {
                if (sign3 != 1 || !t3.infinity)
                    fail(Err::config, "involution pair does not compose to the identity");
                continue;
            }
            bool found = false;
            for (const auto& i3 : m.involutions)
                if (i3.divisor == d3 && i3.sign == sign3 && i3.translation == t3) found = true;
            if (!found)
                fail(Err::config, "involution set is not closed under the multiplication rule (missing divisor " +
                                      std::to_string(d3) + ")");
        }
    }
}

Model parse_model(const json& j) {
    Model m;
    m.id = j.at("id").get<std::string>();
    m.level = j.at("level").get<int>();
    if (m.level < 5) fail(Err::unsupported_level, "level must be at least 5");

    const auto& c = j.at("curve");
    if (!c.is_array() || c.size() != 5) fail(Err::config, "curve must be [a1, a2, a3, a4, a6]");
    m.curve = WCurve<Rat>{parse_rational(c[0].get<std::string>()), parse_rational(c[1].get<std::string>()),
                          parse_rational(c[2].get<std::string>()), parse_rational(c[3].get<std::string>()),
                          parse_rational(c[4].get<std::string>())};
    if (curve_disc(m.curve) == 0) fail(Err::config, "model curve is singular");

    m.reduction_prime = j.value("reduction_prime", 0);
    m.twist_alpha = j.value("twist_alpha", 2);

    m.delta = j.at("delta").get<std::vector<int>>();
    std::sort(m.delta.begin(), m.delta.end());
    validate_delta(m.level, m.delta);

    for (const auto& ji : j.at("involutions")) {
        Involution inv;
        inv.name = ji.at("name").get<std::string>();
        inv.divisor = ji.at("divisor").get<int>();
        inv.sign = ji.at("sign").get<int>();
        inv.translation = parse_point(ji.at("translation"));
        m.involutions.push_back(std::move(inv));
    }

    m.j_formula_text = j.at("j_formula").get<std::string>();
    m.j_formula = jexpr_parse(m.j_formula_text);

    for (const auto& jp : j.at("quadratic_cusp_images")) {
        auto p = parse_point(jp);
        if (!is_on_curve(m.curve, p)) fail(Err::config, "quadratic cusp image is not on the model curve");
        m.quadratic_cusp_images.push_back(p);
    }

    validate_involutions(m);
    return m;
}

}  // namespace

ModelSet parse_models(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(Err::config, std::string("model config is not valid JSON: ") + e.what());
    }
    try {
        ModelSet set;
        set.version = j.value("version", 1);
        if (set.version != 1) fail(Err::config, "unsupported model config version");
        if (j.contains("fields")) {
            for (const auto& f : j.at("fields"))
                set.fields.emplace_back(f.at("p").get<int>(), f.at("n").get<int>(),
                                        f.at("modulus").get<std::vector<int>>());
        }
        for (const auto& jm : j.at("models")) set.models.push_back(parse_model(jm));
        if (set.models.empty()) fail(Err::config, "model config lists no models");
        return set;
    } catch (const json::exception& e) {
        fail(Err::config, std::string("model config is malformed: ") + e.what());
    }
}

ModelSet load_models_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::io, "cannot open model config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_models(buf.str());
}

std::string models_to_json(const ModelSet& set) {
    json j;
    j["version"] = set.version;
    j["fields"] = json::array();
    for (const auto& [p, n, mod] : set.fields) j["fields"].push_back({{"p", p}, {"n", n}, {"modulus", mod}});
    j["models"] = json::array();
    for (const auto& m : set.models) {
        json jm;
        jm["id"] = m.id;
        jm["level"] = m.level;
        jm["curve"] = json::array(
            {rat_str(m.curve.a1), rat_str(m.curve.a2), rat_str(m.curve.a3), rat_str(m.curve.a4), rat_str(m.curve.a6)});
        jm["reduction_prime"] = m.reduction_prime;
        jm["twist_alpha"] = m.twist_alpha;
        jm["delta"] = m.delta;
        jm["involutions"] = json::array();
        for (const auto& inv : m.involutions)
            jm["involutions"].push_back({{"name", inv.name},
                                         {"divisor", inv.divisor},
                                         {"sign", inv.sign},
                                         {"translation", point_json(inv.translation)}});
        jm["j_formula"] = m.j_formula_text;
        jm["quadratic_cusp_images"] = json::array();
        for (const auto& p : m.quadratic_cusp_images) jm["quadratic_cusp_images"].push_back(point_json(p));
        j["models"].push_back(jm);
    }
    return j.dump(2);
}

namespace detail_builtin {
extern const char* kBuiltinModelsJson;
}

const ModelSet& builtin_models() {
    static const ModelSet set = parse_models(detail_builtin::kBuiltinModelsJson);
    return set;
}

WCurve<Fe> reduce_model(const Model& m, const FieldRef& k) {
    const int p = k->p();
    if (m.level % p == 0) fail(Err::bad_prime, "reduction prime divides the level");
    auto to_fe = [&](const Rat& r) {
        if (!is_integral(r)) fail(Err::config, "model coefficients must be integral to reduce");
        return k->from_bigint(rat_num(r));
    };
    WCurve<Fe> c{to_fe(m.curve.a1), to_fe(m.curve.a2), to_fe(m.curve.a3), to_fe(m.curve.a4), to_fe(m.curve.a6)};
    if (ec_is_zero(curve_disc(c))) fail(Err::bad_prime, "model has singular reduction at this prime");
    return c;
}

EcPoint<Fe> reduce_point(const FieldSpec& k, const EcPoint<Rat>& p) {
    if (p.infinity) return EcPoint<Fe>::inf();
    if (!is_integral(p.x) || !is_integral(p.y))
        fail(Err::config, "cannot reduce a point with non-integral coordinates");
    return EcPoint<Fe>::affine(k.from_bigint(rat_num(p.x)), k.from_bigint(rat_num(p.y)));
}

Fe j_of_point(const Model& m, const WCurve<Fe>& reduced, const EcPoint<Fe>& p) {
    ensure_on_curve(reduced, p);
    if (p.infinity) fail(Err::cuspidal_or_bad_point, "j-formula is undefined at infinity");
    return jexpr_eval(*m.j_formula, p.x);
}

Rat j_of_point(const Model& m, const EcPoint<Rat>& p) {
    ensure_on_curve(m.curve, p);
    if (p.infinity) fail(Err::cuspidal_or_bad_point, "j-formula is undefined at infinity");
    return jexpr_eval(*m.j_formula, p.x);
}

EcPoint<Rat> apply_involution(const Model& m, std::string_view name, const EcPoint<Rat>& p) {
    const Involution& inv = m.involution(name);
    return apply_involution(m.curve, inv.sign, inv.translation, p);
}

EcPoint<Fe> apply_involution(const Model& m, const WCurve<Fe>& reduced, const Involution& inv,
                             const EcPoint<Fe>& p) {
    (void)m;
    EcPoint<Fe> t = reduce_point(reduced.a4.spec(), inv.translation);
    return apply_involution(reduced, inv.sign, t, p);
}

long point_order_q(const WCurve<Rat>& c, const EcPoint<Rat>& p, long cap) {
    ensure_on_curve(c, p);
    EcPoint<Rat> q = p;
    long k = 1;
    while (!q.infinity) {
        q = detail::add_raw(c, q, p);
        ++k;
        if (k > cap) fail(Err::internal, "point order exceeds the torsion cap");
    }
    return k;
}

RationalTorsion rational_torsion(const WCurve<Rat>& c) {
    for (const Rat* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6})
        if (!is_integral(*a)) fail(Err::config, "Lutz-Nagell needs an integral model");
    if (!(c.a1 == 0) || !(c.a3 == 0)) fail(Err::config, "Lutz-Nagell expects a model with a1 = a3 = 0");

    const BigInt disc = rat_num(curve_disc(c));
    if (disc == 0) fail(Err::config, "singular curve");
    const BigInt abs_disc = disc < 0 ? BigInt(-disc) : disc;

    std::vector<BigInt> ys{0};
    for (BigInt y = 1; y * y <= abs_disc; ++y)
        if (abs_disc % (y * y) == 0) {
            ys.push_back(y);
            ys.push_back(-y);
        }

    const BigInt a2 = rat_num(c.a2), a4 = rat_num(c.a4), a6 = rat_num(c.a6);
    auto abs_big = [](const BigInt& v) { return v < 0 ? BigInt(-v) : v; };

    RationalTorsion out;
    out.points.push_back(EcPoint<Rat>::inf());
    for (const BigInt& y : ys) {
        const BigInt cc = a6 - y * y;
        BigInt bound = 1 + std::max(abs_big(a2), std::max(abs_big(a4), abs_big(cc)));
        if (bound > 10000000) fail(Err::enumeration_too_large, "torsion candidate search bound too large");
        for (BigInt x = -bound; x <= bound; ++x) {
            if (x * x * x + a2 * x * x + a4 * x + cc != 0) continue;
            EcPoint<Rat> p = EcPoint<Rat>::affine(Rat(x), Rat(y));
            // multiples of a torsion point stay integral all the way to infinity
            EcPoint<Rat> q = p;
            bool torsion = false;
            for (int k = 2; k <= 16; ++k) {
                q = detail::add_raw(c, q, p);
                if (q.infinity) {
                    torsion = true;
                    break;
                }
                if (!is_integral(q.x) || !is_integral(q.y)) break;
            }
            if (torsion &&
                std::find(out.points.begin(), out.points.end(), p) == out.points.end())
                out.points.push_back(p);
        }
    }

    std::sort(out.points.begin() + 1, out.points.end(), [](const EcPoint<Rat>& a, const EcPoint<Rat>& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });

    long exponent = 1;
    for (const auto& p : out.points) exponent = std::lcm(exponent, point_order_q(c, p));
    out.structure.n1 = exponent;
    out.structure.n2 = static_cast<long>(out.points.size()) / exponent;
    if (out.structure.n1 * out.structure.n2 != static_cast<long>(out.points.size()) ||
        out.structure.n1 % out.structure.n2 != 0)
        fail(Err::internal, "torsion subgroup has inconsistent invariant factors");

    // the table must be closed under the group law
    for (const auto& p : out.points)
        for (const auto& q : out.points) {
            auto s = detail::add_raw(c, p, q);
            if (std::find(out.points.begin(), out.points.end(), s) == out.points.end())
                fail(Err::internal, "torsion table is not closed under addition");
        }
    return out;
}

}  // namespace modtor
