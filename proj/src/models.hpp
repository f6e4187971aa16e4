// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ec.hpp"
#include "jexpr.hpp"

namespace modtor {

/// Atkin-Lehner involution on a genus-one model, as the affine map
/// P -> sign*P + translation. sign = +1 maps require the translation to be
/// 2-torsion so the map stays an involution.
struct Involution {
    std::string name;
    int divisor = 1;  // N' | N with gcd(N', N/N') = 1
    int sign = -1;
    EcPoint<Rat> translation;
};

/// Curated record for one modular curve: equation over Q, j-formula,
/// involutions, the subgroup Delta and the distinguished rational points
/// whose classes sit over quadratic cusps. Immutable after load.
struct Model {
    std::string id;
    int level = 0;
    WCurve<Rat> curve;
    int reduction_prime = 0;  // the prime the headline argument reduces at
    int twist_alpha = 2;
    std::vector<int> delta;  // full residue set mod level, sorted
    std::vector<Involution> involutions;
    std::string j_formula_text;
    JExprPtr j_formula;
    std::vector<EcPoint<Rat>> quadratic_cusp_images;

    /// Involutions sharing a divisor are alternative hypotheses for the
    /// same Atkin-Lehner map; the pipeline then evaluates each branch.
    bool has_branches() const;
    std::vector<std::string> branch_names() const;
    const Involution& involution(std::string_view name) const;
};

/// A parsed model config: field presentations plus model records.
struct ModelSet {
    int version = 1;
    std::vector<std::tuple<int, int, std::vector<int>>> fields;  // (p, n, modulus)
    std::vector<Model> models;

    const Model& get(std::string_view id) const;  // ConfigError if unknown
    bool has(std::string_view id) const;

    /// F_{p^n} with the configured modulus when one is listed, the library
    /// default otherwise.
    FieldRef field(int p, int n) const;
};

ModelSet parse_models(const std::string& json_text);
ModelSet load_models_file(const std::string& path);
std::string models_to_json(const ModelSet& set);

/// The two shipped models, parsed from the embedded copy of
/// data/models.json.
const ModelSet& builtin_models();

/// Coefficientwise reduction of the model equation into k. BadPrime when
/// char(k) divides the level or the reduction is singular.
WCurve<Fe> reduce_model(const Model& m, const FieldRef& k);

/// Componentwise reduction of a rational point with integral coordinates.
EcPoint<Fe> reduce_point(const FieldSpec& k, const EcPoint<Rat>& p);

/// j-invariant of the elliptic curve classified by a noncuspidal point,
/// evaluated through the curated formula. CuspidalOrBadPoint when any
/// denominator vanishes (the "-" rows of the point tables) or at infinity.
Fe j_of_point(const Model& m, const WCurve<Fe>& reduced, const EcPoint<Fe>& p);
Rat j_of_point(const Model& m, const EcPoint<Rat>& p);

/// sign*P + T in whatever base the curve lives over.
template <class K>
EcPoint<K> apply_involution(const WCurve<K>& c, int sign, const EcPoint<K>& t, const EcPoint<K>& p) {
    ensure_on_curve(c, p);
    ensure_on_curve(c, t);
    EcPoint<K> base = sign < 0 ? ec_neg(c, p) : p;
    return detail::add_raw(c, base, t);
}

EcPoint<Rat> apply_involution(const Model& m, std::string_view name, const EcPoint<Rat>& p);
EcPoint<Fe> apply_involution(const Model& m, const WCurve<Fe>& reduced, const Involution& inv,
                             const EcPoint<Fe>& p);

struct RationalTorsion {
    std::vector<EcPoint<Rat>> points;  // infinity first, then by (x, y)
    GroupStructure structure;
};

/// Full rational torsion subgroup of an integral model by the Lutz-Nagell
/// procedure: candidates are integral points with y = 0 or y^2 | disc;
/// a candidate is torsion iff some multiple <= 16 hits infinity while all
/// intermediate multiples stay integral.
RationalTorsion rational_torsion(const WCurve<Rat>& c);

long point_order_q(const WCurve<Rat>& c, const EcPoint<Rat>& p, long cap = 16);

}  // namespace modtor
