// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cusps.hpp"

namespace modtor {

using njson = nlohmann::ordered_json;

namespace {

constexpr const char* kInf = "∞";

std::string md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) out += " " + c + " |";
    out += "\n";
    return out;
}

std::string md_sep(size_t ncols) {
    std::vector<std::string> cells(ncols, "---");
    return md_row(cells);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos && s.find('[') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string curve_equation(const WCurve<Rat>& c) {
    // y^2 [+ a1*x*y + a3*y] = x^3 + a2*x^2 + a4*x + a6, zero terms dropped
    auto term = [](const Rat& a, const std::string& mono) -> std::string {
        if (a == 0) return "";
        std::string coeff = rat_str(a);
        if (mono.empty()) return " + " + coeff;
        if (coeff == "1") return " + " + mono;
        if (coeff == "-1") return " + -" + mono;
        return " + " + coeff + "*" + mono;
    };
    std::string lhs = "y^2" + term(c.a1, "x*y") + term(c.a3, "y");
    std::string rhs = "x^3" + term(c.a2, "x^2") + term(c.a4, "x") + term(c.a6, "");
    return lhs + " = " + rhs;
}

std::string curve_equation_fe(const WCurve<Fe>& c) {
    auto term = [](const Fe& a, const std::string& mono) -> std::string {
        if (a.is_zero()) return "";
        std::string coeff = a.str();
        if (mono.empty()) return " + " + coeff;
        if (coeff == "1") return " + " + mono;
        return " + " + coeff + "*" + mono;
    };
    std::string lhs = "y^2" + term(c.a1, "x*y") + term(c.a3, "y");
    std::string rhs = "x^3" + term(c.a2, "x^2") + term(c.a4, "x") + term(c.a6, "");
    return lhs + " = " + rhs;
}

std::string delta_str(int level, const std::vector<int>& delta) {
    // display as {±1,±7,...} using the half below level/2
    std::vector<int> half;
    for (int a : delta)
        if (a <= level / 2) half.push_back(a);
    std::string out = "{";
    for (size_t i = 0; i < half.size(); ++i) {
        if (i) out += ",";
        out += "±" + std::to_string(half[i]);
    }
    out += "}";
    return out;
}

}  // namespace

std::string markdown_point_table(const PointTableSec& sec) {
    std::string out = md_row({"X", "Y1", "Y2", "j", "phi(X,Y1)", "phi(X,Y2)"});
    out += md_sep(6);
    size_t i = 0;
    const auto& rows = sec.rows;
    while (i < rows.size()) {
        size_t jdx = i + 1;
        bool pair = jdx < rows.size() && rows[jdx].x == rows[i].x;
        const PointRow& r1 = rows[i];
        const PointRow& r2 = pair ? rows[jdx] : rows[i];
        std::string jcell = r1.j.empty() ? "-" : (r1.j + (r1.marked ? "(*)" : ""));
        out += md_row({r1.x, r1.y, r2.y, jcell, r1.phi, r2.phi});
        i += pair ? 2 : 1;
    }
    return out;
}

std::string markdown_twist_table(const TwistTableSec& sec) {
    std::string out = md_row({"j", "E1", "E2"});
    out += md_sep(3);
    for (const auto& r : sec.rows) out += md_row({r.j + (r.marked ? "(*)" : ""), r.e1, r.e2});
    return out;
}

std::string markdown_involution_table(const InvolutionTableSec& sec) {
    std::vector<std::string> header = {"P", "X(P)", "Y(P)"};
    for (const auto& name : sec.names) {
        header.push_back("X(" + name + "(P))");
        header.push_back("Y(" + name + "(P))");
    }
    std::string out = md_row(header);
    out += md_sep(header.size());
    for (const auto& r : sec.rows) out += md_row(r);
    return out;
}

// ---------------------------------------------------------------- builders

namespace {

PointTableSec build_point_section(const Candidates& c) {
    PointTableSec sec;
    sec.point_count = static_cast<long>(c.rows.size());
    for (const auto& row : c.rows) {
        PointRow r;
        r.x = row.point.infinity ? kInf : row.point.x.str();
        r.y = row.point.infinity ? kInf : row.point.y.str();
        if (row.j) {
            r.j = row.j->str();
            r.marked = row.marked;
            r.phi = point_str(*row.trace);
        }
        r.vertex = row.vertex;
        sec.rows.push_back(std::move(r));
    }
    return sec;
}

TwistTableSec build_twist_section(const Candidates& c) {
    TwistTableSec sec;
    std::vector<uint32_t> seen;
    std::vector<Fe> js;
    for (const auto& row : c.rows)
        if (row.j && std::find(seen.begin(), seen.end(), row.j->index()) == seen.end()) {
            seen.push_back(row.j->index());
            js.push_back(*row.j);
        }
    std::sort(js.begin(), js.end(), [](const Fe& a, const Fe& b) { return a.index() < b.index(); });
    for (const auto& j : js) {
        TwistPair t = twist_pair(c.field, j, c.model->twist_alpha);
        TwistRow r;
        r.j = j.str();
        r.marked = t.s1.n1 % c.target == 0 || t.s2.n1 % c.target == 0;
        r.e1 = t.s1.str();
        r.e2 = t.s2.str();
        sec.rows.push_back(std::move(r));
    }
    return sec;
}

InvolutionTableSec build_involution_section(const Candidates& c) {
    InvolutionTableSec sec;
    for (const auto& inv : c.model->involutions) sec.names.push_back(inv.name);
    for (int v = 1; v <= c.vertex_count(); ++v) {
        const CandidateRow& row = c.row_of_vertex(v);
        std::vector<std::string> cells = {std::to_string(v), row.point.x.str(), row.point.y.str()};
        for (const auto& name : sec.names) {
            const auto& img = row.images.at(name);
            cells.push_back(img.infinity ? kInf : img.x.str());
            cells.push_back(img.infinity ? kInf : img.y.str());
        }
        sec.rows.push_back(std::move(cells));
    }
    return sec;
}

TraceSec build_trace_section(const Candidates& c) {
    TraceSec sec;
    const Model& m = *c.model;
    if (m.has_branches())
        sec.branches = m.branch_names();
    else
        sec.branches = {""};
    for (int v = 1; v <= c.vertex_count(); ++v) {
        const CandidateRow& row = c.row_of_vertex(v);
        TraceRow r;
        r.vertex = v;
        r.x = row.point.x.str();
        r.y = row.point.y.str();
        r.phi = point_str(*row.trace);
        for (const auto& b : sec.branches) {
            TraceClass cls = classify_trace(m, c.curve, *row.trace, b);
            r.classes.push_back(cls == TraceClass::forbidden ? "forbidden" : "allowed");
        }
        sec.rows.push_back(std::move(r));
    }
    return sec;
}

CuspSec build_cusp_section(const Model& m) {
    CuspSec sec;
    sec.level = m.level;
    sec.delta = delta_str(m.level, m.delta);

    std::vector<int> full;
    for (int a = 1; a < m.level; ++a)
        if (std::gcd(a, m.level) == 1) full.push_back(a);

    for (auto [d, count] : cusp_inventory(m.level)) {
        CuspLevel lvl;
        lvl.d = d;
        lvl.count = count;
        auto level_cusps = x1_cusps_at_level(m.level, d);
        for (const auto& x0_orbit : delta_orbits(m.level, full, level_cusps)) {
            CuspFiber fiber;
            fiber.x0_cusp = x0_orbit.members.front().str();
            auto orbits = delta_orbits(m.level, m.delta, x0_orbit.members);
            for (const auto& o : orbits) {
                std::vector<std::string> names;
                for (const auto& cusp : o.members) names.push_back(cusp.str());
                fiber.orbits.push_back(std::move(names));
            }
            fiber.classes = conjugacy_classes(orbits);
            fiber.quadratic = !fiber.classes.empty() &&
                              std::all_of(fiber.classes.begin(), fiber.classes.end(),
                                          [](const std::vector<int>& cl) { return cl.size() == 2; });
            lvl.fibers.push_back(std::move(fiber));
        }
        sec.levels.push_back(std::move(lvl));
    }

    for (const auto& inv : m.involutions) {
        CuspImageRow r;
        r.involution = inv.name;
        r.divisor = inv.divisor;
        r.cusp = al_on_cusp(m.level, inv.divisor).str();
        r.quadratic = fiber_is_quadratic(m.level, m.delta, inv.divisor);
        r.image_point = point_str(inv.translation);
        sec.images.push_back(std::move(r));
    }
    return sec;
}

TorsionSec build_torsion_section(const Model& m, const ModelSet& set) {
    TorsionSec sec;
    RationalTorsion tor = rational_torsion(m.curve);
    sec.structure = tor.structure.str();
    sec.reduction_prime = m.reduction_prime;
    FieldRef k = m.reduction_prime > 0 ? set.field(m.reduction_prime, 1) : nullptr;
    WCurve<Fe> reduced;
    if (k) reduced = reduce_model(m, k);
    for (const auto& p : tor.points) {
        TorsionRow r;
        r.point = point_str(p);
        r.order = point_order_q(m.curve, p);
        if (k) {
            EcPoint<Fe> rp = reduce_point(*k, p);
            r.reduced = point_str(rp);
            r.reduced_order = point_order(reduced, rp);
        }
        sec.rows.push_back(std::move(r));
    }
    return sec;
}

GraphSec build_graph_section(const Candidates& c, std::string_view branch) {
    ObstructionGraph g = build_graph(c, branch);
    EliminationResult v = graph_verdict(g);
    GraphSec sec;
    sec.branch = g.branch;
    sec.vertex_count = g.vertex_count;
    sec.edges = g.edges;
    for (int i = 1; i <= g.vertex_count; ++i)
        if (g.black[static_cast<size_t>(i)]) sec.black.push_back(i);
    sec.components = g.components;
    sec.pass = v.pass;
    sec.surviving = v.surviving;
    return sec;
}

std::vector<std::string> branches_to_run(const Model& m, const std::string& branch) {
    if (!m.has_branches()) {
        if (!branch.empty() && branch != "both")
            fail(Err::config, "model " + m.id + " has no branch hypotheses");
        return {""};
    }
    if (branch == "both" || branch.empty()) return m.branch_names();
    m.involution(branch);  // existence check
    return {branch};
}

}  // namespace

Report run_report(const RunSpec& spec) {
    if (!spec.model || !spec.set) fail(Err::config, "run spec has no model");
    const Model& m = *spec.model;
    Report r;
    r.command = spec.command;
    r.model_id = m.id;
    r.level = m.level;
    r.target = spec.target > 0 ? spec.target : m.level;
    r.branch = spec.branch;

    if (spec.command == "cusps") {
        r.cusps = build_cusp_section(m);
        return r;
    }
    if (spec.command == "torsion") {
        r.curve_desc = curve_equation(m.curve);
        r.torsion = build_torsion_section(m, *spec.set);
        return r;
    }

    r.p = spec.p > 0 ? spec.p : m.reduction_prime;
    if (r.p <= 0) fail(Err::config, "no reduction prime configured or given");
    r.n = spec.n > 0 ? spec.n : 3;

    FieldRef k = spec.set->field(r.p, r.n);
    r.q = k->q();
    r.field_desc = k->describe();

    Candidates cands = build_candidates(m, k, r.target);
    r.curve_desc = curve_equation_fe(cands.curve);

    if (spec.command == "enumerate") {
        r.points = build_point_section(cands);
        return r;
    }
    if (spec.command == "twists") {
        r.twists = build_twist_section(cands);
        return r;
    }
    if (spec.command == "trace") {
        r.trace = build_trace_section(cands);
        return r;
    }
    if (spec.command == "graph") {
        r.involutions = build_involution_section(cands);
        for (const auto& b : branches_to_run(m, spec.branch)) r.graphs.push_back(build_graph_section(cands, b));
        return r;
    }
    if (spec.command == "verify") {
        r.points = build_point_section(cands);
        r.twists = build_twist_section(cands);
        r.involutions = build_involution_section(cands);
        bool all_pass = true;
        for (const auto& b : branches_to_run(m, spec.branch)) {
            GraphSec g = build_graph_section(cands, b);
            all_pass = all_pass && g.pass;
            r.graphs.push_back(std::move(g));
        }
        // lower-degree residue fields: record where the Hasse bound alone rules
        // the target order out
        for (int deg = 1; deg < r.n; ++deg) {
            long qd = 1;
            for (int i = 0; i < deg; ++i) qd *= r.p;
            if (!hasse_admits_order(qd, r.target))
                r.notes.push_back("over F_" + std::to_string(qd) + " a point of order " +
                                  std::to_string(r.target) + " is excluded by the Hasse bound");
            else
                r.notes.push_back("over F_" + std::to_string(qd) + " the Hasse bound does not decide; " +
                                  "residue fields of this degree are outside this argument");
        }
        r.notes.push_back(
            "verdict is conditional on treating the level-" + std::to_string(m.level) +
            " Atkin-Lehner involution as defined over Q on the degree-" + std::to_string(r.n) +
            " covering, which is known to be false in general; the computations themselves are unconditional");
        r.verdict = all_pass;
        return r;
    }
    fail(Err::config, "unknown command '" + spec.command + "'");
}

// ---------------------------------------------------------------- markdown

std::string render_markdown(const Report& r) {
    std::ostringstream os;
    const std::string where =
        r.q > 0 ? " mod " + std::to_string(r.p) + " over F_" + std::to_string(r.q) : "";

    if (r.points) {
        os << "# Points on X0(" << r.level << ")" << where << "\n\n";
        os << "Curve: " << r.curve_desc << "\n";
        os << "Field: " << r.field_desc << "\n";
        os << "Points: " << r.points->point_count << " (including infinity)\n";
        os << "Target order: " << r.target << "\n\n";
        os << markdown_point_table(*r.points);
        os << "\n";
    }
    if (r.twists) {
        os << "# Twist group structures over F_" << r.q << " (target order " << r.target << ")\n\n";
        os << markdown_twist_table(*r.twists);
        os << "\n";
    }
    if (r.involutions) {
        os << "# Atkin-Lehner involutions on X0(" << r.level << ")" << where << "\n\n";
        os << markdown_involution_table(*r.involutions);
        os << "\n";
    }
    if (r.trace) {
        os << "# Frobenius trace targets on X0(" << r.level << ")" << where << "\n\n";
        std::vector<std::string> header = {"P", "X", "Y", "phi(P)"};
        for (const auto& b : r.trace->branches) header.push_back(b.empty() ? "class" : "class(" + b + ")");
        os << md_row(header) << md_sep(header.size());
        for (const auto& row : r.trace->rows) {
            std::vector<std::string> cells = {std::to_string(row.vertex), row.x, row.y, row.phi};
            cells.insert(cells.end(), row.classes.begin(), row.classes.end());
            os << md_row(cells);
        }
        os << "\n";
    }
    if (r.cusps) {
        const auto& c = *r.cusps;
        os << "# Cusps of X1(" << c.level << ")\n\n";
        os << "Delta = " << c.delta << "\n\n";
        os << md_row({"d", "cusps"}) << md_sep(2);
        long total = 0;
        for (const auto& lvl : c.levels) {
            os << md_row({std::to_string(lvl.d), std::to_string(lvl.count)});
            total += lvl.count;
        }
        os << "\nTotal: " << total << "\n";
        for (const auto& lvl : c.levels) {
            for (const auto& fiber : lvl.fibers) {
                os << "\n## Level d=" << lvl.d << ", X0-cusp " << fiber.x0_cusp << "\n\n";
                for (size_t i = 0; i < fiber.orbits.size(); ++i) {
                    os << "- orbit " << i + 1 << ": {";
                    for (size_t k = 0; k < fiber.orbits[i].size(); ++k) {
                        if (k) os << ", ";
                        os << fiber.orbits[i][k];
                    }
                    os << "}\n";
                }
                os << "- classes:";
                for (const auto& cl : fiber.classes) {
                    os << " {";
                    for (size_t k = 0; k < cl.size(); ++k) {
                        if (k) os << ",";
                        os << "orbit " << cl[k] + 1;
                    }
                    os << "}";
                }
                os << (fiber.quadratic ? " -> quadratic" : " -> rational") << "\n";
            }
        }
        if (!c.images.empty()) {
            os << "\n## Atkin-Lehner images of the infinity cusp\n\n";
            os << md_row({"involution", "N'", "cusp", "fiber", "model point"}) << md_sep(5);
            for (const auto& img : c.images)
                os << md_row({img.involution, std::to_string(img.divisor), img.cusp,
                              img.quadratic ? "quadratic" : "rational", img.image_point});
        }
        os << "\n";
    }
    if (r.torsion) {
        os << "# Rational torsion of X0(" << r.level << ")\n\n";
        os << "Curve: " << r.curve_desc << "\n";
        os << "Structure: " << r.torsion->structure << "\n\n";
        bool reduced = r.torsion->reduction_prime > 0;
        std::vector<std::string> header = {"point", "order"};
        if (reduced) {
            header.push_back("mod " + std::to_string(r.torsion->reduction_prime));
            header.push_back("order after reduction");
        }
        os << md_row(header) << md_sep(header.size());
        for (const auto& row : r.torsion->rows) {
            std::vector<std::string> cells = {row.point, std::to_string(row.order)};
            if (reduced) {
                cells.push_back(row.reduced);
                cells.push_back(std::to_string(row.reduced_order));
            }
            os << md_row(cells);
        }
        os << "\n";
    }
    for (const auto& g : r.graphs) {
        os << "# Involution graph" << (g.branch.empty() ? "" : " (branch " + g.branch + ")") << "\n\n";
        os << "Vertices: " << g.vertex_count << "\n";
        os << "Edges:";
        for (const auto& e : g.edges) os << " " << e[0] << "-" << e[1];
        os << "\n";
        os << "Black vertices: " << join_ints(g.black, " ") << "\n";
        os << "Components: " << g.components.size() << " (sizes:";
        for (const auto& comp : g.components) os << " " << comp.size();
        os << ")\n";
        os << "Every white vertex has a black neighbor: " << (g.pass ? "yes" : "NO") << "\n";
        if (!g.surviving.empty()) os << "Surviving white vertices: " << join_ints(g.surviving, " ") << "\n";
        os << "\n";
    }
    if (r.verdict.has_value()) {
        os << "# Verdict\n\n";
        os << (*r.verdict ? "PASS" : "FAIL") << ": ";
        if (*r.verdict)
            os << "no candidate point of order " << r.target << " survives on X0(" << r.level << ")" << where
               << "\n";
        else
            os << "some candidate points survive; see the graph sections\n";
        os << "\n";
    }
    if (!r.notes.empty()) {
        os << "# Notes\n\n";
        for (const auto& note : r.notes) os << "- " << note << "\n";
    }
    std::string out = os.str();
    while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
    return out;
}

// ---------------------------------------------------------------- csv

std::string render_csv(const Report& r) {
    std::ostringstream os;
    if (r.points) {
        os << "x,y,j,marked,phi\n";
        for (const auto& row : r.points->rows) {
            std::string x = row.x == kInf ? "inf" : row.x;
            std::string y = row.y == kInf ? "inf" : row.y;
            os << csv_quote(x) << "," << csv_quote(y) << "," << csv_quote(row.j) << ","
               << (row.j.empty() ? "" : (row.marked ? "1" : "0")) << "," << csv_quote(row.phi) << "\n";
        }
        return os.str();
    }
    if (r.twists) {
        os << "j,marked,e1,e2\n";
        for (const auto& row : r.twists->rows)
            os << csv_quote(row.j) << "," << (row.marked ? "1" : "0") << "," << csv_quote(row.e1) << ","
               << csv_quote(row.e2) << "\n";
        return os.str();
    }
    if (r.trace) {
        os << "vertex,x,y,phi";
        for (const auto& b : r.trace->branches) os << "," << (b.empty() ? "class" : "class_" + b);
        os << "\n";
        for (const auto& row : r.trace->rows) {
            os << row.vertex << "," << csv_quote(row.x) << "," << csv_quote(row.y) << "," << csv_quote(row.phi);
            for (const auto& c : row.classes) os << "," << c;
            os << "\n";
        }
        return os.str();
    }
    if (r.torsion) {
        bool reduced = r.torsion->reduction_prime > 0;
        os << "point,order" << (reduced ? ",reduced,reduced_order" : "") << "\n";
        for (const auto& row : r.torsion->rows) {
            os << csv_quote(row.point) << "," << row.order;
            if (reduced) os << "," << csv_quote(row.reduced) << "," << row.reduced_order;
            os << "\n";
        }
        return os.str();
    }
    if (r.cusps) {
        os << "d,count\n";
        for (const auto& lvl : r.cusps->levels) os << lvl.d << "," << lvl.count << "\n";
        return os.str();
    }
    fail(Err::config, "command '" + r.command + "' has no CSV form");
}

// ---------------------------------------------------------------- dot

std::string render_dot(const Report& r) {
    if (r.graphs.empty()) fail(Err::config, "DOT output needs a graph (use the graph or verify command)");
    std::ostringstream os;
    for (const auto& g : r.graphs) {
        std::string name = "x0_" + std::to_string(r.level);
        if (!g.branch.empty()) name += "_" + g.branch;
        os << "graph " << name << " {\n";
        os << "  node [style=filled];\n";
        std::vector<bool> black(static_cast<size_t>(g.vertex_count) + 1, false);
        for (int v : g.black) black[static_cast<size_t>(v)] = true;
        for (int v = 1; v <= g.vertex_count; ++v)
            os << "  " << v << " [fillcolor=" << (black[static_cast<size_t>(v)] ? "black" : "white") << "];\n";
        for (const auto& e : g.edges) os << "  " << e[0] << " -- " << e[1] << ";\n";
        os << "}\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- json

namespace {

njson graph_json(const GraphSec& g) {
    njson j;
    j["branch"] = g.branch;
    j["vertex_count"] = g.vertex_count;
    j["edges"] = njson::array();
    for (const auto& e : g.edges) j["edges"].push_back({e[0], e[1]});
    j["black"] = g.black;
    j["components"] = g.components;
    j["pass"] = g.pass;
    j["surviving"] = g.surviving;
    return j;
}

GraphSec graph_from_json(const njson& j) {
    GraphSec g;
    g.branch = j.at("branch").get<std::string>();
    g.vertex_count = j.at("vertex_count").get<int>();
    for (const auto& e : j.at("edges")) g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    g.black = j.at("black").get<std::vector<int>>();
    g.components = j.at("components").get<std::vector<std::vector<int>>>();
    g.pass = j.at("pass").get<bool>();
    g.surviving = j.at("surviving").get<std::vector<int>>();
    return g;
}

}  // namespace

std::string render_json(const Report& r) {
    njson j;
    j["command"] = r.command;
    j["model"] = r.model_id;
    j["level"] = r.level;
    j["p"] = r.p;
    j["n"] = r.n;
    j["q"] = r.q;
    j["target"] = r.target;
    j["branch"] = r.branch;
    j["field"] = r.field_desc;
    j["curve"] = r.curve_desc;
    if (r.points) {
        njson rows = njson::array();
        for (const auto& row : r.points->rows)
            rows.push_back({{"x", row.x},
                            {"y", row.y},
                            {"j", row.j},
                            {"marked", row.marked},
                            {"phi", row.phi},
                            {"vertex", row.vertex}});
        j["points"] = {{"count", r.points->point_count}, {"rows", rows}};
    }
    if (r.twists) {
        njson rows = njson::array();
        for (const auto& row : r.twists->rows)
            rows.push_back({{"j", row.j}, {"marked", row.marked}, {"e1", row.e1}, {"e2", row.e2}});
        j["twists"] = {{"rows", rows}};
    }
    if (r.involutions) {
        j["involutions"] = {{"names", r.involutions->names}, {"rows", r.involutions->rows}};
    }
    if (r.trace) {
        njson rows = njson::array();
        for (const auto& row : r.trace->rows)
            rows.push_back(
                {{"vertex", row.vertex}, {"x", row.x}, {"y", row.y}, {"phi", row.phi}, {"classes", row.classes}});
        j["trace"] = {{"branches", r.trace->branches}, {"rows", rows}};
    }
    if (r.cusps) {
        njson levels = njson::array();
        for (const auto& lvl : r.cusps->levels) {
            njson fibers = njson::array();
            for (const auto& f : lvl.fibers)
                fibers.push_back({{"x0_cusp", f.x0_cusp},
                                  {"orbits", f.orbits},
                                  {"classes", f.classes},
                                  {"quadratic", f.quadratic}});
            levels.push_back({{"d", lvl.d}, {"count", lvl.count}, {"fibers", fibers}});
        }
        njson images = njson::array();
        for (const auto& img : r.cusps->images)
            images.push_back({{"involution", img.involution},
                              {"divisor", img.divisor},
                              {"cusp", img.cusp},
                              {"quadratic", img.quadratic},
                              {"image_point", img.image_point}});
        j["cusps"] = {{"level", r.cusps->level}, {"delta", r.cusps->delta}, {"levels", levels}, {"images", images}};
    }
    if (r.torsion) {
        njson rows = njson::array();
        for (const auto& row : r.torsion->rows)
            rows.push_back({{"point", row.point},
                            {"order", row.order},
                            {"reduced", row.reduced},
                            {"reduced_order", row.reduced_order}});
        j["torsion"] = {{"structure", r.torsion->structure},
                        {"reduction_prime", r.torsion->reduction_prime},
                        {"rows", rows}};
    }
    if (!r.graphs.empty()) {
        njson graphs = njson::array();
        for (const auto& g : r.graphs) graphs.push_back(graph_json(g));
        j["graphs"] = graphs;
    }
    if (r.verdict.has_value()) j["verdict"] = *r.verdict;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    njson j;
    try {
        j = njson::parse(text);
    } catch (const njson::exception& e) {
        fail(Err::config, std::string("report is not valid JSON: ") + e.what());
    }
    Report r;
    r.command = j.at("command").get<std::string>();
    r.model_id = j.at("model").get<std::string>();
    r.level = j.at("level").get<int>();
    r.p = j.at("p").get<int>();
    r.n = j.at("n").get<int>();
    r.q = j.at("q").get<long>();
    r.target = j.at("target").get<long>();
    r.branch = j.at("branch").get<std::string>();
    r.field_desc = j.at("field").get<std::string>();
    r.curve_desc = j.at("curve").get<std::string>();
    if (j.contains("points")) {
        PointTableSec sec;
        sec.point_count = j["points"].at("count").get<long>();
        for (const auto& row : j["points"].at("rows")) {
            PointRow pr;
            pr.x = row.at("x").get<std::string>();
            pr.y = row.at("y").get<std::string>();
            pr.j = row.at("j").get<std::string>();
            pr.marked = row.at("marked").get<bool>();
            pr.phi = row.at("phi").get<std::string>();
            pr.vertex = row.at("vertex").get<int>();
            sec.rows.push_back(std::move(pr));
        }
        r.points = std::move(sec);
    }
    if (j.contains("twists")) {
        TwistTableSec sec;
        for (const auto& row : j["twists"].at("rows")) {
            TwistRow tr;
            tr.j = row.at("j").get<std::string>();
            tr.marked = row.at("marked").get<bool>();
            tr.e1 = row.at("e1").get<std::string>();
            tr.e2 = row.at("e2").get<std::string>();
            sec.rows.push_back(std::move(tr));
        }
        r.twists = std::move(sec);
    }
    if (j.contains("involutions")) {
        InvolutionTableSec sec;
        sec.names = j["involutions"].at("names").get<std::vector<std::string>>();
        sec.rows = j["involutions"].at("rows").get<std::vector<std::vector<std::string>>>();
        r.involutions = std::move(sec);
    }
    if (j.contains("trace")) {
        TraceSec sec;
        sec.branches = j["trace"].at("branches").get<std::vector<std::string>>();
        for (const auto& row : j["trace"].at("rows")) {
            TraceRow tr;
            tr.vertex = row.at("vertex").get<int>();
            tr.x = row.at("x").get<std::string>();
            tr.y = row.at("y").get<std::string>();
            tr.phi = row.at("phi").get<std::string>();
            tr.classes = row.at("classes").get<std::vector<std::string>>();
            sec.rows.push_back(std::move(tr));
        }
        r.trace = std::move(sec);
    }
    if (j.contains("cusps")) {
        CuspSec sec;
        sec.level = j["cusps"].at("level").get<int>();
        sec.delta = j["cusps"].at("delta").get<std::string>();
        for (const auto& lvl : j["cusps"].at("levels")) {
            CuspLevel cl;
            cl.d = lvl.at("d").get<int>();
            cl.count = lvl.at("count").get<long>();
            for (const auto& f : lvl.at("fibers")) {
                CuspFiber fiber;
                fiber.x0_cusp = f.at("x0_cusp").get<std::string>();
                fiber.orbits = f.at("orbits").get<std::vector<std::vector<std::string>>>();
                fiber.classes = f.at("classes").get<std::vector<std::vector<int>>>();
                fiber.quadratic = f.at("quadratic").get<bool>();
                cl.fibers.push_back(std::move(fiber));
            }
            sec.levels.push_back(std::move(cl));
        }
        for (const auto& img : j["cusps"].at("images")) {
            CuspImageRow cr;
            cr.involution = img.at("involution").get<std::string>();
            cr.divisor = img.at("divisor").get<int>();
            cr.cusp = img.at("cusp").get<std::string>();
            cr.quadratic = img.at("quadratic").get<bool>();
            cr.image_point = img.at("image_point").get<std::string>();
            sec.images.push_back(std::move(cr));
        }
        r.cusps = std::move(sec);
    }
    if (j.contains("torsion")) {
        TorsionSec sec;
        sec.structure = j["torsion"].at("structure").get<std::string>();
        sec.reduction_prime = j["torsion"].at("reduction_prime").get<int>();
        for (const auto& row : j["torsion"].at("rows")) {
            TorsionRow tr;
            tr.point = row.at("point").get<std::string>();
            tr.order = row.at("order").get<long>();
            tr.reduced = row.at("reduced").get<std::string>();
            tr.reduced_order = row.at("reduced_order").get<long>();
            sec.rows.push_back(std::move(tr));
        }
        r.torsion = std::move(sec);
    }
    if (j.contains("graphs"))
        for (const auto& g : j["graphs"]) r.graphs.push_back(graph_from_json(g));
    if (j.contains("verdict")) r.verdict = j["verdict"].get<bool>();
    if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
    return r;
}

}  // namespace modtor
