// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstruction.hpp"

namespace modtor {

// Report sections carry pre-rendered strings so every output format (and
// the JSON round-trip) is deterministic by construction.

struct PointRow {
    std::string x, y;  // "∞" for the point at infinity
    std::string j;     // "" when the formula degenerates ("-" rows)
    bool marked = false;
    std::string phi;  // "" for degenerate rows
    int vertex = 0;
};

struct PointTableSec {
    std::vector<PointRow> rows;  // per point, canonical order
    long point_count = 0;
};

struct TwistRow {
    std::string j;
    bool marked = false;
    std::string e1, e2;  // group structures
};

struct TwistTableSec {
    std::vector<TwistRow> rows;
};

struct CuspFiber {
    std::string x0_cusp;
    std::vector<std::vector<std::string>> orbits;  // member cusp strings
    std::vector<std::vector<int>> classes;         // orbit indices
    bool quadratic = false;
};

struct CuspLevel {
    int d = 1;
    long count = 0;
    std::vector<CuspFiber> fibers;
};

struct CuspImageRow {
    std::string involution;
    int divisor = 1;
    std::string cusp;  // omega_{N'}(1,1)
    bool quadratic = false;
    std::string image_point;  // omega_{N'}(infinity) on the model
};

struct CuspSec {
    int level = 0;
    std::string delta;
    std::vector<CuspLevel> levels;
    std::vector<CuspImageRow> images;
};

struct TraceRow {
    int vertex = 0;
    std::string x, y, phi;
    std::vector<std::string> classes;  // per branch, "allowed"/"forbidden"
};

struct TraceSec {
    std::vector<std::string> branches;  // column labels
    std::vector<TraceRow> rows;
};

struct TorsionRow {
    std::string point;
    long order = 1;
    std::string reduced;  // image mod the model's reduction prime
    long reduced_order = 1;
};

struct TorsionSec {
    std::string structure;
    int reduction_prime = 0;
    std::vector<TorsionRow> rows;
};

struct InvolutionTableSec {
    std::vector<std::string> names;                      // column order
    std::vector<std::vector<std::string>> rows;          // vertex, x, y, then (x,y) per name
};

struct GraphSec {
    std::string branch;
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<int> black;  // sorted vertex list
    std::vector<std::vector<int>> components;
    bool pass = false;
    std::vector<int> surviving;
};

struct Report {
    std::string command;
    std::string model_id;
    int level = 0;
    int p = 0;
    int n = 0;
    long q = 0;
    long target = 0;
    std::string branch;
    std::string field_desc;
    std::string curve_desc;

    std::optional<PointTableSec> points;
    std::optional<TwistTableSec> twists;
    std::optional<CuspSec> cusps;
    std::optional<TraceSec> trace;
    std::optional<TorsionSec> torsion;
    std::optional<InvolutionTableSec> involutions;
    std::vector<GraphSec> graphs;
    std::optional<bool> verdict;  // conjunction over graphs (verify)
    std::vector<std::string> notes;
};

std::string render_markdown(const Report& r);
std::string render_csv(const Report& r);      // ConfigError for non-tabular commands
std::string render_dot(const Report& r);      // ConfigError without a graph section
std::string render_json(const Report& r);
Report report_from_json(const std::string& text);

/// Markdown for just the point / twist / involution table block (used by
/// the golden comparisons; the command output embeds the same bytes).
std::string markdown_point_table(const PointTableSec& sec);
std::string markdown_twist_table(const TwistTableSec& sec);
std::string markdown_involution_table(const InvolutionTableSec& sec);

// ---- report builders (one per subcommand) ----

struct RunSpec {
    std::string command;                 // enumerate|twists|cusps|trace|torsion|graph|verify
    const Model* model = nullptr;
    const ModelSet* set = nullptr;       // for field lookups
    int p = 0;                           // defaults to model->reduction_prime
    int n = 3;
    long target = 0;                     // defaults to model->level
    std::string branch = "both";         // omega|omega_prime|both ("" ok for unbranched)
    std::string format = "markdown";
};

Report run_report(const RunSpec& spec);

}  // namespace modtor
