// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <map>
#include <optional>

#include "trace.hpp"
#include "twists.hpp"

namespace modtor {

/// One enumerated point of the reduced model with the derived columns the
/// obstruction argument consumes. Rows without a j value sit over cusps or
/// degenerate fibres; they are kept for the tables but never enter the
/// graph.
struct CandidateRow {
    EcPoint<Fe> point;
    std::optional<Fe> j;
    bool marked = false;
    std::optional<EcPoint<Fe>> trace;
    std::map<std::string, EcPoint<Fe>> images;  // involution name -> image
    int vertex = 0;                             // 1-based among graph candidates, 0 otherwise
};

struct Candidates {
    const Model* model = nullptr;
    FieldRef field;
    WCurve<Fe> curve;
    long target = 0;
    std::vector<CandidateRow> rows;  // every point, canonical enumeration order
    std::vector<size_t> vertex_row;  // vertex v -> index into rows (1-based v)

    const CandidateRow& row_of_vertex(int v) const { return rows[vertex_row[static_cast<size_t>(v)]]; }
    int vertex_count() const { return static_cast<int>(vertex_row.size()) - 1; }
};

/// Enumerate the reduced model over k and fill every derived column:
/// j through the curated formula, the (*) mark from the twist exponents,
/// the trace target, and the involution images of the graph candidates.
Candidates build_candidates(const Model& m, const FieldRef& k, long target);

/// The involution graph on the candidates. branch selects one hypothesis
/// for a branched model (x0_32's omega vs omega_prime); models without
/// branches take branch = "" and draw one edge family per involution.
struct ObstructionGraph {
    std::string branch;
    int vertex_count = 0;
    std::vector<std::array<int, 2>> edges;       // a <= b, sorted, deduplicated
    std::vector<bool> black;                     // 1-based; black = unmarked j or forbidden trace
    std::vector<std::vector<int>> components;    // sorted by first vertex
    std::vector<std::string> involution_names;   // edge families drawn
};

ObstructionGraph build_graph(const Candidates& c, std::string_view branch);

struct EliminationResult {
    bool pass = false;
    std::vector<int> surviving;  // white vertices with an all-white neighborhood
};

/// PASS iff every white vertex has at least one black neighbor. A fixed
/// point of an involution is its own neighbor.
EliminationResult graph_verdict(const ObstructionGraph& g);

}  // namespace modtor
