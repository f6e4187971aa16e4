// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace modtor {

Candidates build_candidates(const Model& m, const FieldRef& k, long target) {
    Candidates out;
    out.model = &m;
    out.field = k;
    out.curve = reduce_model(m, k);
    out.target = target;

    std::map<uint32_t, bool> mark_cache;
    auto marked = [&](const Fe& j) {
        auto it = mark_cache.find(j.index());
        if (it != mark_cache.end()) return it->second;
        bool v = mark_j(k, j, target, m.twist_alpha);
        mark_cache.emplace(j.index(), v);
        return v;
    };

    out.vertex_row.push_back(0);  // vertices are 1-based
    for (const auto& p : ec_enumerate(out.curve)) {
        CandidateRow row;
        row.point = p;
        try {
            row.j = j_of_point(m, out.curve, p);
        } catch (const Error& e) {
            if (e.kind() != Err::cuspidal_or_bad_point) throw;
        }
        if (row.j) {
            row.marked = marked(*row.j);
            row.trace = trace_map(out.curve, p);
            row.vertex = static_cast<int>(out.vertex_row.size());
            out.vertex_row.push_back(out.rows.size());
            for (const auto& inv : m.involutions)
                row.images.emplace(inv.name, apply_involution(m, out.curve, inv, p));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

ObstructionGraph build_graph(const Candidates& c, std::string_view branch) {
    const Model& m = *c.model;
    ObstructionGraph g;
    g.branch = std::string(branch);
    g.vertex_count = c.vertex_count();

    if (m.has_branches()) {
        if (branch.empty())
            fail(Err::config, "model " + m.id + " needs a branch hypothesis (one of its same-divisor involutions)");
        g.involution_names.push_back(std::string(branch));
        m.involution(branch);  // existence check
    } else {
        if (!branch.empty()) fail(Err::config, "model " + m.id + " has no branch hypotheses");
        for (const auto& inv : m.involutions) g.involution_names.push_back(inv.name);
    }

    // vertex lookup by point
    std::map<std::pair<uint32_t, uint32_t>, int> vertex_of;
    for (int v = 1; v <= g.vertex_count; ++v) {
        const auto& p = c.row_of_vertex(v).point;
        vertex_of[{p.x.index(), p.y.index()}] = v;
    }

    std::vector<std::array<int, 2>> edges;
    for (int v = 1; v <= g.vertex_count; ++v) {
        const CandidateRow& row = c.row_of_vertex(v);
        for (const auto& name : g.involution_names) {
            const auto& img = row.images.at(name);
            if (img.infinity)
                fail(Err::graph_closure, "involution image of a candidate left the affine chart");
            auto it = vertex_of.find({img.x.index(), img.y.index()});
            if (it == vertex_of.end())
                fail(Err::graph_closure, "involution image is not a candidate point");
            edges.push_back({std::min(v, it->second), std::max(v, it->second)});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);

    // colors: black iff unmarked j or forbidden trace target
    g.black.assign(static_cast<size_t>(g.vertex_count) + 1, false);
    for (int v = 1; v <= g.vertex_count; ++v) {
        const CandidateRow& row = c.row_of_vertex(v);
        bool black = !row.marked;
        if (!black) {
            TraceClass cls = classify_trace(m, c.curve, *row.trace, m.has_branches() ? branch : "");
            black = cls == TraceClass::forbidden;
        }
        g.black[static_cast<size_t>(v)] = black;
    }

    // connected components (union-find)
    std::vector<int> parent(static_cast<size_t>(g.vertex_count) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& e : g.edges) {
        int a = find(e[0]), b = find(e[1]);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    std::map<int, std::vector<int>> comps;
    for (int v = 1; v <= g.vertex_count; ++v) comps[find(v)].push_back(v);
    for (auto& [root, members] : comps) g.components.push_back(members);
    std::sort(g.components.begin(), g.components.end());
    return g;
}

EliminationResult graph_verdict(const ObstructionGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count) + 1);
    for (const auto& e : g.edges) {
        adj[static_cast<size_t>(e[0])].push_back(e[1]);
        if (e[0] != e[1]) adj[static_cast<size_t>(e[1])].push_back(e[0]);
    }
    EliminationResult r;
    for (int v = 1; v <= g.vertex_count; ++v) {
        if (g.black[static_cast<size_t>(v)]) continue;
        bool has_black_neighbor = false;
        for (int w : adj[static_cast<size_t>(v)])
            if (g.black[static_cast<size_t>(w)]) has_black_neighbor = true;
        if (!has_black_neighbor) r.surviving.push_back(v);
    }
    r.pass = r.surviving.empty();
    return r;
}

}  // namespace modtor
