// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "modtor.h"

#include <string>

#include "report.hpp"

using namespace modtor;

struct modtor_ctx {
    ModelSet models;
    std::string last_error;
    std::string model_list;
};

struct modtor_report {
    std::string text;
    int verdict = -1;
};

namespace {

modtor_status status_of(const Error& e) {
    if (e.is_internal()) return MODTOR_E_INTERNAL;
    switch (e.kind()) {
        case Err::io: return MODTOR_E_IO;
        case Err::config:
        case Err::invalid_element: return MODTOR_E_USAGE;
        default: return MODTOR_E_DOMAIN;
    }
}

template <class F>
modtor_status guarded(modtor_ctx* ctx, F&& fn) {
    try {
        fn();
        if (ctx) ctx->last_error.clear();
        return MODTOR_OK;
    } catch (const Error& e) {
        if (ctx) ctx->last_error = std::string(err_name(e.kind())) + ": " + e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        if (ctx) ctx->last_error = std::string("unexpected: ") + e.what();
        return MODTOR_E_INTERNAL;
    }
}

}  // namespace

extern "C" {

modtor_status modtor_ctx_new(modtor_ctx** out) {
    if (!out) return MODTOR_E_USAGE;
    *out = nullptr;
    try {
        auto* ctx = new modtor_ctx{builtin_models(), "", ""};
        *out = ctx;
        return MODTOR_OK;
    } catch (const Error&) {
        return MODTOR_E_INTERNAL;
    }
}

modtor_status modtor_ctx_new_from_file(const char* config_path, modtor_ctx** out) {
    if (!out || !config_path) return MODTOR_E_USAGE;
    *out = nullptr;
    try {
        auto* ctx = new modtor_ctx{load_models_file(config_path), "", ""};
        *out = ctx;
        return MODTOR_OK;
    } catch (const Error& e) {
        return status_of(e);
    }
}

void modtor_ctx_free(modtor_ctx* ctx) { delete ctx; }

const char* modtor_ctx_error(const modtor_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* modtor_ctx_models(modtor_ctx* ctx) {
    if (!ctx) return "";
    ctx->model_list.clear();
    for (const auto& m : ctx->models.models) {
        if (!ctx->model_list.empty()) ctx->model_list += "\n";
        ctx->model_list += m.id;
    }
    return ctx->model_list.c_str();
}

modtor_status modtor_run(modtor_ctx* ctx, const modtor_options* opt, modtor_report** out) {
    if (!ctx || !opt || !out) return MODTOR_E_USAGE;
    *out = nullptr;
    return guarded(ctx, [&] {
        if (!opt->command || !opt->model) fail(Err::config, "command and model are required");
        RunSpec spec;
        spec.command = opt->command;
        spec.set = &ctx->models;
        spec.model = &ctx->models.get(opt->model);
        spec.p = opt->prime;
        spec.n = opt->ext_degree > 0 ? opt->ext_degree : 3;
        spec.target = opt->target_order;
        spec.branch = opt->branch ? opt->branch : "both";
        spec.format = opt->format ? opt->format : "markdown";

        Report rep = run_report(spec);
        std::string text;
        if (spec.format == "markdown") text = render_markdown(rep);
        else if (spec.format == "csv") text = render_csv(rep);
        else if (spec.format == "dot") text = render_dot(rep);
        else if (spec.format == "json") text = render_json(rep);
        else fail(Err::config, "unknown format '" + spec.format + "'");

        auto* r = new modtor_report;
        r->text = std::move(text);
        r->verdict = rep.verdict.has_value() ? (*rep.verdict ? 1 : 0) : -1;
        *out = r;
    });
}

const char* modtor_report_text(const modtor_report* rep) { return rep ? rep->text.c_str() : ""; }

size_t modtor_report_size(const modtor_report* rep) { return rep ? rep->text.size() : 0; }

int modtor_report_verdict(const modtor_report* rep) { return rep ? rep->verdict : -1; }

void modtor_report_free(modtor_report* rep) { delete rep; }

const char* modtor_version(void) { return "0.1.0"; }

}  // extern "C"
