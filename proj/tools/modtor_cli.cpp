// (C) 2026 the modtor authors
//
// This file is part of modtor.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end. Talks to the core exclusively through the C API
// in modtor.h.
//
// Exit codes: 0 verified / report written, 1 obstruction fails (a white
// vertex survives) or golden mismatch, 2 usage or config error, 3 internal
// invariant breach.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "modtor.h"

namespace {

struct CtxDeleter {
    void operator()(modtor_ctx* c) const { modtor_ctx_free(c); }
};
struct RepDeleter {
    void operator()(modtor_report* r) const { modtor_report_free(r); }
};

int status_exit_code(modtor_status s) {
    switch (s) {
        case MODTOR_OK: return 0;
        case MODTOR_E_INTERNAL: return 3;
        default: return 2;  // usage, domain and io problems are all config-level
    }
}

struct CommonOpts {
    std::string model;
    std::string config;
    std::string format = "markdown";
    std::string branch = "both";
    std::string expect;
    std::string out;
    int p = 0;
    int ext = 0;
    long target = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool point_level) {
    cmd->add_option("--model", o.model, "model id (x0_32, x0_24, or an id from --config)")->required();
    cmd->add_option("--config", o.config, "model config file (defaults to the built-in models)");
    cmd->add_option("--format", o.format, "markdown|csv|dot|json")
        ->check(CLI::IsMember({"markdown", "csv", "dot", "json"}));
    cmd->add_option("--expect", o.expect, "golden file; exit 1 unless the output matches it byte for byte");
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
    if (point_level) {
        cmd->add_option("--p", o.p, "reduction prime (default: the model's)");
        cmd->add_option("--ext", o.ext, "residue field degree (default 3)");
        cmd->add_option("--target", o.target, "torsion order to obstruct (default: the model level)");
        cmd->add_option("--branch", o.branch, "involution branch hypothesis, or 'both'");
    }
}

int run_command(const std::string& command, const CommonOpts& o) {
    modtor_ctx* raw_ctx = nullptr;
    modtor_status st = o.config.empty() ? modtor_ctx_new(&raw_ctx)
                                        : modtor_ctx_new_from_file(o.config.c_str(), &raw_ctx);
    std::unique_ptr<modtor_ctx, CtxDeleter> ctx(raw_ctx);
    if (st != MODTOR_OK) {
        std::cerr << "error: cannot load models"
                  << (ctx ? std::string(": ") + modtor_ctx_error(ctx.get()) : std::string()) << "\n";
        return status_exit_code(st);
    }

    modtor_options opt = {};
    opt.command = command.c_str();
    opt.model = o.model.c_str();
    opt.format = o.format.c_str();
    opt.branch = o.branch.c_str();
    opt.prime = o.p;
    opt.ext_degree = o.ext;
    opt.target_order = o.target;

    modtor_report* raw_rep = nullptr;
    st = modtor_run(ctx.get(), &opt, &raw_rep);
    std::unique_ptr<modtor_report, RepDeleter> rep(raw_rep);
    if (st != MODTOR_OK) {
        std::cerr << "error: " << modtor_ctx_error(ctx.get()) << "\n";
        return status_exit_code(st);
    }

    std::string text(modtor_report_text(rep.get()), modtor_report_size(rep.get()));
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << o.out << "'\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }

    if (!o.expect.empty()) {
        std::ifstream f(o.expect, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot read golden file '" << o.expect << "'\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        if (buf.str() != text) {
            std::cerr << "golden mismatch against '" << o.expect << "' (" << buf.str().size() << " vs "
                      << text.size() << " bytes)\n";
            return 1;
        }
        std::cerr << "golden match: " << o.expect << "\n";
    }

    int verdict = modtor_report_verdict(rep.get());
    if (verdict == 0) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modtor: torsion obstruction computations on modular curve models"};
    app.require_subcommand(1);
    app.set_version_flag("--version", modtor_version());

    struct Sub {
        const char* name;
        const char* help;
        bool point_level;
    };
    const Sub subs[] = {
        {"enumerate", "point table of the reduced model (coordinates, j, trace)", true},
        {"twists", "twist group structures for every j on the reduced model", true},
        {"cusps", "cusp inventory, diamond orbits and conjugacy classes", false},
        {"trace", "Frobenius trace targets and their allowed/forbidden class", true},
        {"torsion", "rational torsion of the model over Q (Lutz-Nagell)", false},
        {"graph", "involution graph with the black/white coloring", true},
        {"verify", "run the full obstruction argument; exit 0 iff it passes", true},
    };

    CommonOpts opts[sizeof(subs) / sizeof(subs[0])];
    CLI::App* cmds[sizeof(subs) / sizeof(subs[0])];
    for (size_t i = 0; i < sizeof(subs) / sizeof(subs[0]); ++i) {
        cmds[i] = app.add_subcommand(subs[i].name, subs[i].help);
        add_common(cmds[i], opts[i], subs[i].point_level);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // usage problems are exit code 2
    }

    for (size_t i = 0; i < sizeof(subs) / sizeof(subs[0]); ++i)
        if (cmds[i]->parsed()) return run_command(subs[i].name, opts[i]);
    return 2;
}
