/* (C) 2026 the modtor authors
 *
 * This file is part of modtor.
 *
 * Licensed under the Apache License, Version 2.0 (see
 * LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
 *
 * C interface to the modtor verification core. All state lives behind
 * opaque handles; every call reports a modtor_status. Error text for the
 * last failing call on a context is kept on the context.
 */

#ifndef MODTOR_H
#define MODTOR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MODTOR_API __declspec(dllexport)
#else
#define MODTOR_API __attribute__((visibility("default")))
#endif

typedef enum modtor_status {
    MODTOR_OK = 0,
    MODTOR_E_USAGE = 1,    /* bad option, unknown model/command, malformed config */
    MODTOR_E_DOMAIN = 2,   /* mathematically invalid request (bad prime, budget, ...) */
    MODTOR_E_INTERNAL = 3, /* broken invariant inside the core */
    MODTOR_E_IO = 4
} modtor_status;

typedef struct modtor_ctx modtor_ctx;
typedef struct modtor_report modtor_report;

/* Context over the built-in model registry. */
MODTOR_API modtor_status modtor_ctx_new(modtor_ctx **out);

/* Context over a model config file (same schema as data/models.json). */
MODTOR_API modtor_status modtor_ctx_new_from_file(const char *config_path, modtor_ctx **out);

MODTOR_API void modtor_ctx_free(modtor_ctx *ctx);

/* Message of the last failing call on this context ("" if none). The
 * pointer stays valid until the next call on the context. */
MODTOR_API const char *modtor_ctx_error(const modtor_ctx *ctx);

/* ids of the models the context knows, as a newline-separated list. */
MODTOR_API const char *modtor_ctx_models(modtor_ctx *ctx);

/* Zero-initialize, then fill what differs from the defaults. */
typedef struct modtor_options {
    const char *command; /* enumerate|twists|cusps|trace|torsion|graph|verify */
    const char *model;   /* model id, e.g. "x0_32" */
    const char *format;  /* markdown|csv|dot|json (default markdown) */
    const char *branch;  /* branch involution name, or "both" (default) */
    int prime;           /* reduction prime; 0 = model default */
    int ext_degree;      /* residue field degree; 0 = 3 */
    long target_order;   /* torsion order to obstruct; 0 = model level */
} modtor_options;

/* Run one pipeline command and render it in the requested format. On
 * success *out owns the rendered report. */
MODTOR_API modtor_status modtor_run(modtor_ctx *ctx, const modtor_options *opt, modtor_report **out);

MODTOR_API const char *modtor_report_text(const modtor_report *rep);
MODTOR_API size_t modtor_report_size(const modtor_report *rep);

/* 1 = every candidate eliminated, 0 = some survive, -1 = command has no
 * verdict. */
MODTOR_API int modtor_report_verdict(const modtor_report *rep);

MODTOR_API void modtor_report_free(modtor_report *rep);

MODTOR_API const char *modtor_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MODTOR_H */
