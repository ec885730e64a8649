/* Copyright 2026 The hcond Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the hcond analyzer. Handles are opaque; every call that can
 * fail returns an hcond_status and leaves a message in hcond_last_error().
 * Strings handed out by the library are released with hcond_string_free.
 */

#ifndef HCOND_H
#define HCOND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HCOND_BUILDING_LIBRARY)
#    define HCOND_API __declspec(dllexport)
#  else
#    define HCOND_API __declspec(dllimport)
#  endif
#else
#  define HCOND_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hcond_instance hcond_instance;
typedef struct hcond_analysis hcond_analysis;

typedef enum hcond_status {
  HCOND_OK = 0,
  HCOND_E_INVALID_INPUT = 1, /* malformed file, bad prime, duplicate roots, ... */
  HCOND_E_INTERNAL = 2,      /* a checked identity failed */
  HCOND_E_IO = 3,
  HCOND_E_ARGUMENT = 4       /* NULL handle or out-of-range argument */
} hcond_status;

/* Flags for hcond_analyze. */
#define HCOND_ALLOW_SMALL_GENUS 0x1u
#define HCOND_STRICT 0x2u

typedef enum hcond_graph {
  HCOND_GRAPH_TB = 0,
  HCOND_GRAPH_TY = 1,
  HCOND_GRAPH_TX = 2
} hcond_graph;

typedef struct hcond_summary {
  int64_t genus;
  int64_t nu_df;
  int64_t artin_direct;
  int64_t artin_local;
  int64_t n_components;
  int64_t f_tilde;
  int inequality_holds;
  int equality_holds;
  int x_minimal;
  int component_bound_ok;
} hcond_summary;

HCOND_API const char* hcond_version(void);

/* Message and symbolic code name of the last failure on this thread. */
HCOND_API const char* hcond_last_error(void);
HCOND_API const char* hcond_last_error_code(void);

HCOND_API hcond_status hcond_instance_parse(const char* json, size_t len, hcond_instance** out);
HCOND_API hcond_status hcond_instance_load(const char* path, hcond_instance** out);
HCOND_API void hcond_instance_free(hcond_instance* inst);
HCOND_API const char* hcond_instance_label(const hcond_instance* inst);

HCOND_API hcond_status hcond_analyze(const hcond_instance* inst, unsigned flags, hcond_analysis** out);
HCOND_API void hcond_analysis_free(hcond_analysis* a);

HCOND_API hcond_status hcond_analysis_summary(const hcond_analysis* a, hcond_summary* out);
HCOND_API size_t hcond_analysis_warning_count(const hcond_analysis* a);
HCOND_API const char* hcond_analysis_warning(const hcond_analysis* a, size_t index);

/* indent < 0 gives a single line. */
HCOND_API hcond_status hcond_analysis_json(const hcond_analysis* a, int indent, char** out);
HCOND_API hcond_status hcond_analysis_text(const hcond_analysis* a, char** out);
HCOND_API hcond_status hcond_analysis_dot(const hcond_analysis* a, hcond_graph which, char** out);

/* Randomized identity suite. The summary is a JSON object. */
HCOND_API hcond_status hcond_fuzz(uint64_t trials, uint64_t seed, char** summary);

HCOND_API void hcond_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HCOND_H */
