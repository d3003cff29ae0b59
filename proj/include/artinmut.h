#ifndef ARTINMUT_H
#define ARTINMUT_H

/* C interface to the artinmut library. Structured data crosses the boundary
 * as JSON strings; vertices and generators are 1-based throughout. Every
 * function returning am_status leaves a message for am_last_error() on
 * failure. Strings returned through char** are owned by the caller and must
 * be released with am_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ARTINMUT_BUILDING)
#define AM_API __declspec(dllexport)
#else
#define AM_API __declspec(dllimport)
#endif
#else
#define AM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum am_status {
  AM_OK = 0,
  AM_ERR_INVALID_ARGUMENT = 1,
  AM_ERR_PARSE = 2,
  AM_ERR_NOT_SKEW_SYMMETRIZABLE = 3,
  AM_ERR_OUT_OF_RANGE = 4,
  AM_ERR_NOT_SQUARE = 5,
  AM_ERR_NOT_CYCLICALLY_ORIENTED = 6,
  AM_ERR_NOT_FINITE_TYPE = 7,
  AM_ERR_NOT_CONNECTED = 8,
  AM_ERR_BOUND_EXCEEDED = 9,
  AM_ERR_BUDGET_EXHAUSTED = 10,
  AM_ERR_ALPHABET_MISMATCH = 11,
  AM_ERR_UNSUPPORTED_CYCLE = 12,
  AM_ERR_INTERNAL = 13
} am_status;

typedef enum am_mode { AM_MODE_FINITE = 0, AM_MODE_AFFINE = 1 } am_mode;

/* Values match the command-line exit codes. */
typedef enum am_verdict { AM_PASS = 0, AM_FAIL = 2, AM_INCONCLUSIVE = 3 } am_verdict;

typedef enum am_format { AM_FORMAT_JSON = 0, AM_FORMAT_TEXT = 1, AM_FORMAT_DOT = 2 } am_format;

typedef enum am_presentation_kind {
  AM_PRESENT_ARTIN = 0,
  AM_PRESENT_COXETER = 1
} am_presentation_kind;

typedef enum am_finite_type {
  AM_FINITE = 0,
  AM_INFINITE = 1,
  AM_FINITE_TYPE_UNDECIDED = 2
} am_finite_type;

typedef struct am_diagram am_diagram;
typedef struct am_options am_options;
typedef struct am_presentation am_presentation;
typedef struct am_report am_report;

AM_API const char* am_version(void);
AM_API const char* am_status_name(am_status status);
/* Message of the last failure on this thread; "" if none. */
AM_API const char* am_last_error(void);
AM_API void am_string_free(char* s);

/* Diagrams. JSON is {"n", "edges": [[i, j, w], ...]} or {"B": rows}. */
AM_API am_status am_diagram_from_json(const char* json, am_mode mode, am_diagram** out);
AM_API void am_diagram_free(am_diagram* g);
AM_API int am_diagram_size(const am_diagram* g);
AM_API int am_diagram_equal(const am_diagram* a, const am_diagram* b);
/* JSON form, DOT graph, or the one-line signature for AM_FORMAT_TEXT. */
AM_API am_status am_diagram_to_string(const am_diagram* g, am_format format, char** out);
AM_API am_status am_diagram_mutate(const am_diagram* g, int k, am_diagram** out);
AM_API am_status am_diagram_opposite(const am_diagram* g, am_diagram** out);
AM_API am_status am_diagram_cycles(const am_diagram* g, am_mode mode, char** json_out);
AM_API am_status am_diagram_finite_type(const am_diagram* g, size_t cap, am_finite_type* out);

/* Canonical members of the mutation class, sorted by encoding. */
AM_API am_status am_mutation_class(const am_diagram* g, size_t cap, am_diagram*** members,
                                   size_t* count);
AM_API void am_diagram_array_free(am_diagram** members, size_t count);
/* Members with their cycle census and Coxeter order, plus the shared order. */
AM_API am_status am_enumerate(const am_diagram* g, const am_options* opts, char** json_out);

/* Options. Defaults: finite mode, full T3 set, nodes 1000000, extra
 * length 16, coset cap 1000000, threads from the hardware. */
AM_API am_options* am_options_new(void);
AM_API void am_options_free(am_options* opts);
AM_API am_status am_options_set_mode(am_options* opts, am_mode mode);
AM_API am_status am_options_set_minimal_t3(am_options* opts, int on);
/* {"patterns": [...]} as documented for pattern files. */
AM_API am_status am_options_set_patterns_json(am_options* opts, const char* json);
AM_API am_status am_options_set_budget_nodes(am_options* opts, size_t nodes);
AM_API am_status am_options_set_budget_len(am_options* opts, size_t extra_len);
AM_API am_status am_options_set_coset_cap(am_options* opts, size_t cap);
AM_API am_status am_options_set_threads(am_options* opts, int threads);

/* Presentations. opts may be NULL. */
AM_API am_status am_present(const am_diagram* g, am_presentation_kind kind,
                            const am_options* opts, am_presentation** out);
AM_API void am_presentation_free(am_presentation* p);
AM_API size_t am_presentation_relator_count(const am_presentation* p);
/* JSON or one relator per line. */
AM_API am_status am_presentation_to_string(const am_presentation* p, am_format format,
                                           char** out);
/* Coxeter order via coset enumeration; AM_ERR_BUDGET_EXHAUSTED if capped. */
AM_API am_status am_presentation_order(const am_presentation* p, size_t cap, size_t* order);

/* Verification. opts may be NULL. */
AM_API am_status am_verify_mutation(const am_diagram* g, int k, const am_options* opts,
                                    am_report** out);
/* {"label", "source": diagram, "target": diagram, "images": [word, ...]}. */
AM_API am_status am_verify_map_json(const char* json, const am_options* opts, am_report** out);
AM_API void am_report_free(am_report* r);
AM_API am_verdict am_report_verdict(const am_report* r);
/* Full JSON report, or a one-line summary for AM_FORMAT_TEXT. */
AM_API am_status am_report_to_string(const am_report* r, am_format format, char** out);

/* Seeded soundness fuzzing over the Artin presentation of g. */
AM_API am_status am_fuzz_soundness(const am_diagram* g, const am_options* opts, uint64_t seed,
                                   size_t count, char** json_out);

#ifdef __cplusplus
}
#endif

#endif
