/* Content zoning engine - public C API.
 *
 * All functions return a cozo_status; outputs are passed back through out
 * parameters. Handles are opaque and must be released with the matching
 * _free function. String getters on a handle return pointers owned by the
 * handle (valid until it is freed); functions with a char** out parameter
 * allocate, and the caller releases with cozo_string_free().
 *
 * On any non-OK status, cozo_last_error() returns a thread-local message.
 */
#ifndef COZO_H
#define COZO_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(COZO_BUILD_SHARED)
#    define COZO_API __declspec(dllexport)
#  else
#    define COZO_API __declspec(dllimport)
#  endif
#else
#  define COZO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define COZO_VERSION_STRING "0.1.0"

typedef enum cozo_status {
  COZO_OK = 0,
  COZO_ERR_CONFIG_INVALID = 1,
  COZO_ERR_WINDOW_SIZE_INVALID = 2,
  COZO_ERR_IO = 3,
  COZO_ERR_PARSE = 4,
  COZO_ERR_UNBALANCED_MARKERS = 5,
  COZO_ERR_UNKNOWN_ACTOR = 6,
  COZO_ERR_GOLD_EMPTY = 7,
  COZO_ERR_DENOMINATOR_ZERO = 8,
  COZO_ERR_NO_GOLD_ANAPHORS = 9,
  COZO_ERR_INVALID_ARGUMENT = 10,
  COZO_ERR_INTERNAL = 99
} cozo_status;

typedef struct cozo_engine cozo_engine;  /* configured zoning pipeline */
typedef struct cozo_result cozo_result;  /* outputs of one zoning run */
typedef struct cozo_report cozo_report;  /* evaluation report */

COZO_API const char* cozo_version(void);

/* Thread-local message for the most recent failure on this thread. */
COZO_API const char* cozo_last_error(void);

COZO_API void cozo_string_free(char* s);

/* --- engine ------------------------------------------------------------ */

/* actors_json: JSON array of {"name", "gender", "aliases"}.
 * lexicon_data: tagging lexicon file content, or NULL for the built-in.
 * window_size >= 1; carry_candidates and plural_lookback tune resolution. */
COZO_API cozo_status cozo_engine_new(const char* actors_json,
                                     const char* lexicon_data,
                                     int window_size,
                                     int carry_candidates,
                                     int plural_lookback,
                                     cozo_engine** out_engine);
COZO_API void cozo_engine_free(cozo_engine* engine);

/* Runs the full pipeline over a UTF-8 plain-text document. source_id labels
 * the mind-map root; NULL defaults to "stream". */
COZO_API cozo_status cozo_engine_zone(const cozo_engine* engine,
                                      const char* text,
                                      const char* source_id,
                                      cozo_result** out_result);

COZO_API void cozo_result_free(cozo_result* result);
COZO_API const char* cozo_result_zones_json(const cozo_result* result);
COZO_API const char* cozo_result_mindmap_dot(const cozo_result* result);
COZO_API const char* cozo_result_mindmap_json(const cozo_result* result);
COZO_API const char* cozo_result_resolutions_json(const cozo_result* result);
COZO_API int cozo_result_total_sentences(const cozo_result* result);
COZO_API int cozo_result_window_count(const cozo_result* result);

/* --- debug surfaces ---------------------------------------------------- */

/* One line per token: sentence<TAB>position<TAB>surface<TAB>tag. */
COZO_API cozo_status cozo_tag_text(const char* text, const char* lexicon_data,
                                   char** out_tsv);

/* One line per relation: sentence<TAB>pattern<TAB>subject<TAB>verb<TAB>object,
 * absent parts rendered as "-". */
COZO_API cozo_status cozo_parse_text(const char* text, const char* lexicon_data,
                                     char** out_tsv);

/* One line per pronoun of interest:
 * sentence<TAB>position<TAB>surface<TAB>category<TAB>status<TAB>actors. */
COZO_API cozo_status cozo_engine_resolve_tsv(const cozo_engine* engine,
                                             const char* text, char** out_tsv);

/* --- evaluation -------------------------------------------------------- */

/* gold_text: bracket-annotated text. pred_zones_json: zone output document.
 * gold_anaphors_json / resolutions_json: optional success-rate inputs.
 * total_from_text: optional plain text whose sentence count overrides the
 * gold-derived total. strict enables strict marker parsing. */
COZO_API cozo_status cozo_eval(const char* gold_text,
                               const char* pred_zones_json,
                               const char* gold_anaphors_json,
                               const char* resolutions_json,
                               const char* total_from_text,
                               int strict,
                               cozo_report** out_report);

COZO_API void cozo_report_free(cozo_report* report);
COZO_API const char* cozo_report_json(const cozo_report* report);
/* locale_comma renders decimal commas ("{0,78 ; 0}") in the table. */
COZO_API const char* cozo_report_table(const cozo_report* report, int locale_comma);

/* Validates an annotation file; summary lists actors, per-actor sentence
 * counts and the total. actors_json, when given, is the allow-list. */
COZO_API cozo_status cozo_gold_check(const char* gold_text,
                                     const char* actors_json,
                                     int strict,
                                     char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* COZO_H */
