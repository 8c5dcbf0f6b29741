/* C interface to the push-pull polytope library.
 *
 * Every call returns a pp_status. On failure, pp_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * pp_string_free. All JSON is UTF-8.
 */
#ifndef PUSHPULL_H
#define PUSHPULL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PP_BUILDING_LIBRARY)
#    define PP_API __declspec(dllexport)
#  else
#    define PP_API __declspec(dllimport)
#  endif
#else
#  define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_VERIFICATION_FAILED = 1, /* computation ran, some check failed; output still written */
  PP_INPUT_ERROR = 2,
  PP_INTERNAL = 3
} pp_status;

typedef struct pp_polytope pp_polytope;

PP_API const char* pp_version(void);
PP_API const char* pp_last_error(void);
PP_API void pp_string_free(char* s);

/* Polytope families */
PP_API pp_status pp_polytope_from_json(const char* json, pp_polytope** out);
PP_API void pp_polytope_free(pp_polytope* p);
PP_API pp_status pp_polytope_dim(const pp_polytope* p, size_t* out);
PP_API pp_status pp_polytope_param_count(const pp_polytope* p, size_t* out);
/* Drops inequalities redundant at the reference and writes the family with its vertices. */
PP_API pp_status pp_polytope_canonical_json(const pp_polytope* p, char** out_json);
/* Volume polynomial over the family's parameters, e.g. "a * b + 1/2 * b^2". */
PP_API pp_status pp_polytope_volume(const pp_polytope* p, char** out_text);
/* {"polytope", "params", "volume", "at_reference"} */
PP_API pp_status pp_polytope_volume_json(const pp_polytope* p, char** out_json);
/* Volume at the reference as "p/q". */
PP_API pp_status pp_polytope_volume_at_reference(const pp_polytope* p, char** out_text);
/* Ring of the volume polynomial, restricted to the parameters it uses. */
PP_API pp_status pp_polytope_ring_json(const pp_polytope* p, int max_degree, char** out_json);
/* Writes hilbert[0..top] into `out` (capacity `cap`) and the count into `len`. */
PP_API pp_status pp_polytope_hilbert(const pp_polytope* p, size_t* out, size_t cap, size_t* len);

/* Reports. Each takes JSON input and writes a JSON report. PP_VERIFICATION_FAILED
 * still writes the report, which then carries the failing checks. */
PP_API pp_status pp_pushpull_verify(const char* spec_json, int fail_fast, char** out_json);
PP_API pp_status pp_gk_report(const char* input_json, unsigned samples, unsigned long long seed, char** out_json);
PP_API pp_status pp_fflv_report(const char* input_json, char** out_json);
PP_API pp_status pp_tower_report(unsigned samples, unsigned long long seed, char** out_json);
/* {"figures": [{"name", "files": {name: contents}, "checks": {...}}], "polytope": ...} */
PP_API pp_status pp_figures(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PUSHPULL_H */
