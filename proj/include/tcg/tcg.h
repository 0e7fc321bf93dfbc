#ifndef TCG_TCG_H
#define TCG_TCG_H

/*
 * C interface to the twisted conjugacy growth library.
 *
 * Objects are opaque handles created by *_load and released by *_free.
 * Every call returns a tcg_status; on failure tcg_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Reports are returned as NUL-terminated JSON strings owned by the caller and
 * released with tcg_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define TCG_API __declspec(dllexport)
#else
#  define TCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tcg_group tcg_group;
typedef struct tcg_endo tcg_endo;
typedef struct tcg_genset tcg_genset;

typedef enum tcg_status {
  TCG_OK = 0,
  TCG_INVALID = 1,        /* input parsed but failed validation */
  TCG_PARSE_ERROR = 2,    /* malformed JSON or element literal */
  TCG_RESOURCE_LIMIT = 3, /* enumeration budget exceeded */
  TCG_BAD_ARGUMENT = 4,   /* null pointer, k = 0, bad option */
  TCG_INTERNAL_ERROR = 5
} tcg_status;

typedef enum tcg_series_kind {
  TCG_SERIES_BALL = 0,
  TCG_SERIES_TWISTED_CLASSES = 1,
  TCG_SERIES_CLASS = 2
} tcg_series_kind;

typedef struct tcg_growth_options {
  tcg_series_kind kind;
  const char* g0;        /* element literal, required for TCG_SERIES_CLASS */
  size_t r_max;
  int64_t window_lo;     /* 0 selects the default window [r_max/3, r_max] */
  int64_t window_hi;
  double tolerance;      /* <= 0 selects 0.2 */
  size_t budget;         /* 0 selects the default element budget */
} tcg_growth_options;

typedef struct tcg_verify_options {
  size_t r_max;
  uint64_t k_max;
  double tolerance;          /* <= 0 selects 0.2 */
  double quotient_tolerance; /* <= 0 selects 0.25 */
  size_t budget;             /* 0 selects the default element budget */
  int include_timing;
} tcg_verify_options;

TCG_API const char* tcg_version(void);
TCG_API const char* tcg_last_error(void);
TCG_API void tcg_string_free(char* s);

/* Parses the group document; does not validate (see tcg_validate). */
TCG_API tcg_status tcg_group_load(const char* json_text, tcg_group** out);
TCG_API void tcg_group_free(tcg_group* group);
TCG_API tcg_status tcg_group_to_json(const tcg_group* group, char** out_json);

TCG_API tcg_status tcg_endo_load(const tcg_group* group, const char* json_text, tcg_endo** out);
TCG_API void tcg_endo_free(tcg_endo* endo);

TCG_API tcg_status tcg_genset_load(const tcg_group* group, const char* json_text, tcg_genset** out);
TCG_API void tcg_genset_free(tcg_genset* gens);

/* Validates the group and, when endo is non-null, the endomorphism.
 * Returns TCG_OK or TCG_INVALID; the report is written in both cases. */
TCG_API tcg_status tcg_validate(const tcg_group* group, const tcg_endo* endo, char** out_json);

/* The calls below return TCG_INVALID when group or endomorphism fail validation. */
TCG_API tcg_status tcg_predict(const tcg_group* group, const tcg_endo* endo, char** out_json);
TCG_API tcg_status tcg_canonical_form(const tcg_group* group, const tcg_endo* endo, const char* element,
                                      char** out_json);
TCG_API tcg_status tcg_conjtest(const tcg_group* group, const tcg_endo* endo, const char* g, const char* h,
                                int* out_conjugate, char** out_json);
TCG_API tcg_status tcg_reidemeister(const tcg_group* group, const tcg_endo* endo, char** out_json);

/* endo may be null for TCG_SERIES_BALL. */
TCG_API tcg_status tcg_growth(const tcg_group* group, const tcg_endo* endo, const tcg_genset* gens,
                              const tcg_growth_options* options, char** out_json);
TCG_API tcg_status tcg_quotient(const tcg_group* group, const tcg_endo* endo, uint64_t k_max, int brute,
                                char** out_json);
TCG_API tcg_status tcg_check_generates(const tcg_group* group, const tcg_genset* gens, size_t budget,
                                       int* out_verified);

/* Full bundle; *out_pass is 1 iff every slope verdict passes. */
TCG_API tcg_status tcg_verify(const tcg_group* group, const tcg_endo* endo, const tcg_genset* gens,
                              const tcg_verify_options* options, int* out_pass, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TCG_TCG_H */
