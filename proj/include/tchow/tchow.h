/* SPDX-License-Identifier: Apache-2.0 */

/* Chow groups of complexity-one T-varieties: C interface of libtchow.
 *
 * Handles are opaque. Every call returns a tchow_status; on failure the
 * message is available from tchow_last_error() on the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with tchow_string_free. Result strings are JSON documents. */

#ifndef TCHOW_TCHOW_H
#define TCHOW_TCHOW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TCHOW_API __attribute__((visibility("default")))
#else
#define TCHOW_API
#endif

typedef enum tchow_status {
  TCHOW_OK = 0,
  TCHOW_INVALID_ARGUMENT = 1,
  TCHOW_NOT_CONTAINED,
  TCHOW_RANK_MISMATCH,
  TCHOW_EMPTY_POLYHEDRON,
  TCHOW_NON_FAN_TAILS,
  TCHOW_INVALID_COMPLEX,
  TCHOW_NON_UNIQUE_FACE,
  TCHOW_NOT_MARKED,
  TCHOW_OUT_OF_RANGE,
  TCHOW_NON_INTEGRAL_REDIRECT,
  TCHOW_INCOMPLETE_FAN,
  TCHOW_NON_SMOOTH_BASE,
  TCHOW_INCONSISTENT_FILTRATIONS,
  TCHOW_UNKNOWN_FIXTURE,
  TCHOW_PARSE_ERROR,
  TCHOW_INTERNAL_ERROR = 100
} tchow_status;

typedef struct tchow_divisor tchow_divisor; /* marked fansy divisor */
typedef struct tchow_fan tchow_fan;         /* complete toric fan */

TCHOW_API const char* tchow_version(void);
TCHOW_API const char* tchow_status_name(tchow_status s);
/* Message of the last failed call on this thread; "" when none. */
TCHOW_API const char* tchow_last_error(void);
TCHOW_API void tchow_string_free(char* s);

/* Input document: explicit data or a downgrade/bundle stanza. */
TCHOW_API tchow_status tchow_divisor_parse(const char* json, tchow_divisor** out);
TCHOW_API tchow_status tchow_divisor_fixture(const char* name, tchow_divisor** out);
TCHOW_API void tchow_divisor_free(tchow_divisor* x);
TCHOW_API tchow_status tchow_divisor_rank(const tchow_divisor* x, int* rank);
/* Canonical explicit document. */
TCHOW_API tchow_status tchow_divisor_to_json(const tchow_divisor* x, char** json);
/* Space-separated fixture names. */
TCHOW_API const char* tchow_fixture_names(void);

TCHOW_API tchow_status tchow_validate(const tchow_divisor* x, int* valid, char** report);
TCHOW_API tchow_status tchow_counts(const tchow_divisor* x, int k, size_t* r, size_t* v, size_t* t);
TCHOW_API tchow_status tchow_chow(const tchow_divisor* x, int k, char** json);
TCHOW_API tchow_status tchow_chow_smith(const tchow_divisor* x, int k, size_t* free_rank, size_t* torsion_count);
TCHOW_API tchow_status tchow_eff(const tchow_divisor* x, int k, char** json);

/* Bare fan {rank, rays, cones}, a {fan: ...} wrapper or a downgrade stanza. */
TCHOW_API tchow_status tchow_fan_parse(const char* json, tchow_fan** out);
/* The toric fans behind the p2_E and p2_F fixtures. */
TCHOW_API tchow_status tchow_fan_fixture(const char* name, tchow_fan** out);
TCHOW_API void tchow_fan_free(tchow_fan* f);
TCHOW_API tchow_status tchow_fan_rank(const tchow_fan* f, int* rank);
TCHOW_API tchow_status tchow_fan_to_json(const tchow_fan* f, char** json);
TCHOW_API tchow_status tchow_fan_downgrade(const tchow_fan* f, tchow_divisor** out);
TCHOW_API tchow_status tchow_oracle(const tchow_fan* f, int k, char** json);
TCHOW_API tchow_status tchow_crosscheck(const tchow_fan* f, int* agree, char** json);

#ifdef __cplusplus
}
#endif

#endif
