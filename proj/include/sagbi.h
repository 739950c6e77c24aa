/* C API for the sagbi shared library.
 *
 * All heavy objects live behind the opaque session handle. Functions
 * return a status code; on failure sagbi_last_error() holds a
 * thread-local message. Strings returned through `out` parameters are
 * heap-allocated and must be released with sagbi_string_free().
 */
#ifndef SAGBI_H
#define SAGBI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sagbi_session sagbi_session;

enum sagbi_status {
    SAGBI_OK = 0,
    SAGBI_ERR_USAGE = 1,
    SAGBI_ERR_PARSE = 2,
    SAGBI_ERR_CAP = 3,
    SAGBI_ERR_INTERNAL = 4
};

enum sagbi_format {
    SAGBI_FORMAT_TEXT = 0,
    SAGBI_FORMAT_JSON = 1
};

/* group_text: optional "n = <int>" line, '#' comments, one generator in
 * cycle notation per line or ';'-separated. order_spec: "lex", "grlex",
 * "grevlex", or "matrix" (then order_matrix_text must hold n lines of n
 * whitespace-separated rationals). n_override = 0 takes the degree from
 * the group text. cap <= 0 selects the default enumeration cap. */
int sagbi_session_create(const char* group_text, const char* order_spec,
                         const char* order_matrix_text, int n_override,
                         int64_t cap, sagbi_session** out);
void sagbi_session_destroy(sagbi_session* s);

int sagbi_group_order(const sagbi_session* s, int64_t* out);
int sagbi_degree(const sagbi_session* s, int* out);

/* Full analysis: group data, reflection certificate, finiteness verdict
 * with comprehensive basis or witness plus irreducible counts. */
int sagbi_analyze(sagbi_session* s, int max_degree, int format, char** out);

/* Minimal SAGBI basis elements up to max_degree, grouped by degree. */
int sagbi_basis(sagbi_session* s, int max_degree, int format, char** out);

/* Membership of a rational vector ("1,0,1/2") in the initial cone. */
int sagbi_member(sagbi_session* s, const char* vector_csv, int format, char** out);

/* Non-closedness witness; fails with SAGBI_ERR_USAGE when the group is
 * reflection-generated (the cone is closed, no witness exists). */
int sagbi_witness(sagbi_session* s, int format, char** out);

/* Irreducible lattice points of the half-plane monoid y > slope*x with
 * x <= x_max; slope is a rational string such as "3/2". */
int sagbi_sturm(const char* slope, int64_t x_max, int format, char** out);

const char* sagbi_last_error(void);
void sagbi_string_free(char* s);
const char* sagbi_version(void);

#ifdef __cplusplus
}
#endif

#endif
