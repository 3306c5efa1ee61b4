/* hmsing — exact characteristic-class and singularity-spectrum invariants
 * of projective hypersurfaces.
 *
 * All request/response payloads are JSON strings ("schema": 1).  Rationals
 * are encoded as "p/q" strings; no floating point appears anywhere.
 * Strings returned through char** out parameters are heap-allocated and
 * must be released with hmsing_string_free().
 */
#ifndef HMSING_H
#define HMSING_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    HMSING_OK = 0,
    HMSING_ERROR_INVALID_ARGUMENT = 1, /* bad input or domain violation */
    HMSING_ERROR_JSON = 2,             /* malformed request payload */
    HMSING_ERROR_VERIFY_FAILED = 3,    /* a verification suite reported failures */
    HMSING_ERROR_INTERNAL = 4
} hmsing_status;

const char* hmsing_version(void);

/* Message for the most recent failure on this thread; empty if none. */
const char* hmsing_last_error(void);

void hmsing_string_free(char* s);

/* Euler numbers and chi_y genera of smooth complete intersections.
 * Request: {"n": int, "degrees": [int], "chi_y": bool?} */
hmsing_status hmsing_chi(const char* request_json, char** out_json);

/* The g1^b1 - c g2^b2 hypersurface family: Euler-number deltas by both
 * the iterated-hyperplane and direct-section routes.
 * Request: {"n": int, "a1": int, "a2": int, "b1": int, "b2": int} */
hmsing_status hmsing_example_2_8(const char* request_json, char** out_json);

/* Localized Milnor classes from Euler-Milnor input data.
 * Request: {"n": int, "m": int, "r": int, "em_class": ["p/q", ...]} */
hmsing_status hmsing_milnor_class(const char* request_json, char** out_json);

/* Spectrum of a Brieskorn-Pham germ and/or an lct from resolution data.
 * Request: {"bp": [int]?, "cover": int?, "resolution": [[nu, mult]]?} */
hmsing_status hmsing_spectrum(const char* request_json, char** out_json);

/* Isolated-singularity hypersurface model: M_y, chi_y, M_0, Du Bois
 * verdict, jumping coefficients and lct per germ.
 * Request: {"n": int, "m": int, "germs": [[int]]} */
hmsing_status hmsing_hypersurface(const char* request_json, char** out_json);

/* Hyperplane arrangement: intersection lattice, Moebius data, Chern and
 * Hirzebruch classes, Euler characteristics.
 * Request: {"n": int, "forms": [[rational string]]} */
hmsing_status hmsing_arrangement(const char* request_json, char** out_json);

/* Run identity suites.  suite may be "all" or a single suite name;
 * params_json may be NULL or e.g. {"m_max": 12, "order": 30}.
 * Returns HMSING_ERROR_VERIFY_FAILED when any case fails (the report is
 * still written to out_json). */
hmsing_status hmsing_verify(const char* suite, const char* params_json, char** out_json);

/* Names of the available verification suites as a JSON array. */
hmsing_status hmsing_verify_suites(char** out_json);

/* Opaque singularity-spectrum handles. */
typedef struct hmsing_germ hmsing_germ;

/* Spectrum of z^m (m >= 2). */
hmsing_status hmsing_germ_power(int m, hmsing_germ** out);

/* Spectrum of x_1^{a_1} + ... + x_k^{a_k}, each a_i >= 2. */
hmsing_status hmsing_germ_brieskorn_pham(const int* exponents, size_t count,
                                         hmsing_germ** out);

/* Thom-Sebastiani join: spectra multiply, variable counts add. */
hmsing_status hmsing_germ_join(const hmsing_germ* a, const hmsing_germ* b,
                               hmsing_germ** out);

/* Full JSON report: exponents, Milnor number, symmetry, min/max exponent,
 * Du Bois classification, lct. */
hmsing_status hmsing_germ_describe(const hmsing_germ* s, char** out_json);

void hmsing_germ_free(hmsing_germ* s);

#ifdef __cplusplus
}
#endif

#endif /* HMSING_H */
