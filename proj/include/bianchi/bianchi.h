#ifndef BIANCHI_H
#define BIANCHI_H

#include <stddef.h>

#if defined(_WIN32)
#define BIANCHI_API __declspec(dllexport)
#else
#define BIANCHI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bianchi_ring bianchi_ring;

typedef enum {
    BIANCHI_OK = 0,
    BIANCHI_CHECK_FAILED = 1,     /* computed, but a reported check is false */
    BIANCHI_INVALID_D = 2,
    BIANCHI_PARSE_ERROR = 3,
    BIANCHI_NOT_DEFINITE = 4,
    BIANCHI_VIOLATION = 5,        /* an inequality that holds by construction failed */
    BIANCHI_INVALID_ARGUMENT = 6,
    BIANCHI_INTERNAL = 7
} bianchi_status;

/* Strings returned through char** are owned by the caller: release them with
 * bianchi_free. On failure the out-pointers are left NULL and
 * bianchi_last_error() describes the problem (per thread). */

BIANCHI_API bianchi_status bianchi_ring_create(long long d, bianchi_ring** out);
BIANCHI_API void bianchi_ring_destroy(bianchi_ring* ring);
BIANCHI_API long long bianchi_ring_d(const bianchi_ring* ring);

/* z = A + B sqrt(-d). height is s = t^2, or t itself when height_is_t != 0.
 * Returns BIANCHI_CHECK_FAILED (with the certificate) when bound_ok is false. */
BIANCHI_API bianchi_status bianchi_reduce_point(const bianchi_ring* ring, const char* A, const char* B,
                                                const char* height, int height_is_t, char** certificate_json);

BIANCHI_API bianchi_status bianchi_membership(const bianchi_ring* ring, const char* A, const char* B,
                                              const char* height, int height_is_t, char** json);

/* f = a|X|^2 + 2 Re(b X conj(Z)) + dd|Z|^2 with b = b_a + b_b omega. */
BIANCHI_API bianchi_status bianchi_reduce_form(const bianchi_ring* ring, long long a, long long b_a, long long b_b,
                                               long long dd, char** json);

/* Counts for every T^2 in t_sq. csv gets "T_sq,N,N_tilde,X" rows (N, N_tilde
 * doubled when sl_counts != 0); report gets the fit and per-row sandwich checks.
 * Either out-pointer may be NULL. Returns BIANCHI_VIOLATION if a sandwich
 * inequality fails. */
BIANCHI_API bianchi_status bianchi_count(const bianchi_ring* ring, const long long* t_sq, size_t n, unsigned workers,
                                         int sl_counts, char** csv, char** report_json);

BIANCHI_API bianchi_status bianchi_sharpness(const bianchi_ring* ring, long long n_max, char** csv);

/* Returns BIANCHI_CHECK_FAILED when the certificate does not verify. */
BIANCHI_API bianchi_status bianchi_verify_certificate(const char* certificate_json, char** report_json);

BIANCHI_API const char* bianchi_last_error(void);
BIANCHI_API void bianchi_free(char* p);
BIANCHI_API const char* bianchi_version(void);

#ifdef __cplusplus
}
#endif

#endif
