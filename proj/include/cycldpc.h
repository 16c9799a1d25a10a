/* C interface for the cyclic-LDPC construction toolkit.
 *
 * Codes live behind opaque handles; every function returns a status code and
 * reports failure detail through cycldpc_last_error_message(), which is
 * thread-local. Field elements cross the boundary in value form: the integer
 * whose bits are the element's coordinates in the polynomial basis
 * (1, beta, ..., beta^{m-1}), least significant bit first. 0 is the zero
 * element, 1 is the multiplicative identity.
 */
#ifndef CYCLDPC_H
#define CYCLDPC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef CYCLDPC_API
#if defined(_WIN32)
#define CYCLDPC_API
#elif defined(CYCLDPC_BUILD)
#define CYCLDPC_API __attribute__((visibility("default")))
#else
#define CYCLDPC_API
#endif
#endif

typedef enum cycldpc_status {
    CYCLDPC_OK = 0,
    CYCLDPC_EINVAL = 1,        /* malformed argument */
    CYCLDPC_UNSUPPORTED = 2,   /* m does not divide m', or field degree over the cap */
    CYCLDPC_INADMISSIBLE = 3,  /* seed coefficient cannot close its coset chain */
    CYCLDPC_DEGENERATE = 4,    /* support exponents share a factor with n */
    CYCLDPC_NOT_IDEMPOTENT = 5,
    CYCLDPC_IO = 6,
    CYCLDPC_INTERNAL = 7
} cycldpc_status;

typedef struct cycldpc_code cycldpc_code;

/* Construction from leader/seed pairs. seeds[i] is the beta-exponent of the
 * coefficient at leaders[i] (0 means coefficient 1). */
CYCLDPC_API cycldpc_status cycldpc_construct(int n, int m, const int* leaders, const int* seeds,
                                             size_t count, cycldpc_code** out);

/* Construction from the u(x) text form, e.g. "b23*x^5+1*x^7". A degenerate
 * support (exponents sharing a factor with n) is rejected unless
 * allow_degenerate is nonzero; the relaxed form still builds the parity-
 * check matrix and exports but describes a dimension-0 code. */
CYCLDPC_API cycldpc_status cycldpc_construct_from_text(int n, int m, const char* u_text,
                                                       int allow_degenerate, cycldpc_code** out);

CYCLDPC_API void cycldpc_code_free(cycldpc_code* code);

/* Scalar views. */
CYCLDPC_API int cycldpc_code_n(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_m(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_m_prime(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_r(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_l(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_k(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_bch_lower(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_dmin_upper(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_row_weight(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_orthogonal(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_difference_set(const cycldpc_code* code);
CYCLDPC_API int cycldpc_code_four_cycle_free(const cycldpc_code* code);

/* String views, owned by the handle and valid until cycldpc_code_free. */
CYCLDPC_API const char* cycldpc_code_u_text(const cycldpc_code* code);
CYCLDPC_API const char* cycldpc_code_p_text(const cycldpc_code* code);
CYCLDPC_API const char* cycldpc_code_girth_name(const cycldpc_code* code);

/* Exhaustive binary-image minimum distance; CYCLDPC_UNSUPPORTED when the
 * image dimension m*k exceeds cap (pass 0 for the default cap of 22). */
CYCLDPC_API cycldpc_status cycldpc_code_binary_dmin(const cycldpc_code* code, int cap, int* out);

/* message: k values; codeword: n values (message occupies the tail). */
CYCLDPC_API cycldpc_status cycldpc_encode(const cycldpc_code* code, const uint32_t* message,
                                          uint32_t* codeword);

/* word: n values; *out receives the number of unsatisfied checks. */
CYCLDPC_API cycldpc_status cycldpc_syndrome_weight(const cycldpc_code* code, const uint32_t* word,
                                                   int* out);

/* priors: n * 2^m doubles, position-major (priors[j*q + v] is the prior of
 * value v at position j). decision: n values. iterations/converged may be
 * NULL. max_iters <= 0 selects the default of 100. */
CYCLDPC_API cycldpc_status cycldpc_decode(const cycldpc_code* code, const double* priors,
                                          int max_iters, uint32_t* decision, int* iterations,
                                          int* converged);

typedef struct cycldpc_fer_point {
    double ebno_db;
    long long frames;
    long long frame_errors;
    double fer;
    double ber;
    double avg_iterations;
} cycldpc_fer_point;

/* Monte-Carlo FER/BER sweep; out must hold count points. threads = 0 uses
 * the hardware count; results do not depend on the thread count. */
CYCLDPC_API cycldpc_status cycldpc_simulate(const cycldpc_code* code, const double* ebno_db,
                                            size_t count, long long max_frames, long long max_errors,
                                            uint64_t seed, int max_iters, int threads,
                                            cycldpc_fer_point* out);

/* Design-space search. Emits one CSV line per record through the callback
 * (line excludes the newline). mode: 0 = full coefficient scan,
 * 1 = leader-canonical. */
typedef void (*cycldpc_search_cb)(const char* csv_line, void* user);
CYCLDPC_API cycldpc_status cycldpc_search(int n, int m, int w_max, int k_min, int d,
                                          int allow_4cycles, int mode, int threads,
                                          cycldpc_search_cb cb, void* user);
CYCLDPC_API const char* cycldpc_search_csv_header(void);

/* File exports. */
CYCLDPC_API cycldpc_status cycldpc_write_alist(const cycldpc_code* code, const char* path);
CYCLDPC_API cycldpc_status cycldpc_write_matrix_csv(const cycldpc_code* code, const char* path);

CYCLDPC_API const char* cycldpc_version(void);

/* Detail for the most recent failure on this thread; empty string if none. */
CYCLDPC_API const char* cycldpc_last_error_message(void);

#ifdef __cplusplus
}
#endif

#endif /* CYCLDPC_H */
