/*
 * wigfluct C interface.
 *
 * Every function returns a wf_status. On failure a message describing the error
 * is available from wf_last_error() on the same thread until the next call.
 * Handles are opaque; release them with the matching *_free function. Strings
 * and arrays returned through a handle stay valid until that handle is freed.
 *
 * Orders (m_1, ..., m_r) are passed as an int array plus its length.
 */
#ifndef WIGFLUCT_H
#define WIGFLUCT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WF_API __declspec(dllexport)
#else
#define WF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wf_status {
    WF_OK = 0,
    WF_ERR_INVALID_ARGUMENT = 1,
    WF_ERR_CAPABILITY = 2, /* outside the supported range, e.g. oracle bound or r > 4 */
    WF_ERR_DOMAIN = 3,     /* mathematical precondition violated */
    WF_ERR_IO = 4,
    WF_ERR_INTERNAL = 5
} wf_status;

typedef struct wf_poly wf_poly;
typedef struct wf_table wf_table;
typedef struct wf_list wf_list;
typedef struct wf_law wf_law;

WF_API const char* wf_last_error(void);
WF_API const char* wf_version(void);

/* ---- polynomials in b2, b4, ... ---- */

WF_API wf_status wf_poly_parse(const char* text, wf_poly** out);
WF_API void wf_poly_free(wf_poly* p);
/* Canonical text, e.g. "8*b8 + 24*b4^2". */
WF_API const char* wf_poly_text(const wf_poly* p);
WF_API size_t wf_poly_term_count(const wf_poly* p);
/* Term i: coefficient as "num" or "num/den", indices sorted ascending. */
WF_API wf_status wf_poly_term(const wf_poly* p, size_t i, const char** coefficient, const int** indices,
                              size_t* degree);
/* Value with b2 = 1 and all other symbols 0, as "num" or "num/den". */
WF_API const char* wf_poly_gue_text(const wf_poly* p);
WF_API wf_status wf_poly_evaluate(const wf_poly* p, const int* indices, const double* values, size_t count,
                                  double* out);
WF_API int wf_poly_equal(const wf_poly* a, const wf_poly* b);

/* ---- moments and cumulants ---- */

WF_API wf_status wf_moment(const int* orders, size_t r, unsigned threads, wf_poly** out);
WF_API wf_status wf_moment_oracle(const int* orders, size_t r, int bound, unsigned threads, wf_poly** out);
WF_API wf_status wf_finite_n(const int* orders, size_t r, uint64_t n, int bound, wf_poly** out);

WF_API wf_status wf_cumulants(int max_r, int max_order, wf_table** out);
WF_API size_t wf_table_size(const wf_table* t);
/* Entries ordered by total order, then length, then lexicographically. */
WF_API wf_status wf_table_entry(const wf_table* t, size_t i, const int** orders, size_t* r, const wf_poly** value);
WF_API void wf_table_free(wf_table* t);

/* ---- enumeration ---- */

typedef enum wf_enum_kind {
    WF_ENUM_NC = 0,      /* permutations non-crossing relative to gamma (m <= 10) */
    WF_ENUM_NC2 = 1,     /* non-crossing pairings */
    WF_ENUM_PSNC2LF = 2, /* loop-free non-crossing partitioned pairings, "U sigma" */
    WF_ENUM_AN = 3       /* obstruction set A_n, uses n only (n <= 5) */
} wf_enum_kind;

WF_API wf_status wf_enumerate(wf_enum_kind kind, const int* orders, size_t r, int n, wf_list** out);
WF_API size_t wf_list_size(const wf_list* l);
WF_API const char* wf_list_item(const wf_list* l, size_t i);
WF_API void wf_list_free(wf_list* l);

/* ---- graph export ("digraph" header, then "label src trg" lines) ---- */

WF_API wf_status wf_dump_t_graph(const int* orders, size_t r, const char* path);
/* Gamma(U, sigma, gamma) for every loop-free non-crossing partitioned pairing. */
WF_API wf_status wf_dump_gamma_graphs(const int* orders, size_t r, const char* path);

/* ---- Monte Carlo ---- */

typedef struct wf_mc_result {
    double estimate;
    double standard_error;
    int batches;
} wf_mc_result;

/* "gue", "fixed-modulus:c" or "two-point:c1,c2,p" */
WF_API wf_status wf_law_parse(const char* spec, wf_law** out);
WF_API void wf_law_free(wf_law* law);
WF_API wf_status wf_law_beta(const wf_law* law, int n, double* out);
/* Substitutes the law's b2..b8 into p. */
WF_API wf_status wf_law_evaluate(const wf_law* law, const wf_poly* p, double* out);
WF_API wf_status wf_mc(const wf_law* law, int dim, const int* orders, size_t r, uint64_t samples, uint64_t seed,
                       unsigned threads, wf_mc_result* out);

#ifdef __cplusplus
}
#endif

#endif /* WIGFLUCT_H */
