/* C interface to the exceptia library.
 *
 * Every function returns an exc_status. On failure, exc_last_error() gives a
 * message for the calling thread. Strings returned through char** outputs are
 * owned by the caller and released with exc_string_free; handles are released
 * with their *_free function. Big integers and rationals cross the boundary as
 * decimal strings ("p" or "p/q"). */
#ifndef EXCEPTIA_H
#define EXCEPTIA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EXC_API __declspec(dllexport)
#else
#define EXC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exc_status {
  EXC_OK = 0,
  EXC_ERR_DIVISION_BY_ZERO = 1,
  EXC_ERR_DOMAIN = 2,
  EXC_ERR_MISMATCH = 3,
  EXC_ERR_PARSE = 4,
  EXC_ERR_UNSUPPORTED = 5,
  EXC_ERR_INTERNAL = 6,
  EXC_ERR_IO = 7,
  EXC_ERR_NULL_ARGUMENT = 8,
  EXC_ERR_BUFFER_TOO_SMALL = 9
} exc_status;

typedef struct exc_hyper exc_hyper;          /* Cayley-Dickson number over Q(sqrt5) */
typedef struct exc_clifford exc_clifford;    /* multivector in C_{p,q} */
typedef struct exc_lattice exc_lattice;
typedef struct exc_series exc_series;        /* truncated integer Laurent series */

EXC_API const char* exc_version(void);
EXC_API const char* exc_last_error(void);
EXC_API void exc_string_free(char* s);

/* --- hypercomplex --------------------------------------------------------- */

EXC_API exc_status exc_hyper_parse(const char* text, int level, exc_hyper** out);
EXC_API void exc_hyper_free(exc_hyper* x);
EXC_API int exc_hyper_level(const exc_hyper* x);
EXC_API int exc_hyper_is_zero(const exc_hyper* x);
EXC_API exc_status exc_hyper_str(const exc_hyper* x, char** out);
EXC_API exc_status exc_hyper_coeff(const exc_hyper* x, size_t index, char** out);
EXC_API exc_status exc_hyper_mul(const exc_hyper* a, const exc_hyper* b, exc_hyper** out);
/* Level-3 product through the Fano-plane table. */
EXC_API exc_status exc_hyper_fano_mul(const exc_hyper* a, const exc_hyper* b, exc_hyper** out);
EXC_API exc_status exc_hyper_conj(const exc_hyper* x, exc_hyper** out);
EXC_API exc_status exc_hyper_norm(const exc_hyper* x, char** out);
EXC_API exc_status exc_hyper_inv(const exc_hyper* x, exc_hyper** out);
/* b x c = (b a)(a* c) on octonions. */
EXC_API exc_status exc_hyper_xprod(const exc_hyper* a, const exc_hyper* b, const exc_hyper* c,
                                   exc_hyper** out);
/* perm is an image string such as "jki"; *even receives 1 for even permutations. */
EXC_API exc_status exc_hyper_permute(const char* perm, const exc_hyper* q, exc_hyper** out,
                                     int* even);
/* e_i e_j = sign * e_index for 1 <= i, j <= 7 (index 0 means the real unit). */
EXC_API exc_status exc_fano_mul(int i, int j, int* index, int* sign);

/* --- Clifford algebras ---------------------------------------------------- */

typedef struct exc_algebra_class {
  int ring; /* 1, 2, 4 for R, C, H */
  uint64_t size;
  int summands;
} exc_algebra_class;

typedef struct exc_spinor_profile {
  int n;
  uint64_t dirac_complex_dim;
  int majorana;
  int weyl;
  int majorana_weyl;
  uint64_t minimal_real_components;
  uint64_t real_rep_cn1; /* smallest real representation of C_{n-1,1} */
  uint64_t real_rep_c1n; /* and of C_{1,n-1} */
} exc_spinor_profile;

EXC_API exc_status exc_clifford_parse(int p, int q, const char* text, exc_clifford** out);
EXC_API void exc_clifford_free(exc_clifford* x);
EXC_API exc_status exc_clifford_str(const exc_clifford* x, char** out);
EXC_API exc_status exc_clifford_mul(const exc_clifford* a, const exc_clifford* b, exc_clifford** out);
EXC_API exc_status exc_clifford_classify(int p, int q, exc_algebra_class* out, char** name);
EXC_API exc_status exc_clifford_gamma_square(int p, int q, int* out);
EXC_API exc_status exc_spinor_taxonomy(int n, exc_spinor_profile* out);
/* Writes up to cap dimensions; *count receives the total. */
EXC_API exc_status exc_super_ym_dims(int lo, int hi, int* dims, size_t cap, size_t* count);

/* --- lattices -------------------------------------------------------------- */

typedef struct exc_lattice_summary {
  size_t rank;
  size_t ambient_dim;
  int lorentzian;
  int integral;
  int even;
  int unimodular;
} exc_lattice_summary;

EXC_API exc_status exc_lattice_named(const char* name, exc_lattice** out);
EXC_API exc_status exc_lattice_read_text(const char* text, exc_lattice** out);
EXC_API exc_status exc_lattice_write_text(const exc_lattice* l, char** out);
EXC_API void exc_lattice_free(exc_lattice* l);
EXC_API exc_status exc_lattice_summary_of(const exc_lattice* l, exc_lattice_summary* out);
EXC_API exc_status exc_lattice_determinant(const exc_lattice* l, char** out);
EXC_API exc_status exc_lattice_minimal_norm(const exc_lattice* l, char** out);
/* threads == 0 uses EXCEPTIA_THREADS or the hardware count. Writes up to cap
 * (norm, count) pairs in increasing norm order; *count receives the total. */
EXC_API exc_status exc_lattice_short_vectors(const exc_lattice* l, long max_norm, unsigned threads,
                                             long* norms, uint64_t* counts, size_t cap,
                                             size_t* count);
/* theta as a series in q: coefficient m counts vectors of norm 2m. */
EXC_API exc_status exc_lattice_theta(const exc_lattice* l, int order, unsigned threads,
                                     exc_series** out);
EXC_API exc_status exc_lattice_dual(const exc_lattice* l, exc_lattice** out);
/* delta as "p/q"; NULL selects 99/100. */
EXC_API exc_status exc_lattice_lll(const exc_lattice* l, const char* delta, exc_lattice** out);
EXC_API exc_status exc_lattice_same(const exc_lattice* a, const exc_lattice* b, int* out);
EXC_API exc_status exc_lattice_direct_sum(const exc_lattice* a, const exc_lattice* b,
                                          exc_lattice** out);

typedef struct exc_icosian_report {
  int even_unimodular;
  int left_congruence;
  int golden_trace;
} exc_icosian_report;

/* left: congruence u - v in h*I instead of I*h; golden_trace: pair R^8
 * coordinates by the golden trace form instead of the plain dot product.
 * *scale and *raw_min receive rationals as strings (either may be NULL). */
EXC_API exc_status exc_lattice_leech_icosian(int left, int golden_trace, exc_lattice** out,
                                             exc_icosian_report* report, char** scale,
                                             char** raw_min);

/* Whitespace-separated rational coordinates. */
EXC_API exc_status exc_weyl_vector(int dim, char** out);
EXC_API exc_status exc_ii_member(const char* coords, int* out);
EXC_API exc_status exc_minkowski_dot(const char* u, const char* v, char** out);
EXC_API exc_status exc_is_fundamental_root(const char* coords, int dim, int* out);

/* --- q-series -------------------------------------------------------------- */

EXC_API void exc_series_free(exc_series* s);
EXC_API int exc_series_low(const exc_series* s);
EXC_API int exc_series_high(const exc_series* s);
EXC_API exc_status exc_series_coeff(const exc_series* s, int exponent, char** out);
EXC_API exc_status exc_series_str(const exc_series* s, char** out);
EXC_API exc_status exc_eta24(int n, exc_series** out);
EXC_API exc_status exc_j_from_lattice(const exc_lattice* l, int n, unsigned threads,
                                      exc_series** out);

/* --- identities ------------------------------------------------------------ */

EXC_API exc_status exc_bbp_pi_hex(uint64_t start, uint64_t count, char** out);
EXC_API exc_status exc_square_pyramid(const char* n, char** out);
EXC_API exc_status exc_cannonball_search(uint64_t limit, uint64_t* values, size_t cap,
                                         size_t* count);
/* spins: whitespace-separated half-integers such as "1/2 1 3/2". */
EXC_API exc_status exc_spin_area(const char* spins, char** exact, double* approx);
/* Two blocks of "x y z" lines separated by a blank line. */
EXC_API exc_status exc_linking_number_text(const char* text, int* out);
/* Loops as flat arrays of 3*n coordinates. */
EXC_API exc_status exc_linking_number(const long* g, size_t g_vertices, const long* h,
                                      size_t h_vertices, int* out);

#ifdef __cplusplus
}
#endif

#endif /* EXCEPTIA_H */
