/* C interface to the homtest core. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every call returns
 * an ht_status; on failure ht_last_error() describes the problem (per
 * thread, valid until the next failing call on that thread). Strings
 * returned through char** are heap-allocated JSON and must be released with
 * ht_string_free. */
#ifndef HOMTEST_H
#define HOMTEST_H

#include <stddef.h>
#include <stdint.h>

#if defined(HOMTEST_BUILDING_LIBRARY)
#define HT_API __attribute__((visibility("default")))
#else
#define HT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ht_status {
  HT_OK = 0,
  HT_ERR_INVALID_ARGUMENT = 1,
  HT_ERR_IO = 2,
  HT_ERR_PARSE = 3,
  HT_ERR_LIMIT = 4,
  HT_ERR_NUMERIC = 5,
  HT_ERR_MISMATCH = 6,
  HT_ERR_INTERNAL = 99
} ht_status;

typedef enum ht_irrep_method {
  HT_IRREPS_AUTO = 0,
  HT_IRREPS_CLOSED = 1,
  HT_IRREPS_NUMERIC = 2
} ht_irrep_method;

typedef struct ht_group ht_group;
typedef struct ht_irreps ht_irreps;
typedef struct ht_fn ht_fn;
typedef struct ht_set ht_set;

HT_API const char* ht_version(void);
HT_API const char* ht_last_error(void);
HT_API void ht_string_free(char* s);
/* Content digest (SHA-256 prefix, 16 hex digits) of the canonical form of a
 * JSON document. */
HT_API ht_status ht_digest_json(const char* text, char** out);

/* ---- groups ---------------------------------------------------------- */

/* spec: catalog expression such as "direct_product(cyclic(2),symmetric(3))".
 * order_cap <= 0 selects the default cap (5040). */
HT_API ht_status ht_group_build(const char* spec, int order_cap, ht_group** out);
HT_API ht_status ht_group_load(const char* path, ht_group** out);
HT_API ht_status ht_group_from_json(const char* text, ht_group** out);
HT_API ht_status ht_group_order(const ht_group* g, int* n);
HT_API ht_status ht_group_to_json(const ht_group* g, char** out);
/* exhaustive != 0 checks every triple; otherwise `trials` sampled triples. */
HT_API ht_status ht_group_verify(const ht_group* g, int exhaustive, uint64_t trials, uint64_t seed, int* all_pass,
                                 char** report);
HT_API void ht_group_free(ht_group* g);

/* ---- irreducible representations ------------------------------------ */

HT_API ht_status ht_irreps_compute(const ht_group* g, ht_irrep_method method, uint64_t seed, double tol,
                                   ht_irreps** out);
HT_API ht_status ht_irreps_load(const ht_group* g, const char* path, ht_irreps** out);
HT_API ht_status ht_irreps_save(const ht_irreps* s, const char* path, int binary_blob);
HT_API ht_status ht_irreps_count(const ht_irreps* s, int* count);
/* Writes min(count, capacity) dimensions. */
HT_API ht_status ht_irreps_dims(const ht_irreps* s, int* dims, size_t capacity);
HT_API ht_status ht_irreps_quasirandomness(const ht_irreps* s, int* D);
HT_API ht_status ht_irreps_verify(const ht_irreps* s, double tol, int* pass, char** report);
HT_API void ht_irreps_free(ht_irreps* s);

/* ---- matrix-valued functions ---------------------------------------- */

/* params is a JSON object with a "kind" field:
 *   {"kind":"hom","irreps":[i,...],"t":T}            needs s
 *   {"kind":"random","t":T,"seed":S}                 needs g (Haar unitary values)
 *   {"kind":"random_matrix","t":T,"seed":S}          needs g (Gaussian values)
 *   {"kind":"perturbed","base":{...},"theta":A,"seed":S}
 *   {"kind":"clipped","irrep":r,"i":i,"j":j}         needs s
 *   {"kind":"coppersmith","k":K}
 *   {"kind":"constant","value":[[[re,im],...],...]}  needs g
 * g may be NULL when s is given. */
HT_API ht_status ht_fn_make(const ht_group* g, const ht_irreps* s, const char* params, ht_fn** out);
HT_API ht_status ht_fn_perturb(const ht_fn* base, double theta, uint64_t seed, ht_fn** out);
/* g may be NULL: the group is rebuilt from the name stored in the file. */
HT_API ht_status ht_fn_load(const char* path, const ht_group* g, ht_fn** out);
HT_API ht_status ht_fn_from_json(const char* text, const ht_group* g, ht_fn** out);
HT_API ht_status ht_fn_to_json(const ht_fn* f, char** out);
HT_API ht_status ht_fn_info(const ht_fn* f, int* n, int* t, int* unitary);
HT_API ht_status ht_fn_digest(const ht_fn* f, char** out);
/* Copies the group the function is defined on. */
HT_API ht_status ht_fn_group(const ht_fn* f, ht_group** out);
/* Per-irrep Fourier mass table. */
HT_API ht_status ht_fn_spectrum(const ht_fn* f, const ht_irreps* s, char** out);
HT_API void ht_fn_free(ht_fn* f);

/* ---- biased sets ---------------------------------------------------- */

HT_API ht_status ht_set_from_elements(const ht_group* g, const int* elements, size_t count, ht_set** out);
HT_API ht_status ht_set_full(const ht_group* g, ht_set** out);
HT_API ht_status ht_set_load(const char* path, const ht_group* g, ht_set** out);
HT_API ht_status ht_set_certify(ht_set* set, const ht_irreps* s, int threads, double* eps);
/* Alon-Roichman style sampling; c <= 0 selects the default constant 8. */
HT_API ht_status ht_set_sample(const ht_irreps* s, double eps_target, uint64_t seed, int max_retries, double c,
                               int threads, ht_set** out, int* success);
/* In-place greedy improvement; trace receives {"trace":[...],...}. */
HT_API ht_status ht_set_improve(ht_set* set, const ht_irreps* s, int budget, uint64_t seed, int threads,
                                char** trace);
HT_API ht_status ht_set_size(const ht_set* set, size_t* size);
/* Negative when uncertified. */
HT_API ht_status ht_set_epsilon(const ht_set* set, double* eps);
HT_API ht_status ht_set_to_json(const ht_set* set, char** out);
HT_API void ht_set_free(ht_set* set);

/* ---- tests and checks ----------------------------------------------- */

/* mode: "exact" or "sampled:<trials>". */
HT_API ht_status ht_blr_run(const ht_fn* f, const ht_set* set, double gamma, const char* mode, uint64_t seed,
                            int threads, char** report);

/* claims: "all" or a comma-separated list of claim ids. g may be NULL.
 * D <= 0 selects the per-claim default. exit_code follows the CLI
 * convention (0 pass, 1 failure, 3 inconclusive only). */
HT_API ht_status ht_verify(const char* claims, const ht_fn* f, const ht_fn* g, const ht_set* set,
                           const ht_irreps* s, double gamma, int D, double tol, int threads, char** report,
                           int* exit_code);
HT_API ht_status ht_gh_search(const ht_fn* f, const ht_irreps* s, double eta, char** report);

#ifdef __cplusplus
}
#endif

#endif /* HOMTEST_H */
