/* C interface to the linkage library.
 *
 * Every object is an opaque handle released by its *_free function. Strings
 * returned by accessors are owned by the handle they came from and live as
 * long as it does. Functions returning lk_status set a thread-local message
 * readable through lk_last_error() on failure.
 *
 * Levels are "p/q", "generic-neg" or "generic-pos"; weights are comma
 * separated rationals in fundamental-weight coordinates ("0" is the zero
 * weight at any rank). Rationals come back as "p" or "p/q" strings.
 */
#ifndef LINKAGE_LINKAGE_H
#define LINKAGE_LINKAGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(LINKAGE_BUILDING_LIBRARY)
#define LK_API __attribute__((visibility("default")))
#else
#define LK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lk_status {
  LK_OK = 0,
  LK_ERR_INVALID = 1,      /* bad type, rank, level, weight or argument */
  LK_ERR_CRITICAL = 2,     /* critical level */
  LK_ERR_INCONCLUSIVE = 3, /* search window too small */
  LK_ERR_INTERNAL = 4      /* an internal consistency check failed */
} lk_status;

typedef struct lk_root_datum lk_root_datum;
typedef struct lk_block lk_block;
typedef struct lk_dual_verma lk_dual_verma;
typedef struct lk_virasoro lk_virasoro;
typedef struct lk_string lk_string;

LK_API const char* lk_version(void);
LK_API const char* lk_last_error(void);
LK_API const char* lk_status_name(lk_status status);

/* ---- strings */
LK_API const char* lk_string_get(const lk_string* s);
LK_API void lk_string_free(lk_string* s);

/* ---- levels */
LK_API lk_status lk_level_canonical(const char* level, lk_string** out);
/* k -> -k - 2 h^vee; the generic kinds swap. */
LK_API lk_status lk_level_flip(const lk_root_datum* d, const char* level, lk_string** out);

/* ---- root data */
LK_API lk_status lk_root_datum_create(char type, int rank, lk_root_datum** out);
LK_API void lk_root_datum_free(lk_root_datum* d);
LK_API const char* lk_root_datum_label(const lk_root_datum* d);
LK_API int lk_root_datum_rank(const lk_root_datum* d);
LK_API int lk_root_datum_h_vee(const lk_root_datum* d);
LK_API int lk_root_datum_dim_g(const lk_root_datum* d);
LK_API int lk_root_datum_dim_n(const lk_root_datum* d);
LK_API uint64_t lk_root_datum_weyl_order(const lk_root_datum* d);
LK_API size_t lk_root_datum_num_positive_roots(const lk_root_datum* d);
/* Simple-root coefficients of positive root a, comma separated. */
LK_API const char* lk_root_datum_positive_root(const lk_root_datum* d, size_t a);
LK_API const char* lk_root_datum_rho_rho_check(const lk_root_datum* d);
LK_API const char* lk_root_datum_kappa_rho_check(const lk_root_datum* d);
LK_API const char* lk_root_datum_c_minus_tate(const lk_root_datum* d);

/* ---- weight-class utilities */
LK_API lk_status lk_weight_normal_form(const lk_root_datum* d, const char* weight, lk_string** out);
LK_API lk_status lk_weight_zhu_involution(const lk_root_datum* d, const char* weight, lk_string** out);
LK_API lk_status lk_weight_ds_survives(const lk_root_datum* d, const char* weight, int* out);
LK_API lk_status lk_weight_antidominant_count(const lk_root_datum* d, const char* weight, uint64_t* out);
/* The dot action of the word (letters over the finite simple reflections). */
LK_API lk_status lk_weight_finite_dot_act(const lk_root_datum* d, const int* word, size_t len, const char* weight,
                                          lk_string** out);

/* ---- blocks
 * search_bound < 0 selects the certified window automatically. */
LK_API lk_status lk_block_create(const lk_root_datum* d, const char* level, const char* weight, int max_len,
                                 int64_t search_bound, lk_block** out);
/* One-sided cosets W_lambda / W°_lambda, for Kac-Moody Vermas. */
LK_API lk_status lk_block_create_kac_moody(const lk_root_datum* d, const char* level, const char* weight,
                                           int max_len, lk_block** out);
LK_API void lk_block_free(lk_block* b);

LK_API const char* lk_block_level(const lk_block* b);
LK_API int lk_block_is_positive_level(const lk_block* b);
LK_API int lk_block_is_two_sided(const lk_block* b);
LK_API int lk_block_truncation_length(const lk_block* b);
LK_API int64_t lk_block_search_bound(const lk_block* b);
LK_API const char* lk_block_lift(const lk_block* b);
LK_API const char* lk_block_lift_normal_form(const lk_block* b);
/* The normalized weight the integral system was built at. */
LK_API const char* lk_block_base_weight(const lk_block* b);

LK_API size_t lk_block_num_generators(const lk_block* b);
/* Finite part of generator i as simple-coroot coefficients, and its n. */
LK_API const char* lk_block_generator_coroot(const lk_block* b, size_t i);
LK_API int64_t lk_block_generator_degree(const lk_block* b, size_t i);
LK_API int lk_block_generator_in_j_finite(const lk_block* b, size_t i);
LK_API int lk_block_generator_in_j_stab(const lk_block* b, size_t i);
LK_API int64_t lk_block_integral_cartan(const lk_block* b, size_t i, size_t j);

LK_API size_t lk_block_size(const lk_block* b);
LK_API size_t lk_block_rep_length(const lk_block* b, size_t r);
LK_API int lk_block_rep_letter(const lk_block* b, size_t r, size_t pos);
LK_API const char* lk_block_rep_word(const lk_block* b, size_t r);
LK_API const char* lk_block_rep_weight(const lk_block* b, size_t r);
LK_API int lk_block_leq(const lk_block* b, size_t r, size_t s);
LK_API size_t lk_block_num_edges(const lk_block* b);
LK_API void lk_block_edge(const lk_block* b, size_t e, size_t* from, size_t* to);

LK_API lk_status lk_block_hom_dim(const lk_block* b, size_t v, size_t w, int* out);
LK_API lk_status lk_block_coverma_hom_dim(const lk_block* b, size_t v, size_t w, int* out);
LK_API lk_status lk_block_km_hom_dim(const lk_block* b, size_t y, size_t w, int* out);
/* Writes lk_block_size(neg) indices: map[r] is the rep of pos matching rep r of neg. */
LK_API lk_status lk_block_ff_map(const lk_block* neg, const lk_block* pos, size_t* map);

/* ---- Feigin-Fuchs dual of a Verma */
LK_API lk_status lk_dual_verma_create(const lk_root_datum* d, const char* level, const char* weight,
                                      lk_dual_verma** out);
LK_API void lk_dual_verma_free(lk_dual_verma* v);
LK_API const char* lk_dual_verma_level(const lk_dual_verma* v);
LK_API const char* lk_dual_verma_weight(const lk_dual_verma* v);
LK_API int lk_dual_verma_shift(const lk_dual_verma* v);

/* ---- Virasoro specialization */
LK_API lk_status lk_virasoro_create(const char* k, const char* v, lk_virasoro** out);
LK_API void lk_virasoro_free(lk_virasoro* m);
LK_API const char* lk_virasoro_c(const lk_virasoro* m);
LK_API const char* lk_virasoro_delta(const lk_virasoro* m);
LK_API const char* lk_virasoro_delta_plus(const lk_virasoro* m);
LK_API const char* lk_virasoro_dual_c(const lk_virasoro* m);
LK_API const char* lk_virasoro_dual_delta(const lk_virasoro* m);
LK_API lk_status lk_central_charge(const lk_root_datum* d, const char* k, lk_string** out);

#ifdef __cplusplus
}
#endif

#endif
