/* C interface to the spectral multiplicity library.
 *
 * Objects are opaque handles released with their _free function. Every
 * fallible call returns an smult_status; on failure the message is available
 * from smult_last_error() until the next call on the same thread. Strings
 * returned through char** out-parameters are owned by the caller and released
 * with smult_string_free(). */
#ifndef SPECMULT_H
#define SPECMULT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SMULT_API __declspec(dllexport)
#else
#define SMULT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SMULT_OK = 0,
  SMULT_INVALID_ARGUMENT = 1,
  SMULT_PARSE = 2,
  SMULT_UNKNOWN_RELATION = 3,
  SMULT_UNKNOWN_CONVOLUTION = 4,
  SMULT_INFINITE_EXPANSION = 5,
  SMULT_UNKNOWN_POWER_RULE = 6,
  SMULT_EMPTY_SET = 7,
  SMULT_EMPTY_TYPE = 8,
  SMULT_NO_SATURATION_RULE = 9,
  SMULT_DISJOINTNESS_VIOLATION = 10,
  SMULT_INVALID_MULTIPLICITY_FUNCTION = 11,
  SMULT_EMPTY_INTERVAL = 12,
  SMULT_SEARCH_BOUND_EXCEEDED = 13,
  SMULT_BUDGET_EXCEEDED = 14,
  SMULT_OUT_OF_RANGE = 15,
  SMULT_INSUFFICIENT_DATA = 16,
  SMULT_DEPTH_TOO_LARGE = 17,
  SMULT_OVERFLOW = 18,
  SMULT_INTERNAL = 99
} smult_status;

typedef struct smult_profile smult_profile;
typedef struct smult_type smult_type;
typedef struct smult_mset smult_mset;
typedef struct smult_fock smult_fock;
typedef struct smult_flow smult_flow;
typedef struct smult_recipe smult_recipe;
typedef struct smult_riesz smult_riesz;

SMULT_API const char* smult_version(void);
SMULT_API const char* smult_last_error(void);
SMULT_API const char* smult_status_name(smult_status s);
/* Nonzero when the status is a refusal to compute (unknown relation, budget,
 * search bound, ...) rather than bad input. */
SMULT_API int smult_status_is_refusal(smult_status s);
SMULT_API void smult_string_free(char* s);

/* Profiles: "salem", "chacon", "atomic", "self-similar:<q>", or YAML. */
SMULT_API smult_status smult_profile_builtin(const char* name, smult_profile** out);
SMULT_API smult_status smult_profile_parse(const char* yaml, smult_profile** out);
SMULT_API smult_status smult_profile_to_yaml(const smult_profile* p, char** out);
SMULT_API smult_status smult_profile_name(const smult_profile* p, char** out);
SMULT_API void smult_profile_free(smult_profile* p);

/* Spectral types. */
SMULT_API smult_status smult_type_parse(const char* yaml, const smult_profile* p, smult_type** out);
SMULT_API smult_status smult_type_rotation_family(const uint64_t* m, size_t n, smult_type** out);
SMULT_API smult_status smult_type_to_yaml(const smult_type* t, char** out);
SMULT_API smult_status smult_type_to_string(const smult_type* t, char** out);
SMULT_API smult_status smult_type_direct_sum(const smult_type* a, const smult_type* b, const smult_profile* p,
                                             smult_type** out);
SMULT_API smult_status smult_type_tensor(const smult_type* a, const smult_type* b, const smult_profile* p,
                                         smult_type** out);
SMULT_API smult_status smult_type_sym_power(const smult_type* t, unsigned n, const smult_profile* p,
                                            smult_type** out);
/* strict != 0 refuses powers the profile has no rule for. */
SMULT_API smult_status smult_type_operator_power(const smult_type* t, uint64_t k, const smult_profile* p, int strict,
                                                 smult_type** out);
SMULT_API smult_status smult_type_multiplicities(const smult_type* t, smult_mset** out);
SMULT_API void smult_type_free(smult_type* t);

/* Multiplicity sets. */
SMULT_API smult_status smult_mset_from_values(const uint64_t* values, size_t n, int with_infinity, smult_mset** out);
SMULT_API int smult_mset_equal(const smult_mset* a, const smult_mset* b);
SMULT_API int smult_mset_has_infinity(const smult_mset* s);
SMULT_API size_t smult_mset_finite_count(const smult_mset* s);
/* Decimal text of the i-th finite value in ascending order. */
SMULT_API smult_status smult_mset_finite_at(const smult_mset* s, size_t i, char** out);
/* "{1,3,∞}", or "{1,3,inf}" when ascii != 0. */
SMULT_API smult_status smult_mset_format(const smult_mset* s, int ascii, char** out);
SMULT_API void smult_mset_free(smult_mset* s);

/* Fock expansion and Gaussian correspondence. */
SMULT_API smult_status smult_exp_fock(const smult_type* v, const smult_profile* p, smult_fock** out);
SMULT_API smult_status smult_gaussian_type(const smult_type* u, const smult_profile* p, smult_fock** out);
SMULT_API smult_status smult_fock_multiplicities(const smult_fock* f, const smult_profile* p, smult_mset** out);
SMULT_API smult_status smult_fock_trace(const smult_fock* f, char** out);
SMULT_API smult_status smult_fock_to_yaml(const smult_fock* f, char** out);
SMULT_API void smult_fock_free(smult_fock* f);

/* regime: "salem" or "chacon". label may be NULL. */
SMULT_API smult_status smult_theorem1(const uint64_t* m, size_t n, const char* regime, smult_mset** out,
                                      char** label);
/* koopman and note may be NULL. */
SMULT_API smult_status smult_theorem1_1(const uint64_t* m, size_t n, smult_mset** out, char** koopman, char** note);
SMULT_API smult_status smult_theorem3(unsigned k, smult_mset** out);

/* Flows. Times are rational strings such as "2", "1/3" or "0.25". */
SMULT_API smult_status smult_flow_theorem2(smult_flow** out);
SMULT_API smult_status smult_flow_theorem4(const uint64_t* primes, const uint64_t* m, size_t n, smult_flow** out);
SMULT_API smult_status smult_flow_parse(const char* yaml, smult_flow** out);
SMULT_API smult_status smult_flow_to_yaml(const smult_flow* f, char** out);
SMULT_API smult_status smult_flow_time_type(const smult_flow* f, const char* t, smult_type** out);
SMULT_API smult_status smult_flow_time_multiplicities(const smult_flow* f, const char* t, smult_mset** out);
SMULT_API smult_status smult_flow_generic_multiplicities(const smult_flow* f, smult_mset** out);
/* jsonl != 0 gives JSON lines, otherwise a plain table; sorted by t. */
SMULT_API smult_status smult_flow_scan(const smult_flow* f, const char* const* times, size_t n, int jsonl,
                                       char** out);
/* Exceptional times in (lo, hi], joined by ", ". */
SMULT_API smult_status smult_flow_exceptional(const smult_flow* f, const char* lo, const char* hi,
                                              uint64_t max_denominator, char** out);
/* *out is NULL when no integer time realizes the target. */
SMULT_API smult_status smult_flow_theorem4_scan(const smult_flow* f, const uint64_t* target, size_t n,
                                                uint64_t max_candidates, char** out);
SMULT_API void smult_flow_free(smult_flow* f);

/* Rank-one recipes. budget = 0 selects the default symbol budget. */
SMULT_API smult_status smult_recipe_preset(const char* name, smult_recipe** out);
SMULT_API smult_status smult_recipe_parse(const char* yaml, smult_recipe** out);
SMULT_API smult_status smult_recipe_to_yaml(const smult_recipe* r, char** out);
/* CSV stage,height for stages 0..stage. */
SMULT_API smult_status smult_recipe_heights(const smult_recipe* r, unsigned stage, uint64_t budget, char** out);
/* 'l' for levels, 's' for spacers. */
SMULT_API smult_status smult_recipe_word(const smult_recipe* r, unsigned stage, uint64_t budget, char** out);
/* CSV k,r_k for k = 0..K on the stage word. */
SMULT_API smult_status smult_recipe_correlations(const smult_recipe* r, unsigned stage, uint64_t K, uint64_t budget,
                                                 char** out);
typedef struct {
  unsigned eval_stage;
  int pass;
  int decreasing;
  double spread;
  double last_deviation;
} smult_weak_limit_summary;
/* eval_stage < 0 selects it automatically. target is a rational string. */
SMULT_API smult_status smult_recipe_weak_limit(const smult_recipe* r, const unsigned* stages, size_t n,
                                               const char* target, double tolerance, int eval_stage, uint64_t budget,
                                               char** csv, smult_weak_limit_summary* summary);
/* CSV theta,density from r_0..r_{resolution-1} of the stage word. */
SMULT_API smult_status smult_recipe_spectral_estimate(const smult_recipe* r, unsigned stage, size_t resolution,
                                                      uint64_t budget, char** csv, double* max_min_ratio);
SMULT_API void smult_recipe_free(smult_recipe* r);

/* Riesz products. */
SMULT_API smult_status smult_riesz_default(smult_riesz** out);
SMULT_API smult_status smult_riesz_parse(const char* yaml, smult_riesz** out);
SMULT_API smult_status smult_riesz_to_yaml(const smult_riesz* s, char** out);
SMULT_API unsigned smult_riesz_depth(const smult_riesz* s);
/* Keeps the first depth factors. */
SMULT_API smult_status smult_riesz_truncate(smult_riesz* s, unsigned depth);
/* CSV n,re,im for n = lo..hi. */
SMULT_API smult_status smult_riesz_coefficients(const smult_riesz* s, int64_t lo, int64_t hi, char** out);
SMULT_API smult_status smult_riesz_coefficient(const smult_riesz* s, int64_t n, double* re, double* im);
SMULT_API smult_status smult_riesz_density(const smult_riesz* s, double theta, unsigned K, double* out);
/* Σ_{|n|>N} |μ̂(n)|^p. */
SMULT_API smult_status smult_riesz_tail(const smult_riesz* s, double p, int64_t N, double* out);
/* CSV K,affinity for K = k_min..k_max; monotone is set when strictly decreasing. */
SMULT_API smult_status smult_riesz_affinity_trend(const smult_riesz* s, double z, unsigned k_min, unsigned k_max,
                                                  size_t grid, char** csv, int* monotone, double* final_value);
SMULT_API void smult_riesz_free(smult_riesz* s);

#ifdef __cplusplus
}
#endif

#endif /* SPECMULT_H */
