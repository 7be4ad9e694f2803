/*
 * C interface to the skg engine. All handles are opaque; every function
 * returns an skg_status, and skg_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef SKG_SKG_H
#define SKG_SKG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SKG_API __declspec(dllexport)
#else
#define SKG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skg_status {
  SKG_OK = 0,
  SKG_INVALID_ARGUMENT = 1,
  SKG_PARSE_ERROR = 2,
  SKG_IO_ERROR = 3,
  SKG_VALIDATION_ERROR = 4,
  SKG_BUFFER_TOO_SMALL = 5,
  SKG_INTERNAL_ERROR = 6
} skg_status;

typedef enum skg_module_kind { SKG_NABLA = 0, SKG_GTENSOR = 1 } skg_module_kind;

typedef struct skg_module skg_module;
typedef struct skg_decomposition skg_decomposition;
typedef struct skg_factors skg_factors;
typedef struct skg_report skg_report;

typedef struct skg_build_options {
  unsigned threads; /* 0 = hardware concurrency */
} skg_build_options;

SKG_API const char* skg_version(void);
SKG_API const char* skg_last_error(void);
SKG_API const char* skg_status_string(skg_status status);

/* Partitions are passed as text: "2,2,1" or "2^2,1". */
SKG_API skg_status skg_partition_normalize(const char* text, char* out, size_t out_size);
SKG_API skg_status skg_partition_count(int n, size_t* count);
SKG_API skg_status skg_partition_at(int n, size_t index, char* out, size_t out_size);
SKG_API skg_status skg_hook_content_dim(const char* lambda, int d, uint64_t* dim);
SKG_API skg_status skg_count_syt(const char* lambda, uint64_t* count);

SKG_API skg_status skg_module_build(skg_module_kind kind, const char* lambda, int d, int p,
                                    const skg_build_options* options, skg_module** out);
SKG_API void skg_module_free(skg_module* module);
SKG_API skg_status skg_module_dim(const skg_module* module, uint64_t* dim);
SKG_API skg_status skg_module_ambient_dim(const skg_module* module, uint64_t* dim);
/* Nonzero weight spaces, in increasing lexicographic order of weight. */
SKG_API skg_status skg_module_weight_count(const skg_module* module, size_t* count);
/* weight must hold d ints. */
SKG_API skg_status skg_module_weight_at(const skg_module* module, size_t index, int* weight,
                                        size_t weight_len, uint64_t* multiplicity);
/* U-dimension and isomorphism test on a G⊗ module (p = 2 meaningful). */
SKG_API skg_status skg_module_u_dim(const skg_module* module, uint64_t* dim);
SKG_API skg_status skg_module_verify_iso(const skg_module* module, int* iso);

SKG_API skg_status skg_u_lambda_dim(const char* lambda, int d, const skg_build_options* options,
                                    uint64_t* dim);
SKG_API skg_status skg_verify_iso(const char* lambda, int d, int p,
                                  const skg_build_options* options, int* iso);
SKG_API skg_status skg_restrict_entries(const char* lambda, int d, int d_prime, int p,
                                        const skg_build_options* options, uint64_t* restricted,
                                        uint64_t* direct);

SKG_API skg_status skg_predict_iso(const char* lambda, int* iso);
/* 0: the d = 1 model vanishes, 1: it is a line. */
SKG_API skg_status skg_d1_predict(const char* lambda, int* line);
SKG_API skg_status skg_hook_d2_dim(int a, int l, uint64_t* dim);
SKG_API skg_status skg_frobenius_weight_check(int a, int l, const skg_build_options* options,
                                              int* ok);

/* path may be NULL for the default data file. */
SKG_API skg_status skg_decomposition_load(const char* path, skg_decomposition** out);
SKG_API void skg_decomposition_free(skg_decomposition* data);
SKG_API skg_status skg_dim_L(const skg_decomposition* data, const char* mu, int d, int64_t* dim);

SKG_API skg_status skg_composition_factors_u(const skg_decomposition* data, const char* lambda,
                                             const skg_build_options* options, skg_factors** out);
SKG_API void skg_factors_free(skg_factors* factors);
SKG_API skg_status skg_factors_count(const skg_factors* factors, size_t* count);
SKG_API skg_status skg_factors_at(const skg_factors* factors, size_t index, char* mu,
                                  size_t mu_size, int64_t* multiplicity);
/* Adds the factors of the dual Weyl module of the same shape. */
SKG_API skg_status skg_factors_add_nabla(skg_factors* factors, const skg_decomposition* data,
                                         const char* lambda);
SKG_API skg_status skg_nabla_filtration_feasible(const skg_decomposition* data,
                                                 const skg_factors* factors, int* feasible);

/* Verification suites: "thm1", "thm2", "d1", "hooks-d2", "tables", "example61", "all". */
typedef struct skg_suite_options {
  int n_min;        /* 0: 1 */
  int n_max;        /* 0: the suite's default */
  int weaker_bound; /* nonzero: λ-dependent converse threshold */
  unsigned threads;
  const char* data_path; /* may be NULL */
} skg_suite_options;

SKG_API skg_status skg_run_suite(const char* name, const skg_suite_options* options,
                                 skg_report** out);
SKG_API void skg_report_free(skg_report* report);
SKG_API skg_status skg_report_count(const skg_report* report, size_t* count);
SKG_API skg_status skg_report_passed(const skg_report* report, int* passed);

typedef struct skg_check_item {
  const char* lambda;
  int d;
  int p;
  const char* kind;
  const char* expected;
  const char* got;
  int pass;
} skg_check_item;

/* Strings stay valid until the report is freed. */
SKG_API skg_status skg_report_item(const skg_report* report, size_t index, skg_check_item* item);

/* CSV text for table1 (d) or table3 (n = 4 or 5). */
SKG_API skg_status skg_table1_csv(int d, char* out, size_t out_size, size_t* needed);
SKG_API skg_status skg_table3_csv(const skg_decomposition* data, int n,
                                  const skg_build_options* options, char* out, size_t out_size,
                                  size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
