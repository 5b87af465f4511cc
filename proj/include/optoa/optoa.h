/*
 * optoa: orthogonal arrays with a maximally repeated row.
 *
 * C interface over the C++ core. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Functions return an
 * optoa_status; on failure optoa_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Handles are immutable and may be shared between threads.
 */
#ifndef OPTOA_OPTOA_H
#define OPTOA_OPTOA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define OPTOA_API __declspec(dllexport)
#else
#  define OPTOA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum optoa_status {
  OPTOA_OK = 0,
  OPTOA_ERR_INVALID_ARGUMENT = 1,
  OPTOA_ERR_PARSE = 2,
  OPTOA_ERR_INFEASIBLE = 3,
  OPTOA_ERR_UNREACHABLE = 4,
  OPTOA_ERR_TOO_LARGE = 5,
  OPTOA_ERR_NOT_FOUND = 6,
  OPTOA_ERR_IO = 7,
  OPTOA_ERR_INTERNAL = 8
} optoa_status;

enum {
  OPTOA_CLASS_OPTIMAL = 1,
  OPTOA_CLASS_BASIC = 2,
  OPTOA_CLASS_M_OPTIMAL = 4
};

typedef struct optoa_array optoa_array;
typedef struct optoa_array_list optoa_array_list;
typedef struct optoa_report optoa_report;
typedef struct optoa_report_list optoa_report_list;
typedef struct optoa_start optoa_start;
typedef struct optoa_start_list optoa_start_list;
typedef struct optoa_design optoa_design;
typedef struct optoa_hadamard optoa_hadamard;

typedef struct optoa_fraction {
  int64_t num;
  int64_t den;
} optoa_fraction;

typedef struct optoa_bounds {
  optoa_fraction rao_bound;
  int64_t floor_bound;
  int has_best_refined;
  int best_alpha;
  optoa_fraction best_refined;
  int abar_integral;    /* (k-1)/n is a positive integer */
  int optimal_possible; /* the rational bound is an integer and abar_integral */
  int basic;            /* optimal_possible and gcd(bound, lambda) = 1 */
} optoa_bounds;

OPTOA_API const char* optoa_last_error(void);
OPTOA_API const char* optoa_status_name(optoa_status status);
OPTOA_API void optoa_string_free(char* s);

/* Orthogonal arrays and the OA text format. */
OPTOA_API optoa_status optoa_array_read_file(const char* path, optoa_array** out);
OPTOA_API optoa_status optoa_array_parse(const char* text, optoa_array** out);
/* comment may be NULL; otherwise written as a "# <comment>" line. */
OPTOA_API optoa_status optoa_array_write_file(const optoa_array* a, const char* path, const char* comment);
OPTOA_API optoa_status optoa_array_format(const optoa_array* a, char** out_text);
OPTOA_API optoa_status optoa_array_stack(const optoa_array* a, int copies, optoa_array** out);
OPTOA_API int optoa_array_k(const optoa_array* a);
OPTOA_API int optoa_array_n(const optoa_array* a);
OPTOA_API int64_t optoa_array_lambda(const optoa_array* a);
OPTOA_API uint64_t optoa_array_rows(const optoa_array* a);
OPTOA_API optoa_status optoa_array_get(const optoa_array* a, uint64_t row, int col, int* out);
OPTOA_API void optoa_array_free(optoa_array* a);

OPTOA_API size_t optoa_array_list_size(const optoa_array_list* l);
/* Borrowed; valid while the list lives. */
OPTOA_API const optoa_array* optoa_array_list_get(const optoa_array_list* l, size_t i);
OPTOA_API void optoa_array_list_free(optoa_array_list* l);

/* Bounds and parameter quadruples. */
OPTOA_API optoa_status optoa_compute_bounds(int k, int n, int64_t lambda, optoa_bounds* out);
OPTOA_API optoa_status optoa_refined_bound(int k, int n, int64_t lambda, int alpha, optoa_fraction* out);
/* OPTOA_ERR_NOT_FOUND when no basic quadruple with m > 1 exists. */
OPTOA_API optoa_status optoa_basic_quadruple(int k, int n, int64_t* m, int64_t* lambda);
/* Writes up to capacity (m, lambda) pairs; *count receives the full count. */
OPTOA_API optoa_status optoa_feasible_quadruples(int k, int n, int64_t lambda_max, int64_t* m_out,
                                                 int64_t* lambda_out, size_t capacity, size_t* count);

/* Verification. */
OPTOA_API optoa_status optoa_verify(const optoa_array* a, optoa_report** out);
/* Reads an OA file row by row without materializing it. */
OPTOA_API optoa_status optoa_verify_file_streaming(const char* path, optoa_report** out);
OPTOA_API optoa_status optoa_zero_count_check(const optoa_array* a, int* out);
OPTOA_API int optoa_report_is_oa(const optoa_report* r);
/* Returns 1 and sets *out when all pair counts agree. */
OPTOA_API int optoa_report_lambda_observed(const optoa_report* r, int64_t* out);
OPTOA_API int64_t optoa_report_m(const optoa_report* r);
OPTOA_API uint64_t optoa_report_rows(const optoa_report* r);
/* Copies up to capacity symbols; returns the row length. */
OPTOA_API size_t optoa_report_repeated_row(const optoa_report* r, int* buf, size_t capacity);
/* Returns 1 and fills the fields when an offending pair count exists. */
OPTOA_API int optoa_report_witness(const optoa_report* r, int* col_a, int* col_b, int* sym_a, int* sym_b,
                                   int64_t* count);
OPTOA_API unsigned optoa_report_classes(const optoa_report* r);
OPTOA_API size_t optoa_report_histogram_size(const optoa_report* r);
OPTOA_API optoa_status optoa_report_histogram_entry(const optoa_report* r, size_t i, int* zeros, int64_t* rows);
OPTOA_API void optoa_report_free(optoa_report* r);

OPTOA_API size_t optoa_report_list_size(const optoa_report_list* l);
OPTOA_API const optoa_report* optoa_report_list_get(const optoa_report_list* l, size_t i);
OPTOA_API void optoa_report_list_free(optoa_report_list* l);

/* Cyclic starting rows and the START format. */
OPTOA_API optoa_status optoa_start_read_file(const char* path, optoa_start** out);
OPTOA_API optoa_status optoa_start_parse(const char* text, optoa_start** out);
OPTOA_API optoa_status optoa_start_write_file(const optoa_start* s, const char* path);
OPTOA_API optoa_status optoa_start_format(const optoa_start* s, char** out_text);
OPTOA_API optoa_status optoa_develop(const optoa_start* s, optoa_array** out);
OPTOA_API optoa_status optoa_distance_check(const optoa_start* s, int64_t lambda, int* ok);
OPTOA_API void optoa_start_free(optoa_start* s);
/* OPTOA_ERR_INFEASIBLE when (m, lambda, k, n) is not feasible. The list may
 * be empty. */
OPTOA_API optoa_status optoa_search(int k, int n, int64_t m, int64_t lambda, size_t limit,
                                    optoa_start_list** out);
OPTOA_API size_t optoa_start_list_size(const optoa_start_list* l);
OPTOA_API const optoa_start* optoa_start_list_get(const optoa_start_list* l, size_t i);
OPTOA_API void optoa_start_list_free(optoa_start_list* l);

/* Hadamard matrices and block designs. */
OPTOA_API optoa_status optoa_hadamard_construct(int order, optoa_hadamard** out);
OPTOA_API int optoa_hadamard_order(const optoa_hadamard* h);
OPTOA_API optoa_status optoa_hadamard_write_file(const optoa_hadamard* h, const char* path);
OPTOA_API void optoa_hadamard_free(optoa_hadamard* h);
OPTOA_API optoa_status optoa_hadamard_to_bibd(const optoa_hadamard* h, optoa_design** out);
OPTOA_API optoa_status optoa_design_derived_complement(const optoa_design* d, int block_index,
                                                       optoa_design** out);
OPTOA_API optoa_status optoa_design_to_array(const optoa_design* d, optoa_array** out);
OPTOA_API optoa_status optoa_array_to_design(const optoa_array* a, optoa_design** out);
OPTOA_API optoa_status optoa_design_read_file(const char* path, optoa_design** out);
OPTOA_API optoa_status optoa_design_write_file(const optoa_design* d, const char* path);
OPTOA_API void optoa_design_params(const optoa_design* d, int* v, int* b, int* r, int* k, int* lambda);
OPTOA_API void optoa_design_free(optoa_design* d);

/* Enumeration and partitions. class_sizes == NULL (count 0) selects the
 * default column classes. max_rows == 0 selects the default materialization
 * limit; larger arrays fail with OPTOA_ERR_TOO_LARGE. */
OPTOA_API optoa_status optoa_enumeration_params(int k, int n, int* abar, int64_t* lambda, int64_t* m,
                                                int64_t* tuples);
OPTOA_API optoa_status optoa_enumerate(int k, int n, uint64_t max_rows, optoa_array** out);
OPTOA_API optoa_status optoa_partition(int k, int n, uint64_t max_rows, optoa_array_list** out);
OPTOA_API optoa_status optoa_multi_partition(int k, int n, const int* class_sizes, size_t count,
                                             uint64_t max_rows, optoa_array_list** out);
OPTOA_API optoa_status optoa_default_partition(int k, int n, int* class_sizes, size_t capacity, size_t* count);
OPTOA_API optoa_status optoa_partition_class_label(size_t index, int n, int gamma, char** out_text);
OPTOA_API optoa_status optoa_verify_enumeration_streaming(int k, int n, optoa_report** out);
OPTOA_API optoa_status optoa_verify_multi_partition_streaming(int k, int n, const int* class_sizes,
                                                              size_t count, optoa_report_list** out);
/* Writes the enumerated array to path row by row. */
OPTOA_API optoa_status optoa_write_enumeration_file(int k, int n, const char* path);
/* Writes <stem>.<i>.txt for every part; *files receives the number written. */
OPTOA_API optoa_status optoa_write_multi_partition_files(int k, int n, const int* class_sizes, size_t count,
                                                         const char* stem, size_t* files);

/* Column deletion. columns == NULL drops the last s columns. */
OPTOA_API optoa_status optoa_delete_columns(const optoa_array* a, int s, const int* columns,
                                            optoa_array** out);
OPTOA_API optoa_status optoa_max_safe_deletions(int k, int n, int64_t lambda, int* out);
OPTOA_API optoa_status optoa_m_optimal_after_deletion(int k, int n, int64_t lambda, int s, int* out);

#ifdef __cplusplus
}
#endif

#endif /* OPTOA_OPTOA_H */
