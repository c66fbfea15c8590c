/*
 * rrgb: Gröbner bases in reduction rings.
 *
 * C interface to the rrgb shared library. All objects are opaque handles
 * owned by the caller and released with the matching *_free function.
 * Functions that can fail return an rrgb_status; on failure the message of
 * the most recent error on the calling thread is available from
 * rrgb_last_error(). Element and basis indices are 1-based.
 */
#ifndef RRGB_RRGB_H
#define RRGB_RRGB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RRGB_API __declspec(dllexport)
#else
#define RRGB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rrgb_status {
  RRGB_OK = 0,
  RRGB_ERR_PARSE = 1,
  RRGB_ERR_RANGE = 2,
  RRGB_ERR_UNSUPPORTED = 3,
  RRGB_ERR_DESCRIPTOR_MISMATCH = 4,
  RRGB_ERR_ZERO_REDUCER = 5,
  RRGB_ERR_STATE = 6,
  RRGB_ERR_STEP_LIMIT = 7,
  RRGB_ERR_DOMAIN_ORDER = 8,
  RRGB_ERR_INVALID_ARGUMENT = 9,
  RRGB_ERR_INTERNAL = 10
} rrgb_status;

typedef enum rrgb_trace_action {
  RRGB_TRACE_BASE = 0,
  RRGB_TRACE_LOAD_PAIR = 1,
  RRGB_TRACE_H_ZERO = 2,
  RRGB_TRACE_H_ADDED = 3
} rrgb_trace_action;

typedef struct rrgb_ring rrgb_ring;
typedef struct rrgb_element rrgb_element;
typedef struct rrgb_basis rrgb_basis;
typedef struct rrgb_gb_result rrgb_gb_result;
typedef struct rrgb_check_report rrgb_check_report;

typedef struct rrgb_gb_stats {
  uint64_t recursion_steps;
  uint64_t pairs_processed;
  uint64_t critical_pairs;
  uint64_t elements_added;
  uint64_t h_zero;
  uint64_t reductions;
} rrgb_gb_stats;

typedef struct rrgb_trace_record {
  rrgb_trace_action action;
  size_t basis_size;
  size_t queue_size;
  size_t crit_size;
  size_t i;
  size_t j;
  /* Valid for RRGB_TRACE_LOAD_PAIR. */
  size_t loaded_k;
  size_t loaded_l;
  size_t critical_pairs_loaded;
} rrgb_trace_record;

#define RRGB_DEFAULT_STEP_LIMIT 1000000u

RRGB_API const char* rrgb_last_error(void);
RRGB_API const char* rrgb_status_name(rrgb_status status);

/* Rings */
RRGB_API rrgb_status rrgb_ring_parse(const char* text, rrgb_ring** out);
RRGB_API void rrgb_ring_free(rrgb_ring* ring);
/* Canonical text of the descriptor; owned by the handle. */
RRGB_API const char* rrgb_ring_text(const rrgb_ring* ring);
RRGB_API int rrgb_ring_is_finite(const rrgb_ring* ring);

/* Elements */
RRGB_API rrgb_status rrgb_element_parse(const rrgb_ring* ring, const char* text,
                                        rrgb_element** out);
RRGB_API void rrgb_element_free(rrgb_element* element);
RRGB_API const char* rrgb_element_text(const rrgb_element* element);
RRGB_API int rrgb_element_is_zero(const rrgb_element* element);

/* Bases */
RRGB_API rrgb_status rrgb_basis_parse(const rrgb_ring* ring, const char* const* texts,
                                      size_t count, rrgb_basis** out);
RRGB_API void rrgb_basis_free(rrgb_basis* basis);
RRGB_API size_t rrgb_basis_size(const rrgb_basis* basis);
/* Text of element k (1-based), or NULL when out of range. */
RRGB_API const char* rrgb_basis_element_text(const rrgb_basis* basis, size_t k);

/* Completion */
RRGB_API rrgb_status rrgb_gb(const rrgb_ring* ring, const rrgb_basis* basis, uint64_t step_limit,
                             rrgb_gb_result** out);
RRGB_API void rrgb_gb_result_free(rrgb_gb_result* result);
/* Borrowed; valid while the result lives. */
RRGB_API const rrgb_basis* rrgb_gb_result_basis(const rrgb_gb_result* result);
RRGB_API void rrgb_gb_result_stats(const rrgb_gb_result* result, rrgb_gb_stats* stats);
RRGB_API size_t rrgb_gb_result_trace_size(const rrgb_gb_result* result);
RRGB_API rrgb_status rrgb_gb_result_trace_record(const rrgb_gb_result* result, size_t index,
                                                 rrgb_trace_record* record);
/* Element appended by an RRGB_TRACE_H_ADDED record, else NULL. */
RRGB_API const char* rrgb_gb_result_trace_added(const rrgb_gb_result* result, size_t index);

/* Deciders. `nf` reduces modulo the given basis as is; `member` and
   `ideals_equal` complete their inputs first. */
RRGB_API rrgb_status rrgb_normal_form(const rrgb_ring* ring, const rrgb_element* element,
                                      const rrgb_basis* basis, rrgb_element** out);
RRGB_API rrgb_status rrgb_is_member(const rrgb_ring* ring, const rrgb_element* element,
                                    const rrgb_basis* generators, uint64_t step_limit,
                                    int* result);
RRGB_API rrgb_status rrgb_ideals_equal(const rrgb_ring* ring, const rrgb_basis* first,
                                       const rrgb_basis* second, uint64_t step_limit,
                                       int* result);

/* Oracle checks. `bound` is the integer-universe bound for Z; 0 selects the
   default (8 * max |c|). Ignored for Z/n. Polynomial rings over Q are
   checked against a classical Buchberger instead of an exhaustive graph. */
RRGB_API rrgb_status rrgb_check(const rrgb_ring* ring, const rrgb_basis* basis, uint64_t bound,
                                uint64_t step_limit, rrgb_check_report** out);
RRGB_API void rrgb_check_report_free(rrgb_check_report* report);
RRGB_API size_t rrgb_check_report_size(const rrgb_check_report* report);
RRGB_API rrgb_status rrgb_check_report_item(const rrgb_check_report* report, size_t index,
                                            const char** name, int* passed, const char** detail);
/* Nonzero iff every item passed. */
RRGB_API int rrgb_check_report_passed(const rrgb_check_report* report);
RRGB_API uint64_t rrgb_check_report_bound(const rrgb_check_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RRGB_RRGB_H */
