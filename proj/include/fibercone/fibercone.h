#ifndef FIBERCONE_H
#define FIBERCONE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_INVALID_INPUT = 1,
  FC_OVERFLOW = 2,
  FC_MISMATCH = 3,
  FC_INCONCLUSIVE = 4,
  FC_RESOURCE_LIMIT = 5,
  FC_STORE_INTEGRITY = 6,
  FC_IO = 7,
  FC_INTERNAL = 8
} fc_status;

typedef struct fc_ideal fc_ideal;
typedef struct fc_kernel fc_kernel;
typedef struct fc_classification fc_classification;

/* Message of the last failed call on this thread; empty when none. */
const char* fc_last_error(void);
const char* fc_status_name(fc_status status);
/* Releases strings returned through char** out-parameters. */
void fc_string_free(char* s);

/* Monomial ideals. Text form: exponent vectors separated by ';', entries by ','. */
fc_status fc_ideal_parse(const char* text, int minimalize, fc_ideal** out);
fc_status fc_ideal_symmetric(int64_t a, int64_t b, int64_t c, fc_ideal** out);
fc_status fc_ideal_ci(int64_t a, int64_t b, int64_t c, int64_t d, fc_ideal** out);
fc_status fc_ideal_hypersurface(const int64_t* a, const int64_t* b, int n, fc_ideal** out);
void fc_ideal_free(fc_ideal* ideal);
fc_status fc_ideal_to_json(const fc_ideal* ideal, char** json);
/* Minimal generators of I^k as JSON, with mu(I^j) for j <= k. */
fc_status fc_ideal_power_json(const fc_ideal* ideal, int k, char** json);
fc_status fc_member_strict(const fc_ideal* ideal, const int64_t* exps, int nvars, int k, int* result);

/* The kernel J truncated at max_degree. */
fc_status fc_kernel_compute(const fc_ideal* ideal, int max_degree, fc_kernel** out);
/* Extends until stable with sufficient truncation evidence, or max_degree. */
fc_status fc_kernel_compute_stable(const fc_ideal* ideal, int max_degree, fc_kernel** out);
void fc_kernel_free(fc_kernel* kernel);
fc_status fc_kernel_to_json(const fc_kernel* kernel, char** json);
fc_status fc_kernel_evidence_json(const fc_kernel* kernel, char** json);
fc_status fc_kernel_depth_json(const fc_kernel* kernel, uint32_t prime, int trials, uint64_t seed, char** json);

/* Closed-form classification. */
fc_status fc_classify_symmetric(int64_t a, int64_t b, int64_t c, fc_classification** out);
fc_status fc_classify_ci(int64_t a, int64_t b, int64_t c, int64_t d, fc_classification** out);
fc_status fc_classify_hypersurface(const int64_t* a, const int64_t* b, int n, fc_classification** out);
/* Certifies in place against the oracle. FC_MISMATCH when the prediction fails. */
fc_status fc_classification_certify(fc_classification* cl, int slack);
void fc_classification_free(fc_classification* cl);
fc_status fc_classification_to_json(const fc_classification* cl, char** json);
fc_status fc_classification_depth_json(const fc_classification* cl, uint32_t prime, int trials, uint64_t seed,
                                       char** json);

/* Sweeps over a JSONL store. */
fc_status fc_sweep_run(const char* spec_json, const char* store_path, int jobs, char** summary_json);
fc_status fc_sweep_summary_table(const char* summary_json, char** table);
fc_status fc_sweep_report(const char* store_path, char** report_json);

/* Built-in worked examples; *failures receives the number that failed. */
fc_status fc_worked_examples(char** json, int* failures);

#ifdef __cplusplus
}
#endif

#endif
