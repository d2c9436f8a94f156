/* C interface to the froblab core: exact structure-constant algebras,
 * Hopf-style axiom checking and Frobenius analysis.  All functions
 * return a status code; string outputs are heap-allocated and must be
 * released with fl_string_free. */
#ifndef FROBLAB_H
#define FROBLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define FL_OK 0       /* success */
#define FL_EFAIL 1    /* verdict or assertion failure */
#define FL_EINVAL 2   /* malformed input */
#define FL_EINTERNAL 3 /* unexpected internal error */

/* Default deterministic seed used when callers pass no override. */
#define FL_DEFAULT_SEED 0x66726F62ULL

/* Message for the most recent failure on this thread ("" if none). */
const char* fl_last_error(void);

/* Releases any string returned through a char** out-parameter. */
void fl_string_free(char* s);

/* Opaque algebra bundle handle (algebra plus optional coalgebra data). */
typedef struct fl_algebra fl_algebra;

/* Parses a bundle from JSON text; validates the algebra axioms. */
int fl_algebra_from_json(const char* json_text, fl_algebra** out);

/* Serializes a bundle back to JSON text. */
int fl_algebra_to_json(const fl_algebra* a, char** out_json);

/* Built-in bundles: "taft-P", "group-P" (P prime), "pair-groupoid-N". */
int fl_algebra_builtin(const char* name, fl_algebra** out);

int fl_algebra_dim(const fl_algebra* a);

void fl_algebra_free(fl_algebra* a);

/* Commands.  Each writes a JSON report to *out_report and returns the
 * command status: 0 success, 1 verdict/assertion failure, 2 malformed
 * input, 3 internal error.  Reports are deterministic for a fixed seed. */
int fl_taft_analyze(int p, uint64_t seed, char** out_report);

int fl_frobcheck(const char* bundle_json, const char* projectives_json_or_null,
                 uint64_t seed, char** out_report);

int fl_axioms_verify(const char* bundle_json, const char* law, char** out_report);

int fl_taftd(int p, const long long* d, int d_len, int reconstruct, uint64_t seed,
             char** out_report);

int fl_export_builtin(const char* name, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* FROBLAB_H */
