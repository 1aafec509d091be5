/*
 * C API for the proof-carrying-plan library.
 *
 * All objects are opaque handles created by pcp_* constructors and released
 * with the matching pcp_*_free. Functions that can fail return a status code
 * (PCP_VALID / PCP_INVALID / PCP_ERROR by analogy with the CLI exit codes) or
 * NULL plus an error message through the `error` out-parameter. Strings
 * returned through out-parameters are heap-allocated; release them with
 * pcp_string_free.
 */
#ifndef PCP_H
#define PCP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pcp_domain pcp_domain;
typedef struct pcp_problem pcp_problem;
typedef struct pcp_plan pcp_plan;
typedef struct pcp_verdict pcp_verdict;

/* Status codes mirror the CLI exit codes. */
#define PCP_VALID 0
#define PCP_INVALID 1
#define PCP_ERROR 2

/* Option flags. */
#define PCP_OPT_CLOSED_WORLD (1u << 0)
/* Testing aid: translate domains without effect augmentation. */
#define PCP_OPT_NO_EFFECT_AUGMENTATION (1u << 1)

/* Parsing. NULL on failure with *error set (when error is non-NULL). */
pcp_domain* pcp_domain_parse(const char* text, char** error);
pcp_problem* pcp_problem_parse(const char* text, char** error);
pcp_plan* pcp_plan_parse(const char* text, char** error);

void pcp_domain_free(pcp_domain* domain);
void pcp_problem_free(pcp_problem* problem);
void pcp_plan_free(pcp_plan* plan);

size_t pcp_plan_length(const pcp_plan* plan);

/*
 * Pipeline operations. Each returns a status code and, through `out`, a
 * verdict carrying diagnostics and any produced artifacts. `out` may be NULL
 * when only the status is wanted.
 */
int pcp_verify(const pcp_domain* domain, const pcp_problem* problem, const pcp_plan* plan,
               unsigned flags, pcp_verdict** out);

int pcp_check_proof(const pcp_domain* domain, const pcp_problem* problem, const char* proof_json,
                    unsigned flags, pcp_verdict** out);

/* energy < 0 means unbounded. */
int pcp_execute(const pcp_domain* domain, const pcp_problem* problem, const pcp_plan* plan,
                unsigned flags, long energy, pcp_verdict** out);

/* Context (and init/goal when problem is non-NULL) as JSON. */
int pcp_translate(const pcp_domain* domain, const pcp_problem* problem, unsigned flags,
                  pcp_verdict** out);

/* Verdict accessors. Returned strings stay owned by the verdict. */
int pcp_verdict_status(const pcp_verdict* verdict);
size_t pcp_verdict_diagnostic_count(const pcp_verdict* verdict);
const char* pcp_verdict_diagnostic(const pcp_verdict* verdict, size_t index);
/* Emitted proof JSON (verify), or NULL. */
const char* pcp_verdict_proof_json(const pcp_verdict* verdict);
/* Emitted generation-trace JSON (verify), or NULL. */
const char* pcp_verdict_trace_json(const pcp_verdict* verdict);
/* Final world as sorted atoms, one per line (execute), or NULL. */
const char* pcp_verdict_world(const pcp_verdict* verdict);
/* Translation JSON (translate), or NULL. */
const char* pcp_verdict_json(const pcp_verdict* verdict);
void pcp_verdict_free(pcp_verdict* verdict);

void pcp_string_free(char* text);

/* Library version, e.g. "0.1.0". */
const char* pcp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* PCP_H */
