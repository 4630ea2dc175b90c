#ifndef COMBIPROOF_H
#define COMBIPROOF_H

/*
 * C API of the combiproof library: parsing and truth-table checking of
 * classical propositional formulas, clique enumeration, a sequent-calculus
 * prover producing combinatorial proof certificates, and the certificate
 * verifier.
 *
 * Conventions:
 *   - handles are opaque; release them with the matching *_free call
 *   - every returned char* is heap-allocated and owned by the caller;
 *     release it with cp_string_free
 *   - functions that can fail return a cp_status; the optional `error`
 *     out-parameter (may be NULL) receives a human-readable message on
 *     failure
 *   - verdict lines are machine-parsable: "ACCEPTED" or
 *     "REJECTED: <stage>: <witness>" with stage one of linking, net,
 *     labels, cliques
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(_WIN64)
#define CP_API __declspec(dllexport)
#else
#define CP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cp_formula cp_formula;
typedef struct cp_proof cp_proof;

typedef enum cp_status {
    CP_OK = 0,             /* success / accepted */
    CP_REJECTED = 1,       /* well-formed input, negative verdict */
    CP_PARSE_ERROR = 2,    /* malformed formula text or proof document */
    CP_BAD_ARGUMENT = 3,   /* argument outside the contract */
    CP_LIMIT_EXCEEDED = 4  /* configured bound exceeded */
} cp_status;

CP_API const char* cp_version(void);
CP_API void cp_string_free(char* s);

/* ── formulas ─────────────────────────────────────────────────────────── */

/* Parses surface syntax (atoms, ~ ! & | ->, parentheses) and normalizes
 * to negation normal form. */
CP_API cp_status cp_formula_parse(const char* text, cp_formula** out, char** error);
CP_API void cp_formula_free(cp_formula* f);

CP_API char* cp_formula_print(const cp_formula* f);
CP_API size_t cp_formula_leaf_count(const cp_formula* f);
CP_API size_t cp_formula_variable_count(const cp_formula* f);

/* Exhaustive truth-table check.  max_vars bounds the table size
 * (0 selects the default cap of 16); returns CP_LIMIT_EXCEEDED when the
 * formula has more variables.  On CP_OK, *verdict is 1 for a tautology. */
CP_API cp_status cp_formula_is_tautology(const cp_formula* f, size_t max_vars, int* verdict);

/* One clique per line: sorted leaf indices separated by single blanks,
 * cliques in lexicographic order. */
CP_API char* cp_formula_cliques(const cp_formula* f);

/* ── combinatorial proofs ─────────────────────────────────────────────── */

/* Proof search; CP_REJECTED when the formula is not a tautology. */
CP_API cp_status cp_prove(const cp_formula* f, cp_proof** out);
CP_API void cp_proof_free(cp_proof* p);

/* JSON proof documents (fields lower, upper, links, map, mix). */
CP_API cp_status cp_proof_load(const char* json_text, cp_proof** out, char** error);
CP_API char* cp_proof_save(const cp_proof* p);

/* The mix flag stored in the document (0/1). */
CP_API int cp_proof_mix(const cp_proof* p);

/* Full verification (linking, net, labels, cliques); CP_OK iff accepted.
 * *verdict_line is always produced. */
CP_API cp_status cp_proof_verify(const cp_proof* p, int mix, char** verdict_line);

/* Linking and net stages only. */
CP_API cp_status cp_proof_net_check(const cp_proof* p, int mix, char** verdict_line);

/* DOT rendering of the proof (two clustered layers, axiom arcs, map
 * edges). */
CP_API char* cp_proof_figure(const cp_proof* p);

/* ── differential harness ─────────────────────────────────────────────── */

/* Runs `iterations` random cross-checks (prover vs truth table, verifier
 * vs translation, fast vs exhaustive net checker, mutation soundness).
 * *report receives the full text report; CP_REJECTED when violations were
 * found. */
CP_API cp_status cp_run_differential(size_t iterations, uint64_t seed, size_t max_leaves,
                                     size_t max_vars, char** report);

#ifdef __cplusplus
}
#endif

#endif /* COMBIPROOF_H */
