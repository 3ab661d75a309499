/* qxmap — Clifford+T circuit mapper for directed five-qubit couplings.
 *
 * C API over the core library: opaque handles, status-code returns. Every
 * function that can fail returns qxm_status; on failure qxm_last_error()
 * holds a human-readable message (thread-local, overwritten by the next
 * failing call on the same thread). Out-parameters are written only on
 * QXM_OK. Handles are freed with the matching *_free function; freeing
 * NULL is a no-op.
 */
#ifndef QXMAP_H
#define QXMAP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qxm_circuit qxm_circuit;
typedef struct qxm_coupling qxm_coupling;

typedef enum qxm_status {
    QXM_OK = 0,
    QXM_ERROR_PARSE = 1,
    QXM_ERROR_INVALID_ARGUMENT = 2,
    QXM_ERROR_MAPPING = 3,
    QXM_ERROR_DIMENSION = 4
} qxm_status;

typedef enum qxm_strategy {
    QXM_STRATEGY_SWAP = 0,
    QXM_STRATEGY_TEMPLATE = 1
} qxm_strategy;

typedef enum qxm_cost_metric {
    QXM_COST_GATES_FIRST = 0,
    QXM_COST_DEPTH_FIRST = 1
} qxm_cost_metric;

/* Message for the most recent failure on this thread ("" if none). */
const char* qxm_last_error(void);

/* ---- circuits ---------------------------------------------------------- */

/* OpenQASM 2.0 Clifford+T subset; see qxm_circuit_emit for the format. */
qxm_status qxm_circuit_parse(const char* qasm_text, qxm_circuit** out);

/* Canonical QASM text; free with qxm_string_free. */
qxm_status qxm_circuit_emit(const qxm_circuit* c, char** out_text);
void qxm_string_free(char* text);

void qxm_circuit_free(qxm_circuit* c);

unsigned qxm_circuit_lines(const qxm_circuit* c);
size_t qxm_circuit_gate_count(const qxm_circuit* c);
unsigned qxm_circuit_depth(const qxm_circuit* c);

/* Writes the output relabeling (buf[wire] = output label) into buf;
 * buf_len must be at least qxm_circuit_lines(c). */
qxm_status qxm_circuit_output_map(const qxm_circuit* c, unsigned* buf, size_t buf_len);

/* ---- coupling maps ----------------------------------------------------- */

/* name: "qx2" or "qx4". */
qxm_status qxm_coupling_builtin(const char* name, qxm_coupling** out);

/* JSON {"qubits": n, "edges": [[control,target], ...]}. */
qxm_status qxm_coupling_parse(const char* json_text, qxm_coupling** out);

unsigned qxm_coupling_qubits(const qxm_coupling* m);
void qxm_coupling_free(qxm_coupling* m);

/* ---- passes ------------------------------------------------------------ */

/* Rewrite every non-native CNOT for the coupling map (no placement search). */
qxm_status qxm_map_circuit(const qxm_circuit* c, const qxm_coupling* m,
                           qxm_strategy strategy, qxm_circuit** out);

/* Commutation-driven peephole reduction; extended != 0 also moves diagonal
 * gates through CNOT controls. */
qxm_status qxm_reduce(const qxm_circuit* c, int extended, qxm_circuit** out);

/* Swap wires q1/q2 in every gate from `position` on; the transposition is
 * recorded in the circuit's output map. */
qxm_status qxm_relabel_tail(const qxm_circuit* c, size_t position, unsigned q1,
                            unsigned q2, qxm_circuit** out);

/* Map + reduce; with search != 0 tries every line placement and keeps the
 * cheapest circuit. placement_buf (length >= lines of c) receives the chosen
 * placement (logical line -> physical qubit); it may be NULL with
 * placement_len 0 if the placement is not wanted. */
qxm_status qxm_optimize(const qxm_circuit* c, const qxm_coupling* m,
                        qxm_strategy strategy, qxm_cost_metric metric, int search,
                        qxm_circuit** out, unsigned* placement_buf,
                        size_t placement_len);

/* ---- verification ------------------------------------------------------ */

/* Unitary equivalence of c2 against c1 embedded through `placement`
 * (placement[i] = physical wire of c1 line i; NULL means identity), up to a
 * global phase and the circuits' recorded output maps. Writes 1 or 0 into
 * *out_equal. Circuits beyond 10 lines are rejected (QXM_ERROR_DIMENSION). */
qxm_status qxm_equivalent(const qxm_circuit* c1, const qxm_circuit* c2,
                          const unsigned* placement, size_t placement_len,
                          double tol, int* out_equal);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QXMAP_H */
