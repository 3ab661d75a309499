#include "qxmap.h"

#include <cstring>
#include <new>
#include <string>

#include "circuit.hpp"
#include "coupling.hpp"
#include "errors.hpp"
#include "mapper.hpp"
#include "optimizer.hpp"
#include "qasm.hpp"
#include "rewriter.hpp"
#include "simulator.hpp"

struct qxm_circuit {
    qxmap::Circuit value;
};

struct qxm_coupling {
    qxmap::CouplingMap value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// run `fn`, translating C++ exceptions into status codes + message
template <typename Fn>
qxm_status guarded(Fn&& fn) {
    try {
        fn();
        return QXM_OK;
    } catch (const qxmap::parse_error& e) {
        set_error(e.what());
        return QXM_ERROR_PARSE;
    } catch (const qxmap::mapping_error& e) {
        set_error(e.what());
        return QXM_ERROR_MAPPING;
    } catch (const qxmap::dimension_error& e) {
        set_error(e.what());
        return QXM_ERROR_DIMENSION;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return QXM_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return QXM_ERROR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QXM_ERROR_INVALID_ARGUMENT;
    }
}

qxm_status require(bool ok, const char* message) {
    if (ok) return QXM_OK;
    set_error(message);
    return QXM_ERROR_INVALID_ARGUMENT;
}

qxmap::Strategy to_strategy(qxm_strategy s) {
    return s == QXM_STRATEGY_SWAP ? qxmap::Strategy::Swap : qxmap::Strategy::Template;
}

qxmap::CostMetric to_metric(qxm_cost_metric m) {
    return m == QXM_COST_DEPTH_FIRST ? qxmap::CostMetric::DepthFirst
                                     : qxmap::CostMetric::GatesFirst;
}

qxmap::LinePlacement placement_from(const unsigned* buf, size_t len) {
    qxmap::LinePlacement p;
    p.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        if (buf[i] > 255) throw std::invalid_argument("placement index out of range");
        p.push_back(static_cast<std::uint8_t>(buf[i]));
    }
    return p;
}

} // namespace

extern "C" {

const char* qxm_last_error(void) { return g_last_error.c_str(); }

qxm_status qxm_circuit_parse(const char* qasm_text, qxm_circuit** out) {
    if (qxm_status st = require(qasm_text && out, "null argument")) return st;
    return guarded([&] { *out = new qxm_circuit{qxmap::parse_qasm(qasm_text)}; });
}

qxm_status qxm_circuit_emit(const qxm_circuit* c, char** out_text) {
    if (qxm_status st = require(c && out_text, "null argument")) return st;
    return guarded([&] {
        const std::string text = qxmap::emit_qasm(c->value);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out_text = buf;
    });
}

void qxm_string_free(char* text) { delete[] text; }

void qxm_circuit_free(qxm_circuit* c) { delete c; }

unsigned qxm_circuit_lines(const qxm_circuit* c) { return c ? c->value.lines : 0; }

size_t qxm_circuit_gate_count(const qxm_circuit* c) {
    return c ? c->value.gates.size() : 0;
}

unsigned qxm_circuit_depth(const qxm_circuit* c) {
    return c ? qxmap::depth(c->value) : 0;
}

qxm_status qxm_circuit_output_map(const qxm_circuit* c, unsigned* buf, size_t buf_len) {
    if (qxm_status st = require(c && buf, "null argument")) return st;
    if (qxm_status st = require(buf_len >= c->value.lines, "buffer too small")) return st;
    for (unsigned w = 0; w < c->value.lines; ++w) buf[w] = c->value.output_map[w];
    return QXM_OK;
}

qxm_status qxm_coupling_builtin(const char* name, qxm_coupling** out) {
    if (qxm_status st = require(name && out, "null argument")) return st;
    return guarded([&] { *out = new qxm_coupling{qxmap::builtin_map(name)}; });
}

qxm_status qxm_coupling_parse(const char* json_text, qxm_coupling** out) {
    if (qxm_status st = require(json_text && out, "null argument")) return st;
    return guarded([&] { *out = new qxm_coupling{qxmap::parse_coupling_file(json_text)}; });
}

unsigned qxm_coupling_qubits(const qxm_coupling* m) { return m ? m->value.qubits : 0; }

void qxm_coupling_free(qxm_coupling* m) { delete m; }

qxm_status qxm_map_circuit(const qxm_circuit* c, const qxm_coupling* m,
                           qxm_strategy strategy, qxm_circuit** out) {
    if (qxm_status st = require(c && m && out, "null argument")) return st;
    return guarded([&] {
        *out = new qxm_circuit{qxmap::map_circuit(c->value, m->value, to_strategy(strategy))};
    });
}

qxm_status qxm_reduce(const qxm_circuit* c, int extended, qxm_circuit** out) {
    if (qxm_status st = require(c && out, "null argument")) return st;
    return guarded([&] { *out = new qxm_circuit{qxmap::reduce(c->value, extended != 0)}; });
}

qxm_status qxm_relabel_tail(const qxm_circuit* c, size_t position, unsigned q1,
                            unsigned q2, qxm_circuit** out) {
    if (qxm_status st = require(c && out, "null argument")) return st;
    return guarded([&] {
        *out = new qxm_circuit{qxmap::relabel_tail(c->value, position, q1, q2)};
    });
}

qxm_status qxm_optimize(const qxm_circuit* c, const qxm_coupling* m,
                        qxm_strategy strategy, qxm_cost_metric metric, int search,
                        qxm_circuit** out, unsigned* placement_buf,
                        size_t placement_len) {
    if (qxm_status st = require(c && m && out, "null argument")) return st;
    if (placement_buf) {
        if (qxm_status st = require(placement_len >= c->value.lines,
                                    "placement buffer too small"))
            return st;
    }
    return guarded([&] {
        qxmap::OptimizeResult res = qxmap::optimize(c->value, m->value,
                                                    to_strategy(strategy),
                                                    to_metric(metric), search != 0);
        if (placement_buf)
            for (unsigned l = 0; l < c->value.lines; ++l)
                placement_buf[l] = res.placement[l];
        *out = new qxm_circuit{std::move(res.circuit)};
    });
}

qxm_status qxm_equivalent(const qxm_circuit* c1, const qxm_circuit* c2,
                          const unsigned* placement, size_t placement_len,
                          double tol, int* out_equal) {
    if (qxm_status st = require(c1 && c2 && out_equal, "null argument")) return st;
    if (qxm_status st = require(placement || placement_len == 0,
                                "placement is null but placement_len is not 0"))
        return st;
    return guarded([&] {
        const qxmap::LinePlacement p = placement
                                           ? placement_from(placement, placement_len)
                                           : qxmap::identity_placement(c1->value.lines);
        *out_equal = qxmap::equivalent(c1->value, c2->value, p, tol) ? 1 : 0;
    });
}

} // extern "C"
