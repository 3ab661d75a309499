// qxmap command line: map, optimize, verify, stats, relabel.
//
// Talks to the library exclusively through the C API in qxmap.h. Exit codes:
// 0 success (verify: equivalent), 1 verify mismatch, 2 usage/parse problems,
// 3 mapping problems.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qxmap.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMapping = 3;

struct CircuitDeleter {
    void operator()(qxm_circuit* c) const { qxm_circuit_free(c); }
};
struct CouplingDeleter {
    void operator()(qxm_coupling* m) const { qxm_coupling_free(m); }
};
using CircuitPtr = std::unique_ptr<qxm_circuit, CircuitDeleter>;
using CouplingPtr = std::unique_ptr<qxm_coupling, CouplingDeleter>;

// an error that already decided the process exit code
struct CliError {
    int code;
    std::string message;
};

int exit_code_for(qxm_status st) {
    return st == QXM_ERROR_MAPPING ? kExitMapping : kExitUsage;
}

void check(qxm_status st) {
    if (st != QXM_OK) throw CliError{exit_code_for(st), qxm_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitUsage, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CircuitPtr load_circuit(const std::string& path) {
    const std::string text = read_file(path);
    qxm_circuit* c = nullptr;
    check(qxm_circuit_parse(text.c_str(), &c));
    return CircuitPtr(c);
}

CouplingPtr load_arch(const std::string& arch) {
    qxm_coupling* m = nullptr;
    if (arch == "qx2" || arch == "qx4") {
        check(qxm_coupling_builtin(arch.c_str(), &m));
    } else {
        const std::string text = read_file(arch);
        check(qxm_coupling_parse(text.c_str(), &m));
    }
    return CouplingPtr(m);
}

std::string arch_label(const std::string& arch) {
    if (arch == "qx2" || arch == "qx4") return arch;
    return std::filesystem::path(arch).stem().string();
}

std::string circuit_name(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::string emit_text(const qxm_circuit* c) {
    char* text = nullptr;
    check(qxm_circuit_emit(c, &text));
    std::string result(text);
    qxm_string_free(text);
    return result;
}

void write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError{kExitUsage, "cannot write '" + out_path + "'"};
    out << text;
}

qxm_strategy parse_strategy(const std::string& s) {
    if (s == "swap") return QXM_STRATEGY_SWAP;
    if (s == "template") return QXM_STRATEGY_TEMPLATE;
    throw CliError{kExitUsage, "strategy must be 'swap' or 'template'"};
}

std::string placement_string(const std::vector<unsigned>& placement) {
    std::string s;
    for (unsigned l = 0; l < placement.size(); ++l) {
        if (l) s += ',';
        s += std::to_string(l) + ":" + std::to_string(placement[l]);
    }
    return s;
}

std::vector<unsigned> parse_placement(const std::string& text, unsigned lines) {
    std::vector<unsigned> placement(lines, 0);
    std::vector<bool> seen(lines, false);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        unsigned logical = 0, physical = 0;
        try {
            if (colon == std::string::npos) throw std::invalid_argument("");
            logical = static_cast<unsigned>(std::stoul(item.substr(0, colon)));
            physical = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
        } catch (...) {
            throw CliError{kExitUsage,
                           "bad placement entry '" + item + "' (want logical:physical)"};
        }
        if (logical >= lines)
            throw CliError{kExitUsage, "placement names line " + std::to_string(logical) +
                                           " but the circuit has " + std::to_string(lines)};
        seen[logical] = true;
        placement[logical] = physical;
    }
    for (unsigned l = 0; l < lines; ++l)
        if (!seen[l])
            throw CliError{kExitUsage,
                           "placement is missing line " + std::to_string(l)};
    return placement;
}

struct OptimizeOutcome {
    CircuitPtr circuit;
    std::vector<unsigned> placement;
};

OptimizeOutcome run_optimize(const qxm_circuit* c, const qxm_coupling* m,
                             qxm_strategy strategy, qxm_cost_metric metric,
                             bool search) {
    std::vector<unsigned> placement(qxm_circuit_lines(c), 0);
    qxm_circuit* out = nullptr;
    check(qxm_optimize(c, m, strategy, metric, search ? 1 : 0, &out, placement.data(),
                       placement.size()));
    return {CircuitPtr(out), std::move(placement)};
}

// ---- subcommands -----------------------------------------------------------

int cmd_map(const std::string& file, const std::string& arch, const std::string& strategy,
            const std::string& out_path) {
    CircuitPtr c = load_circuit(file);
    CouplingPtr m = load_arch(arch);
    qxm_circuit* mapped_raw = nullptr;
    check(qxm_map_circuit(c.get(), m.get(), parse_strategy(strategy), &mapped_raw));
    CircuitPtr mapped(mapped_raw);

    const std::string cost_line = "gates " + std::to_string(qxm_circuit_gate_count(mapped.get())) +
                                  " depth " + std::to_string(qxm_circuit_depth(mapped.get()));
    write_or_print(emit_text(mapped.get()), out_path);
    // keep stdout clean QASM when no --out was given
    (out_path.empty() ? std::cerr : std::cout) << cost_line << "\n";
    return kExitOk;
}

int cmd_optimize(const std::string& file, const std::string& arch,
                 const std::string& strategy, const std::string& cost_order,
                 bool no_search, const std::string& out_path, bool json) {
    CircuitPtr c = load_circuit(file);
    CouplingPtr m = load_arch(arch);
    const qxm_cost_metric metric =
        cost_order == "depth" ? QXM_COST_DEPTH_FIRST : QXM_COST_GATES_FIRST;
    if (cost_order != "gates" && cost_order != "depth")
        throw CliError{kExitUsage, "--cost must be 'gates' or 'depth'"};

    OptimizeOutcome res =
        run_optimize(c.get(), m.get(), parse_strategy(strategy), metric, !no_search);

    if (!out_path.empty()) write_or_print(emit_text(res.circuit.get()), out_path);

    if (json) {
        nlohmann::json doc = {
            {"name", circuit_name(file)},
            {"lines", qxm_circuit_lines(c.get())},
            {"arch", arch_label(arch)},
            {"strategy", strategy},
            {"gates", qxm_circuit_gate_count(res.circuit.get())},
            {"depth", qxm_circuit_depth(res.circuit.get())},
            {"placement", res.placement},
            {"searched", !no_search},
        };
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "placement " << placement_string(res.placement) << "\n"
                  << "gates " << qxm_circuit_gate_count(res.circuit.get()) << "\n"
                  << "depth " << qxm_circuit_depth(res.circuit.get()) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& file_a, const std::string& file_b,
               const std::string& placement_text, double tol) {
    CircuitPtr a = load_circuit(file_a);
    CircuitPtr b = load_circuit(file_b);

    int equal = 0;
    if (placement_text.empty()) {
        check(qxm_equivalent(a.get(), b.get(), nullptr, 0, tol, &equal));
    } else {
        const std::vector<unsigned> placement =
            parse_placement(placement_text, qxm_circuit_lines(a.get()));
        check(qxm_equivalent(a.get(), b.get(), placement.data(), placement.size(), tol,
                             &equal));
    }
    std::cout << (equal ? "equivalent" : "not equivalent") << "\n";
    return equal ? kExitOk : kExitNotEquivalent;
}

int cmd_stats(const std::string& file, bool json) {
    CircuitPtr c = load_circuit(file);
    const std::string name = circuit_name(file);
    const unsigned lines = qxm_circuit_lines(c.get());

    struct Row {
        const char* arch;
        qxm_strategy strategy;
        const char* strategy_name;
    };
    const Row combos[] = {
        {"qx2", QXM_STRATEGY_SWAP, "swap"},
        {"qx4", QXM_STRATEGY_SWAP, "swap"},
        {"qx2", QXM_STRATEGY_TEMPLATE, "template"},
        {"qx4", QXM_STRATEGY_TEMPLATE, "template"},
    };

    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream table;
    table << name << " (" << lines << " lines)\n";

    for (bool searched : {false, true}) {
        table << (searched ? "searched " : "baseline ");
        for (const Row& row : combos) {
            CouplingPtr m = load_arch(row.arch);
            OptimizeOutcome res =
                run_optimize(c.get(), m.get(), row.strategy, QXM_COST_GATES_FIRST, searched);
            const size_t gates = qxm_circuit_gate_count(res.circuit.get());
            const unsigned dep = qxm_circuit_depth(res.circuit.get());
            rows.push_back({
                {"name", name},
                {"lines", lines},
                {"arch", row.arch},
                {"strategy", row.strategy_name},
                {"gates", gates},
                {"depth", dep},
                {"placement", res.placement},
                {"searched", searched},
            });
            table << " | " << row.arch << "-" << row.strategy_name << " " << gates << "/"
                  << dep;
        }
        table << "\n";
    }

    if (json)
        std::cout << rows.dump(2) << "\n";
    else
        std::cout << table.str();
    return kExitOk;
}

int cmd_relabel(const std::string& file, std::size_t at, const std::string& swap_pair,
                const std::string& out_path) {
    CircuitPtr c = load_circuit(file);

    unsigned q1 = 0, q2 = 0;
    const auto comma = swap_pair.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument("");
        q1 = static_cast<unsigned>(std::stoul(swap_pair.substr(0, comma)));
        q2 = static_cast<unsigned>(std::stoul(swap_pair.substr(comma + 1)));
    } catch (...) {
        throw CliError{kExitUsage, "--swap wants 'q1,q2'"};
    }

    qxm_circuit* out = nullptr;
    check(qxm_relabel_tail(c.get(), at, q1, q2, &out));
    CircuitPtr relabeled(out);
    write_or_print(emit_text(relabeled.get()), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford+T circuit mapper for directed five-qubit couplings"};
    app.require_subcommand(1);

    std::string file, arch, strategy = "template", out_path, placement_text;
    std::string cost_order = "gates", swap_pair, file_b;
    bool no_search = false, json = false;
    double tol = 1e-10;
    std::size_t at = 0;

    CLI::App* map_cmd = app.add_subcommand("map", "rewrite non-native CNOTs, no search");
    map_cmd->add_option("file", file, "input .qasm")->required();
    map_cmd->add_option("--arch", arch, "qx2, qx4, or a coupling .json")->required();
    map_cmd->add_option("--strategy", strategy, "swap or template")->required();
    map_cmd->add_option("--out", out_path, "write mapped QASM here");

    CLI::App* opt_cmd = app.add_subcommand("optimize", "map + reduce with placement search");
    opt_cmd->add_option("file", file, "input .qasm")->required();
    opt_cmd->add_option("--arch", arch, "qx2, qx4, or a coupling .json")->required();
    opt_cmd->add_option("--strategy", strategy, "swap or template")->required();
    opt_cmd->add_option("--cost", cost_order, "gates (default) or depth");
    opt_cmd->add_flag("--no-search", no_search, "identity placement only");
    opt_cmd->add_option("--out", out_path, "write optimized QASM here");
    opt_cmd->add_flag("--json", json, "JSON report on stdout");

    CLI::App* ver_cmd = app.add_subcommand("verify", "unitary equivalence oracle");
    ver_cmd->add_option("a", file, "reference .qasm")->required();
    ver_cmd->add_option("b", file_b, "candidate .qasm")->required();
    ver_cmd->add_option("--placement", placement_text, "logical:physical comma list");
    ver_cmd->add_option("--tol", tol, "entrywise tolerance");

    CLI::App* stats_cmd = app.add_subcommand("stats", "cost table over both architectures");
    stats_cmd->add_option("file", file, "input .qasm")->required();
    stats_cmd->add_flag("--json", json, "JSON rows on stdout");

    CLI::App* rel_cmd = app.add_subcommand("relabel", "swap two wires from a position on");
    rel_cmd->add_option("file", file, "input .qasm")->required();
    rel_cmd->add_option("--at", at, "gate index the relabeling starts at")->required();
    rel_cmd->add_option("--swap", swap_pair, "the two wires, as q1,q2")->required();
    rel_cmd->add_option("--out", out_path, "write relabeled QASM here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (map_cmd->parsed()) return cmd_map(file, arch, strategy, out_path);
        if (opt_cmd->parsed())
            return cmd_optimize(file, arch, strategy, cost_order, no_search, out_path, json);
        if (ver_cmd->parsed()) return cmd_verify(file, file_b, placement_text, tol);
        if (stats_cmd->parsed()) return cmd_stats(file, json);
        if (rel_cmd->parsed()) return cmd_relabel(file, at, swap_pair, out_path);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
