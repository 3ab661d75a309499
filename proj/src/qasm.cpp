#include "qasm.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace qxmap {

namespace {

struct Token {
    enum Type { Id, Number, Symbol, String, End } type = End;
    std::string text;
    int line = 0;
    char sym = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        if (pos_ >= src_.size()) return t; // End

        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            t.type = Token::Id;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            t.type = Token::Number;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (c == '"') {
            std::size_t start = ++pos_;
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') ++pos_;
            if (pos_ >= src_.size() || src_[pos_] != '"')
                throw parse_error(line_, "unterminated string literal");
            t.type = Token::String;
            t.text = std::string(src_.substr(start, pos_ - start));
            ++pos_;
            return t;
        }
        if (c == '[' || c == ']' || c == ';' || c == ',' || c == '(' || c == ')' ||
            c == '{' || c == '}' || c == '-' || c == '>') {
            t.type = Token::Symbol;
            t.sym = c;
            t.text = std::string(1, c);
            ++pos_;
            return t;
        }
        throw parse_error(line_, "unexpected character", std::string(1, c));
    }

private:
    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Circuit run() {
        parse_header();
        bool saw_qreg = false;
        unsigned reg_size = 0;
        std::string reg_name;
        std::vector<Gate> gates;
        int last_line = 1;

        while (cur_.type != Token::End) {
            last_line = cur_.line;
            const Token stmt = expect(Token::Id, "statement");
            if (stmt.text == "qreg") {
                if (saw_qreg)
                    throw parse_error(stmt.line, "multiple qreg declarations");
                reg_name = expect(Token::Id, "register name").text;
                expect_sym('[');
                reg_size = expect_uint("register size");
                expect_sym(']');
                expect_sym(';');
                if (reg_size == 0)
                    throw parse_error(stmt.line, "register size must be positive");
                if (reg_size > 255)
                    throw parse_error(stmt.line, "register too large");
                saw_qreg = true;
                continue;
            }

            const std::optional<GateKind> kind = gate_kind(stmt.text);
            if (!kind) {
                if (is_known_qasm_construct(stmt.text))
                    throw parse_error(stmt.line, "unsupported construct '" + stmt.text + "'",
                                      stmt.text);
                throw parse_error(stmt.line, "unknown gate '" + stmt.text + "'", stmt.text);
            }
            if (!saw_qreg)
                throw parse_error(stmt.line, "gate before qreg declaration");

            const unsigned a = parse_argument(reg_name, reg_size, stmt.line);
            if (*kind == GateKind::CX) {
                expect_sym(',');
                const unsigned b = parse_argument(reg_name, reg_size, stmt.line);
                if (a == b) throw parse_error(stmt.line, "control equals target");
                gates.push_back(Gate::cx(a, b));
            } else {
                gates.push_back(Gate::single(*kind, a));
            }
            expect_sym(';');
        }

        if (!saw_qreg) throw parse_error(last_line, "missing qreg declaration");
        Circuit c = Circuit::empty(reg_size);
        c.gates = std::move(gates);
        return c;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Token expect(Token::Type type, const char* what) {
        if (cur_.type != type)
            throw parse_error(cur_.line, std::string("expected ") + what, cur_.text);
        Token t = cur_;
        advance();
        return t;
    }

    void expect_sym(char sym) {
        if (cur_.type != Token::Symbol || cur_.sym != sym)
            throw parse_error(cur_.line, std::string("expected '") + sym + "'", cur_.text);
        advance();
    }

    unsigned expect_uint(const char* what) {
        const Token t = expect(Token::Number, what);
        if (t.text.find('.') != std::string::npos)
            throw parse_error(t.line, std::string(what) + " must be an integer", t.text);
        unsigned long v = 0;
        for (char c : t.text) {
            v = v * 10 + static_cast<unsigned long>(c - '0');
            if (v > 1'000'000) throw parse_error(t.line, std::string(what) + " is too large");
        }
        return static_cast<unsigned>(v);
    }

    unsigned parse_argument(const std::string& reg_name, unsigned reg_size, int stmt_line) {
        const Token name = expect(Token::Id, "register reference");
        if (name.text != reg_name)
            throw parse_error(name.line, "unknown register '" + name.text + "'", name.text);
        expect_sym('[');
        const unsigned idx = expect_uint("qubit index");
        expect_sym(']');
        if (idx >= reg_size)
            throw parse_error(stmt_line, "qubit index " + std::to_string(idx) +
                                             " out of range (register size " +
                                             std::to_string(reg_size) + ")");
        return idx;
    }

    void parse_header() {
        if (cur_.type == Token::Id && cur_.text == "OPENQASM") {
            const int line = cur_.line;
            advance();
            const Token ver = expect(Token::Number, "version number");
            if (ver.text != "2.0")
                throw parse_error(line, "unsupported OPENQASM version '" + ver.text + "'",
                                  ver.text);
            expect_sym(';');
        }
        if (cur_.type == Token::Id && cur_.text == "include") {
            const int line = cur_.line;
            advance();
            const Token file = expect(Token::String, "include file");
            if (file.text != "qelib1.inc")
                throw parse_error(line, "unsupported include '" + file.text + "'", file.text);
            expect_sym(';');
        }
    }

    static std::optional<GateKind> gate_kind(const std::string& name) {
        if (name == "h") return GateKind::H;
        if (name == "x") return GateKind::X;
        if (name == "z") return GateKind::Z;
        if (name == "s") return GateKind::S;
        if (name == "sdg") return GateKind::Sdg;
        if (name == "t") return GateKind::T;
        if (name == "tdg") return GateKind::Tdg;
        if (name == "cx") return GateKind::CX;
        return std::nullopt;
    }

    static bool is_known_qasm_construct(const std::string& name) {
        return name == "measure" || name == "barrier" || name == "creg" ||
               name == "reset" || name == "gate" || name == "opaque" ||
               name == "if" || name == "include" || name == "OPENQASM" ||
               name == "qreg";
    }

    Lexer lexer_;
    Token cur_;
};

} // namespace

Circuit parse_qasm(std::string_view source) { return Parser(source).run(); }

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.lines << "];\n";
    for (const Gate& g : c.gates) {
        out << kind_name(g.kind) << " q[" << unsigned(g.q0) << "]";
        if (g.is_cx()) out << ",q[" << unsigned(g.q1) << "]";
        out << ";\n";
    }
    if (!c.identity_output_map()) {
        out << "// output_map:";
        for (std::uint8_t label : c.output_map) out << ' ' << unsigned(label);
        out << '\n';
    }
    return out.str();
}

CouplingMap parse_coupling_file(std::string_view source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::parse_error& e) {
        // recover a line number from the byte offset for a friendlier message
        int line = 1;
        for (std::size_t i = 0; i < source.size() && i + 1 < e.byte; ++i)
            if (source[i] == '\n') ++line;
        throw parse_error(line, std::string("invalid JSON: ") + e.what());
    }

    if (!j.is_object() || !j.contains("qubits") || !j.contains("edges"))
        throw parse_error(0, "coupling file must be {\"qubits\": n, \"edges\": [...]}");
    if (!j["qubits"].is_number_unsigned())
        throw parse_error(0, "qubits must be a non-negative integer");
    const unsigned n = j["qubits"].get<unsigned>();
    if (n < 2 || n > 10)
        throw parse_error(0, "qubits must be between 2 and 10");
    if (!j["edges"].is_array())
        throw parse_error(0, "edges must be an array of [control,target] pairs");

    CouplingMap m;
    m.qubits = n;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned())
            throw parse_error(0, "edge must be a [control,target] pair of indices");
        const unsigned c = e[0].get<unsigned>();
        const unsigned t = e[1].get<unsigned>();
        if (c == t)
            throw parse_error(0, "self-loop edge [" + std::to_string(c) + "," +
                                     std::to_string(t) + "]");
        if (c >= n || t >= n)
            throw parse_error(0, "edge index out of range: [" + std::to_string(c) + "," +
                                     std::to_string(t) + "]");
        m.edges.emplace_back(static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(t));
    }
    std::sort(m.edges.begin(), m.edges.end());
    if (std::adjacent_find(m.edges.begin(), m.edges.end()) != m.edges.end())
        throw parse_error(0, "duplicate edge");
    return m;
}

} // namespace qxmap
