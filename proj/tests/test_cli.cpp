#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string output;
};

// run the CLI with stderr folded into stdout unless the caller redirects
RunResult run(const std::string& args, bool merge_stderr = true) {
    const std::string cmd =
        std::string(QXMAP_CLI_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// scratch directory for files the tests generate
struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / "qxmap-cli-tests") { fs::create_directories(dir); }
    ~Scratch() { std::error_code ec; fs::remove_all(dir, ec); }

    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
};

std::string toffoli_path() { return std::string(QXMAP_DATA_DIR) + "/toffoli.qasm"; }

} // namespace

TEST_CASE("cli: optimize --json reports the searched result") {
    const RunResult r =
        run("optimize " + toffoli_path() + " --arch qx2 --strategy template --json");
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["name"] == "toffoli");
    CHECK(doc["lines"] == 3);
    CHECK(doc["arch"] == "qx2");
    CHECK(doc["strategy"] == "template");
    CHECK(doc["gates"] == 15);
    CHECK(doc["depth"] == 11);
    CHECK(doc["placement"] == nlohmann::json::array({0, 1, 2}));
    CHECK(doc["searched"] == true);
}

TEST_CASE("cli: optimize text output") {
    const RunResult r =
        run("optimize " + toffoli_path() + " --arch qx4 --strategy swap");
    REQUIRE(r.code == 0);
    CHECK(r.output.find("placement 0:2,1:1,2:0\n") != std::string::npos);
    CHECK(r.output.find("gates 15\n") != std::string::npos);
    CHECK(r.output.find("depth 11\n") != std::string::npos);
}

TEST_CASE("cli: optimize --no-search keeps the identity placement") {
    const RunResult r =
        run("optimize " + toffoli_path() + " --arch qx4 --strategy template --no-search --json");
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["gates"] == 31);
    CHECK(doc["depth"] == 20);
    CHECK(doc["placement"] == nlohmann::json::array({0, 1, 2}));
    CHECK(doc["searched"] == false);
}

TEST_CASE("cli: map emits QASM on stdout and the cost line on stderr") {
    const RunResult clean =
        run("map " + toffoli_path() + " --arch qx2 --strategy template", /*merge=*/false);
    REQUIRE(clean.code == 0);
    CHECK(clean.output.rfind("OPENQASM 2.0;\n", 0) == 0);
    CHECK(clean.output.find("cx q[1],q[2];") != std::string::npos);
    CHECK(clean.output.find("gates ") == std::string::npos); // cost went to stderr

    const RunResult merged = run("map " + toffoli_path() + " --arch qx2 --strategy template");
    REQUIRE(merged.code == 0);
    CHECK(merged.output.find("gates 15 depth 11") != std::string::npos);
}

TEST_CASE("cli: verify equivalence and exit codes") {
    Scratch tmp;
    const std::string zx = tmp.file("zx.qasm", "qreg q[1];\nz q[0];\nx q[0];\n");
    const std::string xz = tmp.file("xz.qasm", "qreg q[1];\nx q[0];\nz q[0];\n");
    const std::string h = tmp.file("h.qasm", "qreg q[1];\nh q[0];\n");

    RunResult r = run("verify " + zx + " " + zx);
    CHECK(r.code == 0);
    CHECK(r.output.find("equivalent") != std::string::npos);

    // equal up to the global phase -1
    r = run("verify " + zx + " " + xz);
    CHECK(r.code == 0);
    CHECK(r.output.find("equivalent") != std::string::npos);

    r = run("verify " + zx + " " + h);
    CHECK(r.code == 1);
    CHECK(r.output.find("not equivalent") != std::string::npos);
}

TEST_CASE("cli: optimize --out round-trips through verify --placement") {
    Scratch tmp;
    const std::string out = (tmp.dir / "mapped.qasm").string();

    const RunResult opt = run("optimize " + toffoli_path() +
                              " --arch qx4 --strategy template --json --out " + out);
    REQUIRE(opt.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(opt.output);
    REQUIRE(doc["placement"].size() == 3);

    std::string placement;
    for (unsigned l = 0; l < 3; ++l) {
        if (l) placement += ',';
        placement += std::to_string(l) + ":" + doc["placement"][l].dump();
    }
    const RunResult ver =
        run("verify " + toffoli_path() + " " + out + " --placement " + placement);
    CHECK(ver.code == 0);
    CHECK(ver.output.find("not equivalent") == std::string::npos);

    // without the placement the embedding is wrong and verify says so
    const RunResult bad = run("verify " + toffoli_path() + " " + out);
    CHECK(bad.code == 1);
}

TEST_CASE("cli: parse failures exit 2 with a line-numbered message") {
    Scratch tmp;
    const std::string bad =
        tmp.file("bad.qasm", "qreg q[2];\nh q[0];\nmeasure q[0] -> c[0];\n");
    const RunResult r = run("map " + bad + " --arch qx2 --strategy swap");
    CHECK(r.code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(r.output.find("measure") != std::string::npos);
}

TEST_CASE("cli: oversized circuits exit 3") {
    Scratch tmp;
    const std::string wide = tmp.file("wide.qasm", "qreg q[6];\nh q[0];\n");
    const RunResult r = run("map " + wide + " --arch qx2 --strategy swap");
    CHECK(r.code == 3);
}

TEST_CASE("cli: custom coupling file") {
    Scratch tmp;
    const std::string arch = tmp.file(
        "ring.json", R"({"qubits": 5, "edges": [[0,1],[0,2],[1,2],[3,2],[3,4],[4,2]]})");
    const RunResult r =
        run("optimize " + toffoli_path() + " --arch " + arch + " --strategy template --json");
    REQUIRE(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.output);
    CHECK(doc["arch"] == "ring"); // file stem
    CHECK(doc["gates"] == 15);    // same layout as qx2
}

TEST_CASE("cli: relabel") {
    const RunResult r = run("relabel " + toffoli_path() + " --at 15 --swap 0,2");
    REQUIRE(r.code == 0);
    CHECK(r.output.find("// output_map: 2 1 0") != std::string::npos);

    const RunResult past_end = run("relabel " + toffoli_path() + " --at 99 --swap 0,1");
    CHECK(past_end.code == 2);

    const RunResult bad_pair = run("relabel " + toffoli_path() + " --at 0 --swap 7");
    CHECK(bad_pair.code == 2);
}

TEST_CASE("cli: stats") {
    const RunResult r = run("stats " + toffoli_path() + " --json");
    REQUIRE(r.code == 0);
    const nlohmann::json rows = nlohmann::json::parse(r.output);
    REQUIRE(rows.is_array());
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(row.contains("name"));
        CHECK(row.contains("lines"));
        CHECK(row.contains("arch"));
        CHECK(row.contains("strategy"));
        CHECK(row.contains("gates"));
        CHECK(row.contains("depth"));
        CHECK(row.contains("placement"));
        CHECK(row.contains("searched"));
    }
    CHECK(rows[0]["arch"] == "qx2");
    CHECK(rows[0]["strategy"] == "swap");
    CHECK(rows[0]["searched"] == false);
    CHECK(rows[4]["searched"] == true);
    // searched qx4 rows recover the qx2 construction costs
    CHECK(rows[5]["gates"] == 15);

    const RunResult table = run("stats " + toffoli_path());
    REQUIRE(table.code == 0);
    CHECK(table.output.find("toffoli (3 lines)") != std::string::npos);
    CHECK(table.output.find("baseline") != std::string::npos);
    CHECK(table.output.find("searched") != std::string::npos);
    CHECK(table.output.find("qx4-template") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("map").code == 2);                    // missing everything
    CHECK(run("frobnicate x.qasm").code == 2);      // unknown subcommand
    CHECK(run("optimize missing.qasm --arch qx2 --strategy swap").code == 2);
    CHECK(run("optimize " + toffoli_path() + " --arch qx2 --strategy blah").code == 2);
    CHECK(run("optimize " + toffoli_path() + " --arch qx2 --strategy swap --cost size").code == 2);
    CHECK(run("verify " + toffoli_path() + " " + toffoli_path() + " --placement 0:0").code == 2);
    CHECK(run("--help").code == 0);                 // help is a success path
}
