#include <doctest.h>

#include "mub/bigraph.hpp"
#include "mub/representation.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <algorithm>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(MUB_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p))
        r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("mub_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text = {}) const {
        auto f = path / name;
        if (!text.empty())
            std::ofstream(f) << text;
        return f.string();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* spp_graph = "X x x'\nY y_1 y_2 y_3\nE x y_1\nE x y_2\nE x y_3\nE x' y_2\n";
const char* spp_rep = "x C 1 4 C\nx' C 21/10 29/10 C\ny_1 C 0 1 C\ny_2 C 2 3 C\ny_3 C 4 5 C\n";

const char* h1_nested = "y_1 C 1 3 C\nx_1 C 0 3/2 C\nx_4 C 2 5 C\nx_2 C 16/5 19/5 C\n"
                        "y_2 C 7/2 11/2 C\ny_3 C 4 7 C\nx_3 C 6 8 C\n";

} // namespace

TEST_CASE("gen writes parseable graphs") {
    TempDir t;
    auto f = t.file("h2.graph");
    CHECK(run("gen H2 -o " + f).code == 0);
    auto g = mub::parse_bigraph_text(slurp(f));
    CHECK(g.size() == 7);
    auto k = run("gen Kfam --i 1 --j 1 --primed");
    CHECK(k.code == 0);
    CHECK(mub::parse_bigraph_text(k.out).has("x_0"));
    CHECK(run("gen S --i 1 --tilde").code == 0);
    CHECK(run("gen L --i 1 --j 1 --tilde").code == 64);
    CHECK(run("gen NOPE").code == 64);
}

TEST_CASE("recognize exit codes") {
    TempDir t;
    auto h1 = t.file("h1.graph");
    auto b1 = t.file("b1.graph");
    auto f2 = t.file("f2.graph");
    REQUIRE(run("gen H1 -o " + h1).code == 0);
    REQUIRE(run("gen B1 -o " + b1).code == 0);
    REQUIRE(run("gen F2 -o " + f2).code == 0);
    auto rep = t.file("h1.rep");
    auto sat = run("recognize --graph " + h1 + " --emit-rep " + rep + " --deterministic");
    CHECK(sat.code == 0);
    CHECK(sat.out.rfind("SAT", 0) == 0);
    CHECK(run("validate --graph " + h1 + " --rep " + rep).code == 0);
    CHECK(run("recognize --graph " + b1).code == 1);
    CHECK(run("recognize --graph " + f2 + " --budget-nodes 1").code == 2);
    CHECK(run("MUB_BUDGET_NODES=1 " + std::string(MUB_CLI_PATH) + " recognize --graph " + f2).code != 0);
}

TEST_CASE("scan") {
    TempDir t;
    auto f2 = t.file("f2.graph");
    auto h1 = t.file("h1.graph");
    REQUIRE(run("gen F2 -o " + f2).code == 0);
    REQUIRE(run("gen H1 -o " + h1).code == 0);
    auto hit = run("scan --graph " + f2);
    CHECK(hit.code == 3);
    CHECK(hit.out.find("hit F2") != std::string::npos);
    auto clean = run("scan --graph " + h1);
    CHECK(clean.code == 0);
    CHECK(clean.out == "clean\n");
    // B1 plus a pendant on one of its vertices.
    auto b1 = mub::parse_bigraph_text(run("gen B1").out);
    auto host = b1;
    auto anchor = host.x_vertices().front();
    host.add_vertex("extra", mub::Side::Y);
    host.add_edge(anchor, "extra");
    auto hf = t.file("host.graph", mub::to_text(host));
    auto r = run("scan --graph " + hf);
    CHECK(r.code == 3);
    CHECK(r.out.find("hit B1") != std::string::npos);
    CHECK(run("scan --graph " + t.file("bad.graph", "X a\nZ b\n")).code == 64);
}

TEST_CASE("validate and repair") {
    TempDir t;
    auto g = t.file("s.graph", spp_graph);
    auto r = t.file("s.rep", spp_rep);
    auto v = run("validate --graph " + g + " --rep " + r);
    CHECK(v.code == 0);
    CHECK(v.out.find("valid yes") != std::string::npos);
    // Not a minimum bad pair input: the report goes to stderr, exit 1.
    CHECK(run("repair --graph " + g + " --rep " + r).code == 1);
    auto h1 = t.file("h1.graph");
    REQUIRE(run("gen H1 -o " + h1).code == 0);
    auto nested = t.file("h1.rep", h1_nested);
    auto out = t.file("fixed.rep");
    CHECK(run("repair --graph " + h1 + " --rep " + nested + " -o " + out + " --trace").code == 0);
    auto fixed = mub::parse_representation_text(slurp(out));
    CHECK(mub::is_mixed_proper(fixed));
    CHECK(mub::validate(mub::parse_bigraph_text(slurp(h1)), fixed).valid);
    CHECK(fixed.at("x_2") == mub::parse_interval("(2,5)"));
    auto broken = t.file("broken.rep", "x C 1 4 C\nx' C 2 3 C\ny_1 C 0 1 C\ny_2 C 9 10 C\ny_3 C 4 5 C\n");
    CHECK(run("validate --graph " + g + " --rep " + broken).code == 1);
    CHECK(run("validate --graph " + g + " --rep " + t.file("short.rep", "x C 0 1 C\n")).code == 64);
}

TEST_CASE("render") {
    TempDir t;
    CHECK(run("render --rep " + t.file("a.rep", "a C 0 1 C\n")).out.find("[====]") != std::string::npos);
    CHECK(run("render --rep " + t.file("b.rep", "b O 0 1 O\n")).out.find("(====)") != std::string::npos);
    auto h1 = t.file("h1");
    REQUIRE(run("fixtures dump --id H1 -o " + h1).code == 0);
    auto rows = run("render --rep " + h1 + ".rep");
    CHECK(std::count(rows.out.begin(), rows.out.end(), '\n') == 7);
    auto svg = run("render --format svg --rep " + h1 + ".rep");
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    CHECK(run("render --format pdf --rep " + h1 + ".rep").code == 64);
    CHECK(run("render --rep " + t.file("bad.rep", "a C 0\n")).code == 64);
}

TEST_CASE("fixtures") {
    TempDir t;
    auto list = run("fixtures list");
    CHECK(list.code == 0);
    CHECK(list.out.find("Kp params=2 alternate") != std::string::npos);
    auto prefix = t.file("kp");
    CHECK(run("fixtures dump --id Kp --i 1 --j 1 -o " + prefix).code == 0);
    CHECK(run("validate --graph " + prefix + ".graph --rep " + prefix + ".rep").code == 0);
    CHECK(run("fixtures dump --id Tp --i 1 --j 1 --alternate").code == 64);
    CHECK(run("fixtures dump --id nope").code == 64);
    auto dir = (t.path / "all").string();
    CHECK(run("fixtures dump --all " + dir).code == 0);
    CHECK(fs::exists(fs::path(dir) / "Sp_3_alt.rep"));
}

TEST_CASE("enumerate") {
    TempDir t;
    auto report = t.file("report.json");
    auto ck = t.file("ck.json");
    auto r = run("enumerate --max-n 4 --report " + report + " --checkpoint " + ck);
    CHECK(r.code == 0);
    CHECK(r.out.find("total graphs=6 disagreements=0") != std::string::npos);
    CHECK(slurp(report).find("\"disagreements\": 0") != std::string::npos);
    auto again = run("enumerate --max-n 5 --checkpoint " + ck);
    CHECK(again.code == 0);
    CHECK(again.out.find("n=4 restored from checkpoint") != std::string::npos);
    CHECK(again.out.find("total graphs=11") != std::string::npos);
    CHECK(run("enumerate --max-n 9").code == 64);
    CHECK(run("enumerate --max-n 7").code == 0);
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("recognize").code == 64);
    CHECK(run("recognize --graph /nonexistent/file").code == 64);
}

TEST_CASE("identical invocations give identical output") {
    TempDir t;
    auto g = t.file("h3.graph");
    REQUIRE(run("gen H3 -o " + g).code == 0);
    auto a = run("recognize --graph " + g + " --deterministic");
    auto b = run("recognize --graph " + g + " --deterministic");
    auto strip = [](std::string s) { return s.substr(s.find('\n')); };
    CHECK(strip(a.out) == strip(b.out));
}
