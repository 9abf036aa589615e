#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CUTPOLY_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("cutpoly_cli_" + name);
    std::ofstream(p) << content;
    return p;
}

fs::path gen_graph(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("cutpoly_cli_gen_" + name + ".txt");
    auto r = run("gen " + name + " -o " + p.string());
    REQUIRE(r.exit_code == 0);
    return p;
}

}  // namespace

TEST_CASE("gen emits a parseable graph and round-trips through cuts") {
    auto r = run("gen K4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("4 6") != std::string::npos);

    auto p = gen_graph("K4");
    auto cuts = run("--format json cuts " + p.string());
    REQUIRE(cuts.exit_code == 0);
    auto j = json::parse(cuts.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "cuts");
    CHECK(j["digest"]["n"] == 4);
    CHECK(j["digest"]["m"] == 6);
    CHECK(j["result"]["count"] == 8);
}

TEST_CASE("gen rejects unknown names with the usage exit code") {
    CHECK(run("gen nosuchgraph").exit_code == 2);
}

TEST_CASE("member oracles and their exit codes") {
    auto k3 = gen_graph("K3");
    // non-membership is still a successful query
    auto odd = run("member " + k3.string() + " --point '1 1 1' --oracle lattice");
    CHECK(odd.exit_code == 0);
    CHECK(odd.out.find("member: false") != std::string::npos);

    auto even = run("member " + k3.string() + " --point '2 1 1' --oracle lattice");
    CHECK(even.exit_code == 0);
    CHECK(even.out.find("member: true") != std::string::npos);

    auto cone = run("--format json member " + k3.string() +
                    " --point '1/2 1/2 1/2' --oracle cone");
    REQUIRE(cone.exit_code == 0);
    CHECK(json::parse(cone.out)["result"]["member"] == true);

    auto semi = run("--format json member " + k3.string() +
                    " --point '2 1 1 ; 2' --oracle semigroup");
    REQUIRE(semi.exit_code == 0);
    auto sj = json::parse(semi.out);
    CHECK(sj["result"]["member"] == true);
    CHECK(sj["result"]["witness"]["parts"].size() == 2);

    // malformed point text: usage error
    CHECK(run("member " + k3.string() + " --point 'x y z' --oracle lattice").exit_code == 2);
    // dimension mismatch
    CHECK(run("member " + k3.string() + " --point '1 1' --oracle lattice").exit_code == 2);
}

TEST_CASE("normality exit codes distinguish verdicts") {
    auto c5 = gen_graph("C5");
    CHECK(run("normality " + c5.string() + " --max-degree 2").exit_code == 0);

    auto k5 = gen_graph("K5");
    auto r = run("--format json normality " + k5.string() + " --max-degree 4");
    CHECK(r.exit_code == 1);
    auto j = json::parse(r.out);
    CHECK(j["result"]["status"] == "not_normal");
    CHECK(j["result"]["hole"]["alpha"] == 4);

    // a starved budget is exit 3
    CHECK(run("--budget 3 normality " + k5.string() + " --max-degree 4").exit_code == 3);
}

TEST_CASE("classify matches the rule engine") {
    auto k5 = gen_graph("K5");
    auto r = run("--format json classify " + k5.string());
    CHECK(r.exit_code == 1);
    auto j = json::parse(r.out);
    CHECK(j["result"]["status"] == "not_normal");
    CHECK_FALSE(j["result"]["minor_witness"].is_null());

    auto prism = gen_graph("prism");
    auto p = run("--format json classify " + prism.string());
    CHECK(p.exit_code == 0);
    CHECK(json::parse(p.out)["result"]["status"] == "normal_certified");
}

TEST_CASE("facets command and the K5 refusal") {
    auto c5 = gen_graph("C5");
    auto r = run("--format json facets " + c5.string());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["result"]["total"] == 26);

    auto k5 = gen_graph("K5");
    CHECK(run("facets " + k5.string()).exit_code == 2);
}

TEST_CASE("lift-delete produces a lifted point") {
    auto c4 = gen_graph("C4");
    // delete edge 1,2 leaves the path 2-3-4-1 with coordinates on C4's other edges
    auto r = run("--format json lift-delete " + c4.string() +
                 " --edge 1,2 --point '1 1 0 ; 1'");
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["result"]["lifted"]["alpha"] == 1);
    CHECK(j["result"]["lifted"]["x"].size() == 4);
    long long gamma = j["result"]["gamma"].get<long long>();
    CHECK(j["result"]["bounds"]["lower"].get<long long>() <= gamma);
    CHECK(gamma <= j["result"]["bounds"]["upper"].get<long long>());
}

TEST_CASE("merge glues decompositions across a shared edge") {
    auto k3 = gen_graph("K3");
    auto d1 = write_temp("dec1.txt", "1\n1 2\n");
    auto d2 = write_temp("dec2.txt", "2\n1 2\n");
    auto r = run("--format json merge " + k3.string() + " " + k3.string() +
                 " --shared 1:1,2:2 --dec1 " + d1.string() + " --dec2 " + d2.string());
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["result"]["degree"] == 2);
    CHECK(j["result"]["shores"].size() == 2);
}

TEST_CASE("minor subcommand") {
    auto v8 = gen_graph("V8");
    auto yes = run("--format json minor " + v8.string() + " --pattern K4");
    REQUIRE(yes.exit_code == 0);
    CHECK(json::parse(yes.out)["result"]["minor"] == true);
    auto no = run("--format json minor " + v8.string() + " --pattern K5");
    REQUIRE(no.exit_code == 0);
    CHECK(json::parse(no.out)["result"]["minor"] == false);
}

TEST_CASE("explore batches files and flags violations") {
    auto c4 = gen_graph("C4");
    auto k5 = gen_graph("K5");
    auto ok = run("explore " + c4.string() + " --max-degree 2");
    CHECK(ok.exit_code == 0);
    auto bad = run("explore " + c4.string() + " " + k5.string() + " --max-degree 4");
    CHECK(bad.exit_code == 1);
    // one JSON line per file
    CHECK(std::count(bad.out.begin(), bad.out.end(), '\n') == 2);
}

TEST_CASE("json reports are deterministic apart from timing") {
    auto prism = gen_graph("prism");
    auto a = json::parse(run("--format json classify " + prism.string()).out);
    auto b = json::parse(run("--format json classify " + prism.string()).out);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);
}

TEST_CASE("missing file is a usage error") {
    CHECK(run("cuts /nonexistent/graph.txt").exit_code == 2);
    CHECK(run("").exit_code == 2);
}
