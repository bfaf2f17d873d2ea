#include <catch2/catch_amalgamated.hpp>

#include "arimat/cli.hpp"

#include <fstream>
#include <sstream>

using namespace arimat;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(ARIMAT_FIXTURES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("tutte of the running quotient fixture") {
    RunResult r = run_cli({"tutte", fx("running_quotient.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "x^2 + y^2 + 3x + 4y + 7\n");
}

TEST_CASE("charpoly of the running poset fixture") {
    RunResult r = run_cli({"charpoly", fx("running_poset.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "t^2 - 5t + 11\n");
}

TEST_CASE("arithcheck reports the divisibility failure") {
    RunResult r = run_cli({"arithcheck", fx("noarithm.json")});
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("(A.1.1): m({a,b,c})=3 does not divide m({a,c})=4") != std::string::npos);
    REQUIRE(r.out.find("(A.1.1): fail") != std::string::npos);
    REQUIRE(r.out.find("(P): pass") != std::string::npos);
}

TEST_CASE("arithcheck passes on the running fixture") {
    RunResult r = run_cli({"arithcheck", fx("running_quotient.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("semimatroid: no") != std::string::npos);
    REQUIRE(r.out.find("(A2): pass") != std::string::npos);
}

TEST_CASE("delcon at the e element") {
    RunResult r = run_cli({"delcon", fx("running_quotient.json"), "e"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("T = x^2 + y^2 + 3x + 4y + 7") != std::string::npos);
    REQUIRE(r.out.find("T_del = x^2 + y^2 + 2x + 2y + 5") != std::string::npos);
    REQUIRE(r.out.find("T_con = x + 2y + 2") != std::string::npos);
    REQUIRE(r.out.find("case: generic") != std::string::npos);
    REQUIRE(r.out.find("identity: holds") != std::string::npos);
}

TEST_CASE("delcon rejects unknown elements") {
    RunResult r = run_cli({"delcon", fx("running_quotient.json"), "zz"});
    REQUIRE(r.code == 2);
}

TEST_CASE("crapo needs semimatroid data") {
    RunResult r = run_cli({"crapo", fx("running_quotient.json")});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("semimatroid") != std::string::npos);
}

TEST_CASE("crapo on the almost-arithmetic fixture") {
    RunResult r = run_cli({"crapo", fx("noarithm.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("matches polynomial: yes") != std::string::npos);
}

TEST_CASE("crypto verifies the uniform matroid fixture") {
    RunResult r = run_cli({"crypto", fx("u23.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("round trip: verified") != std::string::npos);
    RunResult r2 = run_cli({"crypto", fx("running_poset.json")});
    REQUIRE(r2.code == 1);  // a quotient poset is not a geometric semilattice
}

TEST_CASE("layers output formats") {
    RunResult text = run_cli({"layers", fx("arrangement_2x3.json")});
    REQUIRE(text.code == 0);
    REQUIRE(text.out.find("6 layers") != std::string::npos);
    RunResult dot = run_cli({"layers", fx("arrangement_2x3.json"), "--format", "dot"});
    REQUIRE(dot.code == 0);
    REQUIRE(dot.out.find("digraph layers") != std::string::npos);
    REQUIRE(dot.out.find(" | ") != std::string::npos);
    REQUIRE(dot.out.find("rank=") != std::string::npos);
}

TEST_CASE("layers JSON round trip") {
    RunResult r = run_cli({"layers", fx("arrangement_2x3.json"), "--format", "json"});
    REQUIRE(r.code == 0);
    io::json j = io::json::parse(r.out);
    FinitePoset p = io::parse_poset(j);
    REQUIRE(p.size() == 6);
    // re-emitting the parsed poset reproduces ids, ranks and covers
    io::json again = io::emit_poset(p);
    REQUIRE(again.at("covers") == j.at("covers"));
    for (size_t i = 0; i < j.at("elements").size(); ++i) {
        REQUIRE(again.at("elements")[i].at("id") == j.at("elements")[i].at("id"));
        REQUIRE(again.at("elements")[i].at("rank") == j.at("elements")[i].at("rank"));
    }
}

TEST_CASE("tutte of the arrangement fixture") {
    RunResult r = run_cli({"tutte", fx("arrangement_2x3.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "x^2 + x + y + 1\n");
}

TEST_CASE("charpoly of the arrangement fixture") {
    RunResult r = run_cli({"charpoly", fx("arrangement_2x3.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "t^2 - 3t + 3\n");
}

TEST_CASE("tutte json output re-parses") {
    RunResult r = run_cli({"tutte", fx("running_quotient.json"), "--format", "json"});
    REQUIRE(r.code == 0);
    io::json j = io::json::parse(r.out);
    REQUIRE(j.at("terms").size() == 5);
}

TEST_CASE("zmatroid module table") {
    RunResult r = run_cli({"zmatroid", fx("arrangement_2x3.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("{}: Z\n") != std::string::npos);
    REQUIRE(r.out.find("{3}: Z/2\n") != std::string::npos);
    REQUIRE(r.out.find("{1,2,3}: 0\n") != std::string::npos);
    REQUIRE(r.out.find("square conditions: pass") != std::string::npos);
}

TEST_CASE("duality verdict") {
    RunResult r = run_cli({"duality", fx("arrangement_2x3.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("duality: holds") != std::string::npos);
}

TEST_CASE("square completion report") {
    RunResult r = run_cli({"square", fx("obstructed_square.json")});
    REQUIRE(r.code == 1);
    REQUIRE(r.out.find("candidates: 2") != std::string::npos);
    REQUIRE(r.out.find("satisfiable: no") != std::string::npos);
    size_t n = 0;
    for (size_t pos = r.out.find("not-a-pushout"); pos != std::string::npos;
         pos = r.out.find("not-a-pushout", pos + 1))
        ++n;
    REQUIRE(n == 2);
}

TEST_CASE("validate subcommand") {
    REQUIRE(run_cli({"validate", fx("u23.json")}).code == 0);
    REQUIRE(run_cli({"validate", fx("running_quotient.json")}).code == 0);
    REQUIRE(run_cli({"validate", fx("arrangement_2x3.json")}).code == 0);
}

TEST_CASE("malformed JSON yields exit 2 with a position") {
    std::string path = "/tmp/arimat_broken.json";
    {
        std::ofstream f(path);
        f << "{\n  \"ground\": [\n";
    }
    RunResult r = run_cli({"tutte", path});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("line") != std::string::npos);
}

TEST_CASE("missing file and bad arguments") {
    REQUIRE(run_cli({"tutte", "/nonexistent.json"}).code == 2);
    REQUIRE(run_cli({"frobnicate", "x"}).code == 2);
    REQUIRE(run_cli({}).code == 2);
}
