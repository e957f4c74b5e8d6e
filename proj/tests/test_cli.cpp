#include "doctest.h"

#include "spiral/cli.hpp"
#include "spiral/errors.hpp"
#include "spiral/report.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace spiral;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int status = run_cli(args, out, err, in);
    return {status, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
    auto r = run(args);
    REQUIRE_MESSAGE(r.status == 0, r.err);
    return Json::parse(r.out);
}

const std::vector<std::string> kA1Grading{"--type", "A", "--rank", "1", "--x", "1", "--m", "2", "--eta", "1"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

TEST_CASE("roots prints the datum") {
    auto j = run_json({"roots", "--type", "A", "--rank", "1", "--twist", "1", "--format", "json"});
    CHECK(j["schema"] == "spiral.roots/1");
    CHECK(j["numPositive"] == 1);
    CHECK(j["roots"].size() == 2);
    CHECK(j["killing"][0][0] == "2");
    auto g2 = run_json({"roots", "--type", "G", "--rank", "2"});
    CHECK(g2["numPositive"] == 6);
    auto a2e2 = run_json({"roots", "--type", "A", "--rank", "2", "--twist", "2"});
    CHECK(a2e2["apartmentDim"] == 1);
}

TEST_CASE("relweyl on the principal A1 block") {
    auto j = run_json(with({"relweyl"}, with(kA1Grading, {"--facet-point", "1/4"})));
    CHECK(j["c"] == Json::array({2, 2}));
    CHECK(j["coxeter"][0][1] == "inf");
    CHECK(j["walls"].size() == 2);
    CHECK(j["datum"]["leviType"] == "T");
}

TEST_CASE("block on the principal A1 block") {
    auto j = run_json(with({"block", "--depth", "2"}, kA1Grading));
    CHECK(j["alcoves"].size() == 5);
    // W_{x/m} fixes 1/2 only through the identity among reflections of W_a, so every class is a singleton.
    CHECK(j["groupOrder"] == 1);
    CHECK(j["numClasses"] == 5);
    CHECK(j["classes"][0]["eigenPoint"] == Json::array({"1/2"}));
    for (const auto& c : j["classes"])
        for (const auto& p : c["eigenPoints"]) CHECK(p == c["eigenPoint"]);
    auto at_zero = run_json({"block", "--depth", "2", "--type", "A", "--rank", "1", "--x", "0", "--m", "2"});
    CHECK(at_zero["numClasses"] == 3);
}

TEST_CASE("text output and determinism") {
    auto args = with({"spiral", "--facet", "1/4", "--format", "text"}, kA1Grading);
    auto a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("lambda: [1/2]") != std::string::npos);
    auto r = run({"daha", "eval", "--type", "A", "--rank", "1", "--format", "text"}, "s1*d1\n\n# comment\nt[2]\n");
    CHECK(r.status == 0);
    CHECK(r.out == "-d1*s1 + 4*u\ns2*s1\n");
}

TEST_CASE("spiral documents round-trip") {
    auto d = build_root_datum('C', 2, 1);
    auto g = GradingDatum::make(d, {Rational(1), Rational(0)}, 4, -1);
    Vec y{make_rational(1, 7), make_rational(1, 5)};
    auto s = spiral_of_point(d, g, y, 12);
    auto j = spiral_json(d, s);
    auto back = spiral_from_json(Json::parse(j.dump()));
    CHECK(back.lambda == s.lambda);
    CHECK(back.degrees == s.degrees);
    auto cli = run_json({"spiral", "--type", "C", "--rank", "2", "--x", "1,0", "--m", "4", "--eta", "-1", "--facet",
                         "1/7,1/5", "--window", "12"});
    CHECK(cli == j);
    CHECK_THROWS_AS(spiral_from_json(Json{{"lambda", 1}}), Error);
}

TEST_CASE("registry from the environment") {
    const char* path = "test_cli_registry.json";
    {
        std::ofstream f(path);
        f << R"([{"leviType":"A1","orbitMarks":[2],"systemLabel":"sgn"}])";
    }
    setenv("SPIRAL_REGISTRY", path, 1);
    auto j = run_json({"relweyl", "--type", "A", "--rank", "2", "--facet-point", "1/2,0"});
    unsetenv("SPIRAL_REGISTRY");
    CHECK(j["c"] == Json::array({3, 3}));
    CHECK(run({"relweyl", "--type", "A", "--rank", "2", "--facet-point", "1/2,0"}).status == 2);
    auto v = run_json({"cuspidal", "validate", "--type", "A", "--rank", "2", "--registry", path, "--point", "1/2,0"});
    CHECK(v["registry"].size() == 2);
    CHECK(v["certificate"]["rank"] == 1);
    std::remove(path);
}

TEST_CASE("exit statuses") {
    CHECK(run({}).status == 1);
    CHECK(run({"roots", "--rank", "1"}).status == 1);
    CHECK(run({"roots", "--type", "Q", "--rank", "1"}).status == 1);
    CHECK(run({"roots", "--type", "A", "--rank", "2", "--twist", "3"}).status == 1);
    CHECK(run({"roots", "--type", "A", "--rank", "1", "--format", "xml"}).status == 1);
    CHECK(run({"facet", "--type", "A", "--rank", "2", "--point", "1"}).status == 1);
    CHECK(run({"relweyl", "--type", "A", "--rank", "1", "--facet-point", "0"}).status == 1);
    CHECK(run({"daha", "eval", "--type", "A", "--rank", "1", "--expr", "s1 *"}).status == 1);
    CHECK(run({"spiral", "--type", "A", "--rank", "1", "--x", "1/2", "--m", "2"}).status == 1);
    CHECK(run({"cuspidal", "validate", "--type", "A", "--rank", "1", "--registry", "/nonexistent/r.json"}).status == 2);
    CHECK(run({"block", "--type", "A", "--rank", "2", "--x", "0,0", "--m", "1", "--facet", "1/2,0"}).status == 2);
    CHECK(run({"roots", "--help"}).status == 0);
}
