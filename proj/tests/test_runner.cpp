#include "semiostat/runner.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semiostat/scenario.hpp"

using namespace semiostat;
using namespace semiostat::dsl;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::string kScenarioDir = std::string(SEMIOSTAT_SOURCE_DIR) + "/scenarios/";

std::string temp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("semiostat-test-" + tag);
    std::filesystem::create_directories(dir);
    return dir.string();
}

}  // namespace

TEST_CASE("the bank scenario stabilizes to {financial} with the worked truth table") {
    const auto s = parse_scenario(read_file(kScenarioDir + "bank.scn"));
    const auto report = run_scenario(s, temp_dir("bank"));
    CHECK(report.success);
    CHECK(report.text.find("stabilized at t=1: { financial } = class [financial]") !=
          std::string::npos);
    CHECK(report.text.find("C0: undetermined") != std::string::npos);
    CHECK(report.text.find("C1: validated") != std::string::npos);
    CHECK(report.text.find("C2: validated") != std::string::npos);
    CHECK(report.text.find("category laws: pass") != std::string::npos);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    const auto s = parse_scenario(read_file(kScenarioDir + "bank.scn"));
    const auto a = run_scenario(s, temp_dir("det-a"));
    const auto b = run_scenario(s, temp_dir("det-b"));
    CHECK(a.text == b.text);
}

TEST_CASE("the chicken scenario reaches m1 under case A and m2 under case B") {
    const auto s = parse_scenario(read_file(kScenarioDir + "chicken.scn"));
    const auto report = run_scenario(s, temp_dir("chicken"));
    CHECK(report.success);
    CHECK(report.text.find("stabilized at t=1: { m1 } = class [m1]") != std::string::npos);
    CHECK(report.text.find("stabilized at t=1: { m2 } = class [m2]") != std::string::npos);
}

TEST_CASE("an identity filter stabilizes immediately at X0") {
    const auto s = parse_scenario(
        "scenario idle\nuniverse { a, b }\nfilter nothing { }\n"
        "run disambiguate filter=nothing\n");
    const auto report = run_scenario(s, temp_dir("idle"));
    CHECK(report.success);
    CHECK(report.text.find("stabilized at t=0: { a, b }") != std::string::npos);
}

TEST_CASE("a filter conflicting with declared equivalences aborts with the witness pair") {
    const auto s = parse_scenario(
        "scenario clash\nuniverse { a, b }\nequiv { a ~ b }\n"
        "filter half { a -> drop }\n"
        "run disambiguate filter=half\n");
    const auto report = run_scenario(s, temp_dir("clash"));
    CHECK_FALSE(report.success);
    CHECK(report.text.find("certificate: incompatible") != std::string::npos);
    CHECK(report.text.find("counterexample (a, b)") != std::string::npos);
}

TEST_CASE("equivalent meanings collapse to their representative in the trajectory") {
    const auto s = parse_scenario(
        "scenario merge\nuniverse { S1, S2 }\nequiv { S1 ~ S2 }\nfilter keep { }\n"
        "run disambiguate filter=keep\n");
    const auto report = run_scenario(s, temp_dir("merge"));
    CHECK(report.success);
    CHECK(report.text.find("t=0: { S1 }") != std::string::npos);
}

TEST_CASE("a swapping filter from a partial start set reports a 2-cycle") {
    const auto s = parse_scenario(
        "scenario swap\nuniverse { a, b }\nfilter swap { a -> b, b -> a }\n"
        "run disambiguate filter=swap start=a\n");
    const auto report = run_scenario(s, temp_dir("swap"));
    CHECK(report.success);
    CHECK(report.text.find("cycle of period 2 from t=0") != std::string::npos);
}

TEST_CASE("a named meaning map is applied after the filter and flagged as non-default") {
    const auto s = parse_scenario(
        "scenario fmap\nuniverse { raw, cooked }\n"
        "filter ctx { }\nfilter interpret { raw -> cooked }\n"
        "run disambiguate filter=ctx fmap=interpret\n");
    const auto report = run_scenario(s, temp_dir("fmap"));
    CHECK(report.success);
    CHECK(report.text.find("F: map 'interpret'") != std::string::npos);
    CHECK(report.text.find("stabilized at t=1: { cooked }") != std::string::npos);
}

TEST_CASE("a context cycle aborts the run with a structural error") {
    const auto s = parse_scenario(
        "scenario loop\nuniverse { a }\ncontexts { A <= B, B <= A }\nrun check-laws\n");
    const auto report = run_scenario(s, temp_dir("loop"));
    CHECK_FALSE(report.success);
    CHECK(report.text.find("aborted: error[E_STRUCT]") != std::string::npos);
}

TEST_CASE("iterate-scalar emits a trajectory artifact with the pinned header") {
    const auto dir = temp_dir("scalar");
    const auto s = parse_scenario(
        "scenario numeric\nuniverse { a }\n"
        "run iterate-scalar alpha=0.8 beta=0.5 x0=3 eps=1e-12\n"
        "run fixed-points alpha=0.8 beta=0.6 range=-3,3\n");
    const auto report = run_scenario(s, dir);
    CHECK(report.success);
    REQUIRE(report.artifacts.size() == 1);
    CHECK(report.text.find("certified contraction") != std::string::npos);
    CHECK(report.text.find("converged at t=") != std::string::npos);

    std::ifstream csv(std::filesystem::path(dir) / report.artifacts[0]);
    REQUIRE(csv);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,x");

    // Three fixed points, the middle one repelling.
    CHECK(report.text.find("(repelling, phi' = 1.08)") != std::string::npos);
    const std::string attracting = "(attracting";
    std::size_t count = 0;
    for (std::size_t pos = report.text.find(attracting); pos != std::string::npos;
         pos = report.text.find(attracting, pos + 1))
        ++count;
    CHECK(count == 2);
}

TEST_CASE("check_scenario runs the law suite only") {
    const auto s = parse_scenario(read_file(kScenarioDir + "bank.scn"));
    const auto report = check_scenario(s);
    CHECK(report.success);
    CHECK(report.text.find("category laws: pass") != std::string::npos);
    CHECK(report.text.find("filter sentence_context: compatible") != std::string::npos);
    CHECK(report.text.find("== TRAJECTORY ==") == std::string::npos);
}
