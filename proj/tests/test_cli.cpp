#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "psba/cli.hpp"
#include "psba/generators.hpp"
#include "psba/instance.hpp"
#include "psba/io.hpp"

using namespace psba;
using testutil::crossing_instance;

namespace {

std::string temp_file(const std::string& name, const std::string& text) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / ("psba_cli_" + name);
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("usage errors exit with code 2, help with 0") {
    CliRun help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
    CHECK(help.out.find("gen") != std::string::npos);

    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"solve"}).code == 2); // --input is required
    CHECK(cli({"solve", "--input", "x.json", "--algorithm", "nope"}).code == 2);
    CHECK(cli({"solve", "--input", "x.json", "--bogus"}).code == 2);
}

TEST_CASE("solve prints the committed solution") {
    std::string input = temp_file("crossing.json", serialize_instance(crossing_instance()));
    CliRun run = cli({"solve", "--input", input, "--algorithm", "general"});
    REQUIRE(run.code == 0);
    SolutionFile solution = parse_solution(run.out);
    CHECK(solution.algorithm == "general");
    CHECK(solution.total == Slot{9});
    REQUIRE(solution.placements.size() == 2);
    CHECK(solution.placements[0] == std::pair<std::string, Slot>{"e1", 8});
    CHECK(solution.placements[1] == std::pair<std::string, Slot>{"e2", 2});
    CHECK(solution.per_agent ==
          std::vector<std::pair<std::string, Slot>>{{"a1", 4}, {"a2", 5}});

    CliRun brute = cli({"solve", "--input", input, "--algorithm", "brute"});
    REQUIRE(brute.code == 0);
    SolutionFile exact = parse_solution(brute.out);
    CHECK(exact.total == Slot{9});
    CHECK(exact.placements[0] == std::pair<std::string, Slot>{"e1", 3});
    CHECK(exact.placements[1] == std::pair<std::string, Slot>{"e2", 8});
}

TEST_CASE("solve writes requested files") {
    std::string input = temp_file("crossing_files.json", serialize_instance(crossing_instance()));
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    std::string out_path = (dir / "psba_cli_solution.json").string();
    std::string svg_path = (dir / "psba_cli_picture.svg").string();
    CliRun run = cli({"solve", "--input", input, "--out", out_path, "--svg", svg_path});
    REQUIRE(run.code == 0);
    CHECK(run.out.empty());
    SolutionFile solution = parse_solution(slurp(out_path));
    CHECK(solution.total == Slot{9});
    std::string svg = slurp(svg_path);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("a1 (4)") != std::string::npos);
    CHECK(svg.find("a2 (5)") != std::string::npos);
}

TEST_CASE("solve rejects broken inputs with a pointed message") {
    CHECK(cli({"solve", "--input", "/nonexistent/psba.json"}).code == 2);

    std::string garbage = temp_file("garbage.json", "{ not json");
    CHECK(cli({"solve", "--input", garbage}).code == 2);

    std::string invalid = temp_file(
        "invalid.json",
        R"({"timeline_length":4,"events":[{"id":"e","length":2}],)"
        R"("agents":[{"id":"a","jobs":[{"release":2,"deadline":3,"processing":3}]}]})");
    CliRun run = cli({"solve", "--input", invalid});
    CHECK(run.code == 2);
    CHECK(run.err.find("invalid instance") != std::string::npos);
    CHECK(run.err.find("agents[0].jobs[0]") != std::string::npos);
}

TEST_CASE("the one-event algorithm insists on one event") {
    std::string two = temp_file("two_events.json", serialize_instance(crossing_instance()));
    CliRun rejected = cli({"solve", "--input", two, "--algorithm", "one-event"});
    CHECK(rejected.code == 2);
    CHECK(rejected.err.find("one-event") != std::string::npos);

    Instance single = crossing_instance();
    single.events.erase(single.events.begin());
    std::string one = temp_file("one_event.json", serialize_instance(single));
    CliRun run = cli({"solve", "--input", one, "--algorithm", "one-event"});
    REQUIRE(run.code == 0);
    SolutionFile solution = parse_solution(run.out);
    CHECK(solution.total == Slot{5});
    CHECK(solution.placements == std::vector<std::pair<std::string, Slot>>{{"e2", 2}});
}

TEST_CASE("budget overruns exit with code 3") {
    std::string input = temp_file("budgeted.json", serialize_instance(crossing_instance()));
    CliRun poly = cli({"solve", "--input", input, "--algorithm", "greedy-poly", "--budget", "5"});
    CHECK(poly.code == 3);
    CHECK(!poly.err.empty());
    CliRun brute = cli({"solve", "--input", input, "--algorithm", "brute", "--budget", "5"});
    CHECK(brute.code == 3);
}

TEST_CASE("agreement recomputes and verifies solution files") {
    std::string input = temp_file("agree_instance.json", serialize_instance(crossing_instance()));
    SolutionFile stated;
    stated.algorithm = "general";
    stated.placements = {{"e1", 3}, {"e2", 8}};
    stated.per_agent = {{"a1", 5}, {"a2", 4}};
    stated.total = 9;
    std::string solution = temp_file("agree_solution.json", serialize_solution(stated));
    CliRun run = cli({"agreement", "--input", input, "--solution", solution, "--verify"});
    CHECK(run.code == 0);
    SolutionFile echoed = parse_solution(run.out);
    CHECK(echoed.total == Slot{9});

    stated.total = 8;
    std::string wrong_total = temp_file("agree_bad_total.json", serialize_solution(stated));
    CliRun mismatch = cli({"agreement", "--input", input, "--solution", wrong_total, "--verify"});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("total mismatch: stated 8, computed 9") != std::string::npos);
    // Without --verify the stated numbers are ignored.
    CHECK(cli({"agreement", "--input", input, "--solution", wrong_total}).code == 0);

    stated.total = 9;
    stated.per_agent = {{"a1", 2}, {"ghost", 1}};
    std::string wrong_agents = temp_file("agree_bad_agents.json", serialize_solution(stated));
    CliRun agents = cli({"agreement", "--input", input, "--solution", wrong_agents, "--verify"});
    CHECK(agents.code == 1);
    CHECK(agents.err.find("\"a1\" mismatch: stated 2, computed 5") != std::string::npos);
    CHECK(agents.err.find("unknown agent \"ghost\"") != std::string::npos);

    stated.per_agent = {{"a1", 5}};
    stated.placements = {{"e1", 99}};
    std::string bad_start = temp_file("agree_bad_start.json", serialize_solution(stated));
    CHECK(cli({"agreement", "--input", input, "--solution", bad_start}).code == 2);
}

TEST_CASE("gen emits instances on stdout or to a file") {
    CliRun run = cli({"gen", "--seed", "7", "--agents", "2", "--events", "2", "--timeline", "12"});
    REQUIRE(run.code == 0);
    Instance instance = parse_instance(run.out);
    CHECK(validate(instance).ok());
    CHECK(instance.agents.size() == 2);
    CHECK(instance.events.size() == 2);
    CHECK(instance.timeline_length == 12);

    CliRun again = cli({"gen", "--seed", "7", "--agents", "2", "--events", "2", "--timeline", "12"});
    CHECK(again.out == run.out);

    std::string out_path =
        (std::filesystem::temp_directory_path() / "psba_cli_gen.json").string();
    CliRun to_file = cli({"gen", "--seed", "3", "--out", out_path});
    REQUIRE(to_file.code == 0);
    CHECK(validate(parse_instance(slurp(out_path))).ok());
}

TEST_CASE("gen partition family") {
    CliRun run = cli({"gen", "--family", "partition", "--sizes", "1,1,2"});
    REQUIRE(run.code == 0);
    CHECK(run.out == serialize_instance(gen_partition({1, 1, 2})));

    CHECK(cli({"gen", "--family", "partition"}).code == 2);
    CliRun odd = cli({"gen", "--family", "partition", "--sizes", "1,2"});
    CHECK(odd.code == 2);
    CHECK(!odd.err.empty());
    CHECK(cli({"gen", "--family", "bogus"}).code == 2);
}

TEST_CASE("bench prints one CSV block per input in order") {
    std::string a = temp_file("bench_a.json", serialize_instance(crossing_instance()));
    std::string b = temp_file("bench_b.json", serialize_instance(crossing_instance(3, 2)));
    std::string broken = temp_file("bench_broken.json", "nope");
    CliRun run = cli({"bench", "--inputs", a, b, broken, "--algorithm", "general",
                      "--algorithm", "greedy-poly", "--with-opt", "--threads", "2"});
    REQUIRE(run.code == 0);
    std::istringstream lines(run.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "instance,algorithm,total,opt,ratio,ms,flow_calls,oracle_calls");
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        rows.push_back(line);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].rfind(a + ",general,9,9,1.0000,", 0) == 0);
    CHECK(rows[1].rfind(a + ",greedy-poly,9,9,1.0000,", 0) == 0);
    CHECK(rows[2].rfind(b + ",general,", 0) == 0);
    CHECK(rows[4] == broken + ",general,error,,,,,");
    CHECK(rows[5] == broken + ",greedy-poly,error,,,,,");
}

TEST_CASE("bench leaves opt and ratio blank when the exhaustive pass is over budget") {
    std::string input = temp_file("bench_budget.json", serialize_instance(crossing_instance()));
    CliRun run = cli({"bench", "--inputs", input, "--with-opt", "--budget", "5"});
    REQUIRE(run.code == 0);
    CHECK(run.out.find(",general,9,,,") != std::string::npos);

    CliRun unknown = cli({"bench", "--inputs", input, "--algorithm", "mystery"});
    REQUIRE(unknown.code == 0);
    CHECK(unknown.out.find(",mystery,error,") != std::string::npos);
}
