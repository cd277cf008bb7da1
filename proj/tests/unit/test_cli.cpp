#include "sep_facets/cli.hpp"

#include <nlohmann/json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sep;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("sep_facets_test_" + name)).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("count")
{
    const auto file = temp_path("path2.txt");
    std::ofstream(file) << "3\n0 1\n1 2\n";
    CHECK(run({"count", "--edges", file}).out == "4\n");
    CHECK(run({"count", "--edges", file, "--method", "subgraphs"}).out == "4\n");
    CHECK(run({"count", "--family", "cb:4,2,2"}).out == "32\n");

    const auto json = temp_path("c5.json");
    std::ofstream(json) << R"({"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]]})";
    CHECK(run({"count", "--edges", json}).out == "30\n");

    const auto bad = temp_path("bad.txt");
    std::ofstream(bad) << "2\n0 0\n";
    const auto r = run({"count", "--edges", bad});
    CHECK(r.code == exit_code::usage);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"count"}).code == exit_code::usage);
}

TEST_CASE("formula")
{
    CHECK(run({"formula", "windmill", "7", "3"}).out == "216\n");
    CHECK(run({"formula", "m", "7"}).out == "180\n");
    CHECK(run({"formula", "f", "3", "3", "1"}).out == "18\n");
    CHECK(run({"formula", "cb", "3", "3", "2"}).out == "126\n");
    CHECK(run({"formula", "wedge-cycles", "5", "3", "--tail", "1"}).out == "360\n");
    CHECK(run({"formula", "cycle", "1"}).code == exit_code::usage);
    CHECK(run({"formula", "nope", "1"}).code == exit_code::usage);
}

TEST_CASE("verify")
{
    const auto r = run({"verify", "nn1", "--n", "6"});
    CHECK(r.code == exit_code::ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["max"] == "72");
    CHECK(j["status"] == "verified");

    const auto sweep = nlohmann::json::parse(run({"verify", "fbounds", "--n", "4", "--max-n", "40", "--deterministic"}).out);
    CHECK(sweep["status"] == "verified");
    CHECK(sweep["params"]["runs"].size() == 37);
    CHECK_FALSE(sweep.contains("elapsed_ms"));

    const auto par = nlohmann::json::parse(run({"verify", "disjoint", "--n", "5", "--max-n", "30", "--jobs", "3"}).out);
    CHECK(par["status"] == "verified");

    CHECK(run({"verify", "nn1", "--n", "9"}).code == exit_code::guard);
    CHECK(run({"verify", "nnmax", "--n", "20"}).code == exit_code::ok);
    CHECK(run({"verify", "bogus", "--n", "5"}).code == exit_code::usage);

    const auto out = temp_path("report.json");
    CHECK(run({"verify", "identities", "--n", "50", "--out", out}).code == exit_code::ok);
    CHECK(nlohmann::json::parse(slurp(out))["status"] == "verified");
}

TEST_CASE("sample and enumerate")
{
    const auto a = temp_path("a.csv");
    const auto b = temp_path("b.csv");
    const std::vector<std::string> base{"sample", "--n", "7", "--edges", "9", "--samples", "15", "--seed", "3", "--deterministic"};
    auto with_out = [&](const std::string& path, std::vector<std::string> extra = {}) {
        auto args = base;
        args.push_back("--out");
        args.push_back(path);
        args.insert(args.end(), extra.begin(), extra.end());
        return run(args);
    };
    CHECK(with_out(a).code == exit_code::ok);
    CHECK(with_out(b).code == exit_code::ok);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("# rng=mt19937_64+rejection seed=3", 0) == 0);

    const auto h = temp_path("h.csv");
    CHECK(with_out(h, {"--mode", "histogram"}).code == exit_code::ok);
    CHECK(slurp(h).find("facet_count,frequency") != std::string::npos);
    const auto jl = temp_path("a.jsonl");
    CHECK(with_out(jl, {"--format", "jsonl"}).code == exit_code::ok);
    std::istringstream lines(slurp(jl));
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        CHECK(nlohmann::json::parse(line).is_object());
        ++count;
    }
    CHECK(count == 16);

    CHECK(with_out("/nonexistent/dir/x.csv").code == exit_code::usage);
    CHECK(run({"sample", "--n", "5", "--edges", "2", "--samples", "3", "--seed", "1", "--out", a}).code == exit_code::usage);

    const auto e = temp_path("enum.txt");
    CHECK(run({"enumerate", "--n", "4", "--edges", "3", "--out", e}).out == "2\n");
    const auto text = slurp(e);
    CHECK(text.find("facets=8") != std::string::npos);
    CHECK(run({"enumerate", "--n", "9", "--edges", "9", "--out", e}).code == exit_code::guard);
}
