#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "hookpath/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"hookpath"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return hookpath::cli_main(static_cast<int>(argv.size()), argv.data());
}

int run_capture(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int rc = run(args);
    std::cout.rdbuf(old);
    out = captured.str();
    return rc;
}

std::string slurp(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hookpath_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify", "--p", "4"}) == 2);
    CHECK(run({"verify", "--p", "2"}) == 2);
    CHECK(run({"nonsense"}) == 2);
    CHECK(run({}) == 2);
    CHECK(run({"verify"}) == 2);  // --p required
    CHECK(run({"verify", "--p", "3", "--suite", "bogus"}) == 2);
    CHECK(run({"show", "--what", "bogus", "--p", "3"}) == 2);
    CHECK(run({"show", "--what", "fib", "--p", "3", "--k", "0", "--floor", "3"}) == 2);
}

TEST_CASE("a small verification run passes every suite") {
    TempDir tmp;
    fs::path out = tmp.path / "report.ndjson";
    CHECK(run({"verify", "--p", "3", "--k", "0,1", "--max-floor", "9", "--out",
               out.string()}) == 0);
    std::string report = slurp(out);
    CHECK(report.find("\"type\":\"summary\"") != std::string::npos);
    CHECK(report.find("\"failures\":0") != std::string::npos);
    CHECK(report.find("\"status\":\"fail\"") == std::string::npos);
    // Every row is one JSON object per line with the schema tag.
    std::istringstream lines(report);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find("\"schema\":1") != std::string::npos);
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
        ++rows;
    }
    CHECK(rows > 10);
}

TEST_CASE("oversized runs are refused without --force") {
    CHECK(run({"verify", "--p", "7", "--k", "3", "--max-floor", "22"}) == 3);
    // The guard only applies to enumeration suites.
    TempDir tmp;
    fs::path out = tmp.path / "genfun.ndjson";
    CHECK(run({"verify", "--p", "7", "--k", "3", "--max-floor", "22", "--suite",
               "genfun", "--out", out.string()}) == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    TempDir tmp;
    fs::path a = tmp.path / "a.ndjson", b = tmp.path / "b.ndjson";
    CHECK(run({"verify", "--p", "5", "--k", "0,2", "--max-floor", "11", "--out",
               a.string()}) == 0);
    CHECK(run({"verify", "--p", "5", "--k", "0,2", "--max-floor", "11", "--out",
               b.string(), "--parallelism", "1"}) == 0);
    std::string ra = slurp(a), rb = slurp(b);
    CHECK(!ra.empty());
    CHECK(ra == rb);
}

TEST_CASE("the text format carries the same verdicts") {
    TempDir tmp;
    fs::path out = tmp.path / "report.txt";
    CHECK(run({"verify", "--p", "3", "--k", "1", "--max-floor", "10", "--format",
               "text", "--out", out.string()}) == 0);
    std::string report = slurp(out);
    CHECK(report.find("[pass]") != std::string::npos);
    CHECK(report.find("[FAIL]") == std::string::npos);
    CHECK(report.find("summary:") != std::string::npos);
}

TEST_CASE("show prints the golden polynomial and paths") {
    std::string out;
    CHECK(run_capture({"show", "--what", "poly", "--p", "3", "--k", "0", "--floor",
                       "4", "--l", "0"},
                      out) == 0);
    CHECK(out == "q^2 + 3q + 2\n");
    CHECK(run_capture({"show", "--what", "paths", "--p", "3", "--k", "0", "--floor",
                       "4", "--l", "0"},
                      out) == 0);
    CHECK(out.find("start 0  m=[0,2,0]  descents={1,3}  inv=2") != std::string::npos);
    CHECK(run_capture({"show", "--what", "fib", "--p", "5", "--k", "2", "--floor",
                       "10", "--l", "0"},
                      out) == 0);
    CHECK(out == "202\n");
    CHECK(run_capture({"show", "--what", "genfun", "--p", "3", "--k", "0", "--terms",
                       "4"},
                      out) == 0);
    CHECK(out == "5 27 117 459\n");
    CHECK(run_capture({"show", "--what", "vertex", "--p", "3", "--k", "0", "--floor",
                       "4", "--l", "0", "--format", "json"},
                      out) == 0);
    CHECK(out.find("\"size\":\"7\"") != std::string::npos);
    CHECK(out.find("\"hook\":[\"4\",\"3\"]") != std::string::npos);
}

TEST_CASE("the cache directory is populated and reused") {
    TempDir tmp;
    ::setenv("HOOKPATH_CACHE_DIR", tmp.path.c_str(), 1);
    fs::path a = tmp.path / "a.ndjson", b = tmp.path / "b.ndjson";
    CHECK(run({"verify", "--p", "3", "--k", "1", "--max-floor", "10", "--suite",
               "fibonacci", "--out", a.string()}) == 0);
    bool saw_fib_file = false;
    for (const auto& entry : fs::directory_iterator(tmp.path)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("fib_p3_k1_", 0) == 0) saw_fib_file = true;
    }
    CHECK(saw_fib_file);
    CHECK(run({"verify", "--p", "3", "--k", "1", "--max-floor", "10", "--suite",
               "fibonacci", "--out", b.string()}) == 0);
    CHECK(slurp(a) == slurp(b));
    ::unsetenv("HOOKPATH_CACHE_DIR");
}
