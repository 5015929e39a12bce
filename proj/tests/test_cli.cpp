#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcat/cli.hpp"

using namespace qcat;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run qcat_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string model(const char* name) { return std::string(QCAT_SOURCE_DIR) + "/models/" + name; }

// Whitespace split with single-quoted groups.
std::vector<std::string> shell_words(const std::string& line) {
    std::vector<std::string> words;
    std::string cur;
    bool quoted = false, any = false;
    for (char c : line) {
        if (c == '\'') {
            quoted = !quoted;
            any = true;
        } else if (!quoted && (c == ' ' || c == '\t')) {
            if (any) words.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += c;
            any = true;
        }
    }
    if (any) words.push_back(cur);
    return words;
}

std::string rstrip(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
    return s;
}

struct DocExample {
    std::string command;
    std::vector<std::string> expected;
};

std::vector<DocExample> readme_examples() {
    std::ifstream f(std::string(QCAT_SOURCE_DIR) + "/README.md");
    std::vector<DocExample> out;
    std::string line;
    bool console = false;
    while (std::getline(f, line)) {
        if (line.rfind("```", 0) == 0) {
            console = line == "```console";
            continue;
        }
        if (!console) continue;
        if (line.rfind("$ qcat ", 0) == 0)
            out.push_back({line.substr(2), {}});
        else if (!out.empty() && rstrip(line) != "..." && !rstrip(line).empty())
            out.back().expected.push_back(rstrip(line));
    }
    return out;
}

} // namespace

TEST_CASE("secular command prints the shifted quartic") {
    auto r = qcat_run({"secular", "--model", model("nnim4.json"), "--shift", "2", "--even"});
    CHECK(r.code == 0);
    CHECK(r.out == "E^4 + (alpha^2 + 2*beta^2 - 3)*E^2 + (beta^4 - 2*beta^2 + 1)\n");
    CHECK(r.err.empty());
}

TEST_CASE("exit codes") {
    CHECK(qcat_run({}).code == 2);
    CHECK(qcat_run({"spectrum"}).code == 2);
    CHECK(qcat_run({"spectrum", "--model", model("missing.json")}).code == 2);
    CHECK(qcat_run({"spectrum", "--model", "{\"family\":\"gpm\",\"dim\":2,\"params\":{\"a\":null}}"}).code == 2);
    CHECK(qcat_run({"spectrum", "--model", model("gpm4.json"), "--set", "gamma=1"}).code == 2);
    CHECK(qcat_run({"spectrum", "--model", model("bim10.json"), "--format", "ppm"}).code == 2);
    // an odd polynomial after the shift is a computation error
    CHECK(qcat_run({"secular", "--model", model("nnim4.json"), "--even"}).code == 3);
    // no metric for a complex spectrum
    CHECK(qcat_run({"metric", "--model", model("hamal.json"), "--set", "beta=2"}).code == 3);
    auto help = qcat_run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("scan") != std::string::npos);
}

TEST_CASE("spectrum, build and robin produce data on stdout only") {
    auto s = qcat_run({"spectrum", "--model", model("zaklad10.json"), "--set", "t=1", "--format", "csv"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("re,im\n2,0\n", 0) == 0);
    auto b = qcat_run({"build", "--model", model("hamal.json"), "--format", "json"});
    CHECK(b.code == 0);
    CHECK(b.out.find("\"pt_residual\": 0.0") != std::string::npos);
    auto rb = qcat_run({"robin", "--model", model("bim10.json"), "--format", "json"});
    CHECK(rb.code == 0);
    CHECK(rb.err.empty());
}

TEST_CASE("scan output does not depend on the thread count") {
    std::vector<std::string> args{"scan", "--model", model("gpm4.json"), "--box", "-2:2,-2:2", "--res", "40"};
    auto a = qcat_run(args);
    args.insert(args.end(), {"--threads", "3"});
    auto b = qcat_run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("P5\n40 40\n255\n", 0) == 0);
    auto eq = qcat_run({"scan", "--model", model("gpm4.json"), "--box=-2:2,-2:2", "--res", "40"});
    CHECK(eq.out == a.out);
}

TEST_CASE("README examples") {
    auto examples = readme_examples();
    REQUIRE(examples.size() >= 5);
    const auto tmp = std::filesystem::temp_directory_path() / "qcat_doc_test";
    std::filesystem::create_directories(tmp);
    const auto cwd = std::filesystem::current_path();
    std::filesystem::current_path(QCAT_SOURCE_DIR);
    for (const auto& ex : examples) {
        CAPTURE(ex.command);
        auto words = shell_words(ex.command);
        REQUIRE(words.size() > 1);
        std::vector<std::string> args(words.begin() + 1, words.end());
        for (std::size_t k = 0; k + 1 < args.size(); ++k)
            if (args[k] == "--output") args[k + 1] = (tmp / std::filesystem::path(args[k + 1]).filename()).string();
        auto r = qcat_run(args);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
        std::istringstream is(r.out);
        std::vector<std::string> got;
        for (std::string l; std::getline(is, l);) got.push_back(rstrip(l));
        for (const auto& want : ex.expected) {
            CAPTURE(want);
            CHECK(std::find(got.begin(), got.end(), want) != got.end());
        }
    }
    std::filesystem::current_path(cwd);
}
