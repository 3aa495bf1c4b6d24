#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <sys/wait.h>

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with the given arguments; stderr is discarded
// unless the caller folds it into stdout via the suffix.
RunResult run(const std::string& args, const std::string& prefix = "",
              const std::string& suffix = " 2>/dev/null") {
    const std::string cmd = prefix + QTILT_BIN + " " + args + suffix;
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.out.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path path;

    TempDir() {
        path = fs::temp_directory_path() /
               ("qtilt-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("decompose fixtures") {
    {
        const RunResult r = run("decompose --l 5 --p 3 --format json 4,0 4,0");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("verified") == true);
        REQUIRE(j.at("summands").size() == 3);
        long long total = 0;
        for (const auto& s : j.at("summands")) {
            CHECK(s.at("mult") == 1);
            CHECK(s.at("tilting") == true);
            total += s.at("dimension").get<long long>();
        }
        CHECK(total == 25);
    }
    {
        const RunResult r = run("decompose --l 3 --p 2 --format json 2,0 2,0");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        REQUIRE(j.at("summands").size() == 2);
        CHECK(j.at("summands")[0].at("dimension").get<long long>() +
                  j.at("summands")[1].at("dimension").get<long long>() ==
              9);
    }
    {
        const RunResult r = run("decompose --l 5 --p 3 4,0 4,0");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("1 * t[(8,0)]  (dim 10)") != std::string::npos);
        CHECK(r.out.find("1 * t[(7,1)]  (dim 10)") != std::string::npos);
        CHECK(r.out.find("1 * t[(6,2)]  (dim 5)") != std::string::npos);
    }
    {
        // --no-verify skips the conservation cross-check and says so.
        const RunResult r = run("decompose --l 2 --p 3 --no-verify --format json 3,0 3,0");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("verified") == false);
        REQUIRE(j.at("summands").size() == 2);
    }
    {
        // The layer trace is part of the JSON report.
        const RunResult r = run("decompose --l 3 --p 2 --format json 5,0 5,0");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        REQUIRE(j.at("layers").size() == 2);
        CHECK(j.at("layers")[0].at("level") == -1);
        CHECK(j.at("layers")[0].at("modulus") == 3);
        CHECK(j.at("layers")[1].at("level") == 0);
        CHECK(j.at("layers")[1].at("modulus") == 2);
    }
}

TEST_CASE("character fixtures") {
    {
        const RunResult r = run("character weyl 2,0 --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("dimension") == 3);
        CHECK(j.at("kind") == "weyl");
    }
    {
        const RunResult r = run("character tilting 8,0 --l 5 --format json");
        REQUIRE(r.exit_code == 0);
        CHECK(Json::parse(r.out).at("dimension") == 10);
    }
    {
        const RunResult r = run("character simple 5,0 --l 3 --p 2 --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("dimension") == 6);
        // All six weight lines of the full Weyl orbit appear.
        CHECK(j.at("character").size() == 6);
    }
    {
        const RunResult r = run("character simple 5,0 --l 3 --p 2");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("dimension: 6") != std::string::npos);
    }
    {
        const RunResult r = run("character label \"2,0;2,0\" --l 3 --p 2 --format json");
        REQUIRE(r.exit_code == 0);
        CHECK(Json::parse(r.out).at("dimension") == 12);
    }
}

TEST_CASE("relations and identities") {
    {
        const RunResult r = run("relations --l 2 --p 3 --n 1 --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("pass") == true);
        CHECK(j.at("det_relation_vanishes") == true);
        CHECK(j.at("literal_det_relation_vanishes") == false);
        REQUIRE(j.at("generators").size() == 3);
        for (const auto& gen : j.at("generators")) {
            CHECK(gen.at("vanishes") == true);
        }
    }
    {
        const RunResult r = run("relations --l 3 --p 2 --n 2");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("pass (4 generators)") != std::string::npos);
    }
    {
        const RunResult r = run("identities --l 3 --p 2");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("4/4 identities pass") != std::string::npos);
    }
    {
        const RunResult r = run("identities --l 7 --p 5 --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("pass") == true);
    }
}

TEST_CASE("reduced subcommand") {
    {
        const RunResult r = run("reduced --l 2 --p 3 --n 0 --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("radical") == true);
        CHECK(j.at("exact") == true);
    }
    {
        const RunResult r = run("reduced --l 2 --p 3 --n 1 --seed 9 --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("radical") == true);
        CHECK(j.at("exact") == false);
        CHECK(j.at("seed") == 9);
        CHECK(j.at("samples") == j.at("full_rank"));
    }
    {
        const RunResult r = run("reduced --l 2 --p 3 --n 1 --seed 9");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("radical: true (sampled evidence)") != std::string::npos);
    }
}

TEST_CASE("json output is pure and byte-deterministic") {
    const std::string args[] = {
        "decompose --l 2 --p 3 --format json 7,0 7,0",
        "character tilting 9,0 --l 2 --format json",
        "relations --l 2 --p 3 --n 0 --format json",
        "reduced --l 3 --p 2 --n 1 --seed 4 --format json",
    };
    for (const std::string& a : args) {
        const RunResult first = run(a);
        const RunResult second = run(a);
        REQUIRE(first.exit_code == 0);
        CHECK(first.out == second.out);
        // stdout holds exactly one JSON document.
        const Json j = Json::parse(first.out);
        CHECK(j.is_object());
        CHECK(first.out == j.dump() + "\n");
    }
}

TEST_CASE("exit codes") {
    CHECK(run("decompose --l 2 --p 3 4,x 1,0").exit_code == 2);  // malformed weight
    CHECK(run("decompose --l 2 --p 3 4,0").exit_code == 2);      // missing operand
    CHECK(run("nonsense").exit_code == 2);                       // unknown subcommand
    CHECK(run("decompose --l 6 --p 3 1,0 1,0").exit_code == 2);  // invalid parameters
    CHECK(run("character tilting 0,1 --l 2").exit_code == 2);    // non-dominant weight
    CHECK(run("table --max 0 --cache /dev/null/sub").exit_code == 4);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("decompose --help").exit_code == 0);
}

TEST_CASE("table subcommand with cache reuse") {
    TempDir tmp;
    const std::string cache = tmp.path.string();
    {
        const RunResult r =
            run("table --l 2 --p 3 --max 4 --cache " + cache + " --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("labels") == 7);
        CHECK(j.at("records") == 28);
        CHECK(j.at("reused") == 0);
        CHECK(j.at("recomputed") == 28);
        CHECK(fs::exists(fs::path(j.at("file").get<std::string>())));
    }
    {
        // Complete cache: a rerun recomputes nothing.
        const RunResult r =
            run("table --l 2 --p 3 --max 4 --cache " + cache + " --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("reused") == 28);
        CHECK(j.at("recomputed") == 0);
    }
    {
        // --max 0 keeps only the unit row.
        const RunResult r =
            run("table --l 3 --p 2 --max 0 --cache " + cache + " --format json");
        REQUIRE(r.exit_code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j.at("labels") == 1);
        CHECK(j.at("records") == 1);
    }
}

TEST_CASE("QTILT_CACHE overrides the cache flag") {
    TempDir flagged;
    TempDir env;
    const RunResult r = run(
        "table --l 2 --p 3 --max 0 --cache " + flagged.path.string() + " --format json",
        "QTILT_CACHE=" + env.path.string() + " ");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(fs::exists(env.path / "table-l2-p3.jsonl"));
    CHECK(!fs::exists(flagged.path / "table-l2-p3.jsonl"));
    CHECK(j.at("file").get<std::string>().find(env.path.string()) == 0);
}

TEST_CASE("logs go to stderr, not stdout") {
    TempDir tmp;
    const RunResult pure = run("table --l 2 --p 3 --max 2 --cache " + tmp.path.string() +
                               " --format json");
    REQUIRE(pure.exit_code == 0);
    const Json parsed = Json::parse(pure.out);
    CHECK(parsed.is_object());
    // With stderr folded in, the log lines appear.
    TempDir tmp2;
    const RunResult merged = run("table --l 2 --p 3 --max 2 --cache " +
                                     tmp2.path.string() + " --format json",
                                 "", " 2>&1");
    CHECK(merged.out.size() > pure.out.size());
}
