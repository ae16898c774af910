#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string binary() {
    const char* b = std::getenv("HOLOLAB_BIN");
    REQUIRE_MESSAGE(b != nullptr, "HOLOLAB_BIN must point at the CLI binary");
    return b;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = binary() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("exit codes: success, domain rejection, usage error") {
    CHECK(run("dim A2 [1,1]").status == 0);
    CHECK(run("dim A2 [-1,0]").status == 1);       // non-dominant weight
    CHECK(run("dim A2 [1]").status == 2);          // rank mismatch in the weight grammar
    CHECK(run("dim Z9 [1]").status == 2);          // unknown series
    CHECK(run("frobnicate").status == 2);          // unknown subcommand
    CHECK(run("dim").status == 2);                 // missing arguments
    CHECK(run("torsion --dimM 3 --dimX 1 --rankD 2").status == 1);  // negative result
}

TEST_CASE("dimension outputs") {
    CHECK(run("dim A2 [1,1]").out == "8\n");
    CHECK(run("dim A2 [1,2]").out == "15\n");
    CHECK(run("dim C2 [1,1]").out == "16\n");
    CHECK(run("torsion --dimM 4 --dimX 1 --rankD 2").out == "0\n");
}

TEST_CASE("text and JSON agree") {
    auto text = run("legendre A1 [3] --kmax 3");
    REQUIRE(text.status == 0);
    auto js = run("legendre A1 [3] --kmax 3 --json");
    REQUIRE(js.status == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["dim_M"] == 4);
    CHECK(j["g_ind_dim"]["exact"] == 4);
    CHECK(j["conn_space_dim"]["exact"] == 0);
    CHECK(j["torsion_obstruction"]["exact"] == 0);
    CHECK(j["curvature_space"]["exact"] == 8);
    CHECK(text.out.find("dim_M: 4") != std::string::npos);
    CHECK(text.out.find("g_ind_dim: 4") != std::string::npos);
    CHECK(text.out.find("curvature_space: 8") != std::string::npos);

    auto dj = nlohmann::json::parse(run("dim G2 [3,0] --json").out);
    CHECK(dj["dim"] == 77);
    CHECK(run("dim G2 [3,0]").out == "77\n");
}

TEST_CASE("bbw JSON schema") {
    auto j = nlohmann::json::parse(run("bbw A1 x [-3] --json").out);
    CHECK(j["h"]["0"]["exact"] == 0);
    CHECK(j["h"]["1"]["exact"] == 2);
    CHECK(j["euler"] == -2);
    CHECK(j["tier"] == "exact");
}

TEST_CASE("weight and marking round-trip through the CLI") {
    auto j = nlohmann::json::parse(run("screen B3 [0,0,1] --json").out);
    std::string marking = j["candidate"]["marking"];
    CHECK(marking == "oox");
    auto weight = j["candidate"]["weight"];
    std::string back = "[";
    for (size_t i = 0; i < weight.size(); ++i)
        back += (i ? "," : "") + std::to_string(weight[i].get<long long>());
    back += "]";
    CHECK(back == "[0,0,1]");
    auto j2 = nlohmann::json::parse(run("screen B3 " + back + " --json").out);
    CHECK(j2 == j);
}

TEST_CASE("sweep is deterministic across job counts") {
    auto a = run("sweep 2 2 --kmax 3 --jobs 1 --json");
    auto b = run("sweep 2 2 --kmax 3 --jobs 4 --json");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("cache: hit, idempotence, corruption recovery") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hololab_cache_test";
    fs::remove_all(dir);

    std::string base = "legendre B2 [1,0] --kmax 3 --json --cache-dir " + dir.string();
    auto first = run(base + " --verbose", true);
    REQUIRE(first.status == 0);
    CHECK(first.out.find("cache miss") != std::string::npos);

    auto second = run(base + " --verbose", true);
    REQUIRE(second.status == 0);
    CHECK(second.out.find("cache hit") != std::string::npos);

    auto plain1 = run(base);
    auto plain2 = run(base);
    CHECK(plain1.out == plain2.out);

    // corrupt every entry: the CLI must warn and recompute the same answer
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ofstream f(e.path(), std::ios::trunc);
        f << "garbage";
    }
    auto after = run(base + " --verbose", true);
    REQUIRE(after.status == 0);
    CHECK(after.out.find("corrupt cache entry") != std::string::npos);
    auto plain3 = run(base);
    CHECK(plain3.out == plain1.out);
    fs::remove_all(dir);
}

TEST_CASE("kodaira subcommand") {
    auto j = nlohmann::json::parse(run("kodaira A1 x --piece [1]x4 --json").out);
    CHECK(j["verdict"] == "one_flat_structure");
    CHECK(j["g_dim"]["exact"] == 19);
    auto j2 = nlohmann::json::parse(run("kodaira A1 x --piece [2] --json").out);
    CHECK(j2["verdict"] == "inconclusive");
    CHECK(j2["obstruction1"]["exact"] == 1);
}

TEST_CASE("table subcommand flags the unresolved rows") {
    auto t = run("table");
    REQUIRE(t.status == 0);
    CHECK(t.out.find("MISMATCH") != std::string::npos);
    auto j = nlohmann::json::parse(run("table --json").out);
    REQUIRE(j.is_array());
    int mismatches = 0;
    for (const auto& row : j) mismatches += row["mismatch"].get<bool>() ? 1 : 0;
    CHECK(mismatches == 2);
}
