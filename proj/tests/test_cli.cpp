// End-to-end CLI checks: spawn the dwm binary (path in DWM_BIN), verify exit
// codes, key JSON fields, and report determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("DWM_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string data_path(const std::string& name) {
    const char* d = std::getenv("DWM_DATA");
    REQUIRE(d != nullptr);
    return std::string(d) + "/" + name;
}

nlohmann::json result_of(const RunResult& r) {
    auto j = nlohmann::json::parse(r.out);
    return j.at("result");
}

}  // namespace

TEST_CASE("group subcommand") {
    auto r = run("group S:3 classes");
    CHECK(r.code == 0);
    auto res = result_of(r);
    CHECK(res.at("order") == 6);
    CHECK(res.at("class_count") == 3);

    auto c = run("group S:3 centralizer (12)");
    CHECK(c.code == 0);
    CHECK(result_of(c).at("centralizer_order") == 2);

    CHECK(run("group SL2:4").code == 2);  // not prime
    CHECK(run("group bogus").code == 2);
}

TEST_CASE("dw labels matches the table counts") {
    auto r = run("dw labels --group S:3 --surface torus");
    CHECK(r.code == 0);
    CHECK(result_of(r).at("count") == 21);
    CHECK(result_of(run("dw labels --group S:3 --surface circle")).at("count") == 8);
    CHECK(result_of(run("dw labels --group S:3 --surface sphere")).at("count") == 3);
}

TEST_CASE("homs subcommand with a presentation file") {
    auto r = run("homs --group S:3 --pres " + data_path("torus.pres") + " --classes");
    CHECK(r.code == 0);
    auto res = result_of(r);
    CHECK(res.at("homs") == 18);
    CHECK(res.at("classes") == 8);
}

TEST_CASE("dw dimred verifies and exits 0") {
    auto r = run("dw dimred --group S:3 --surface torus");
    CHECK(r.code == 0);
    auto res = result_of(r);
    CHECK(res.at("bijective") == true);
    CHECK(res.at("lhs_dim") == res.at("rhs_dim"));
    auto r2 = run("dw dimred --group Q8 --surface torus --check-intertwiner " +
                  data_path("torus_S.endo"));
    CHECK(r2.code == 0);
    CHECK(result_of(r2).at("intertwiner_ok") == true);
}

TEST_CASE("dw colorings with fixtures") {
    auto r = run("dw colorings --group Z:2 --tri " + data_path("torus7.tri.json") +
                 " --verify-lemma1");
    CHECK(r.code == 0);
    auto res = result_of(r);
    CHECK(res.at("colorings") == 256);
    CHECK(res.at("lemma1").at("ok") == true);

    auto r2 = run("dw colorings --group S:3 --tri " + data_path("circle3.tri.json") +
                  " --verify-idempotent");
    CHECK(r2.code == 0);
    CHECK(result_of(r2).at("idempotent").at("blocks") == 3);
}

TEST_CASE("motion subcommands") {
    auto r = run("motion rep --link torus:3,2,2 --group S:3 --flux (12),e "
                 "--emit-permutations --verify-relations");
    CHECK(r.code == 0);
    auto res = result_of(r);
    CHECK(res.at("dim") == 2);
    CHECK(res.at("all_relations_ok") == true);

    auto r2 = run("motion thm2 --link torus:3,2,2 --group S:3 --flux (12),e");
    CHECK(r2.code == 0);
    CHECK(result_of(r2).at("lhs_dim") == result_of(r2).at("rhs_total"));

    auto r3 = run("motion psi --link torus:3,2,2 --group Z:6 --flux 0,0");
    CHECK(r3.code == 0);

    auto r4 = run("motion necklace --group S:3 --n 2 --labels e,(123),e");
    CHECK(r4.code == 0);
    CHECK(result_of(r4).at("images_equal") == true);

    CHECK(run("motion rep --link torus:2,2,2 --group S:3 --flux e,e").code == 2);
}

TEST_CASE("chars verify") {
    auto r = run("chars verify --d 2 --p 3");
    CHECK(r.code == 0);
    auto res = result_of(r);
    CHECK(res.at("ok") == true);
    CHECK(res.at("classes") == 7);
    CHECK(res.at("max_residual").get<double>() < 1e-9);

    auto csv = run("chars verify --d 3 --p 2 --csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("tag,params,lhs") == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    auto a = run("dw labels --group S:3 --surface torus");
    auto b = run("dw labels --group S:3 --surface torus");
    CHECK(a.out == b.out);
    auto c = run("motion rep --link torus:3,2,2 --group S:3 --flux (12),e --emit-permutations");
    auto d = run("motion rep --link torus:3,2,2 --group S:3 --flux (12),e --emit-permutations");
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate").code == 2);
    CHECK(run("homs --group S:3").code == 2);          // missing --pres
    CHECK(run("motion rep --link torus:3,2,2 --group S:3 --flux zz,e").code == 2);
}
