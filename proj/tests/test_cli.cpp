#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string tmp_dir() { return std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp"; }

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = tmp_dir() + "/cind_cli_test_out.txt";
    std::string cmd = std::string(CIND_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, ss.str()};
}

std::string write_graph(const std::string& name, const std::string& content) {
    std::string path = tmp_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("gen produces the necklace") {
    auto res = run("gen necklace 8");
    CHECK(res.code == 0);
    CHECK(!res.out.empty());
    auto el = run("gen necklace 2 --format edgelist");
    CHECK(el.code == 0);
    CHECK(el.out.substr(0, 4) == "8 12");
}

TEST_CASE("exact on the prism") {
    std::string path = write_graph("prism.el", "6 9\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n0 3\n1 4\n2 5\n");
    auto res = run("exact " + path);
    CHECK(res.code == 0);
    CHECK(res.out.find("\"size\":4") != std::string::npos);
    CHECK(res.out.find("\"optimal\":true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("greedy output carries the rational bound") {
    std::string path = write_graph("k4.g6", "C~\n");
    auto res = run("greedy " + path);
    CHECK(res.code == 0);
    CHECK(res.out.find("\"bound_numerator\":3") != std::string::npos);
    CHECK(res.out.find("\"bound_denominator\":2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify failure names the vertex and exits 1") {
    std::string path = write_graph("k4v.g6", "C~\n");
    auto bad = run("verify " + path + " --set 0,1,2,3");
    CHECK(bad.code == 1);
    auto good = run("verify " + path + " --set 0,1,2");
    CHECK(good.code == 0);
    CHECK(good.out.find("\"ok\":true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("clawfree subcommand") {
    auto gen = run("gen tightness 1");
    REQUIRE(gen.code == 0);
    std::string path = write_graph("g1.g6", gen.out);
    auto res = run("clawfree " + path);
    CHECK(res.code == 0);
    CHECK(res.out.find("\"threshold\":36") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("reduce writes the gadget and sidecar") {
    std::string path = write_graph("k4r.g6", "C~\n");
    std::string side = tmp_dir() + "/k4r.cv.json";
    auto res = run("reduce " + path + " --map " + side);
    CHECK(res.code == 0);
    std::ifstream sidecar(side);
    REQUIRE(sidecar.good());
    std::ostringstream ss;
    ss << sidecar.rdbuf();
    CHECK(ss.str().find("\"n_target\":48") != std::string::npos);
    std::remove(path.c_str());
    std::remove(side.c_str());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("nonsense").code == 2);
    CHECK(run("gen unknown-family 3").code == 2);
    std::string path = write_graph("junk.g6", "C~garbage\n");
    CHECK(run("exact " + path).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("CIND_SEED steers the default seed") {
    std::string out_path = tmp_dir() + "/cind_seed_out.txt";
    auto run_env = [&](const std::string& env) {
        std::string cmd = env + " " + CIND_CLI_PATH + " gen random 6 1 > " + out_path;
        REQUIRE(std::system(cmd.c_str()) == 0);
        std::ifstream in(out_path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = run_env("CIND_SEED=5");
    std::string b = run_env("CIND_SEED=5");
    std::string c = run_env("CIND_SEED=6");
    std::remove(out_path.c_str());
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("stdin input with the dash path") {
    std::string cmd = std::string(CIND_CLI_PATH) + " gen prism | " + CIND_CLI_PATH +
                      " exact - > " + tmp_dir() + "/cind_pipe.txt";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(tmp_dir() + "/cind_pipe.txt");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove((tmp_dir() + "/cind_pipe.txt").c_str());
    CHECK(ss.str().find("\"size\":4") != std::string::npos);
}
