// Acceptance runner: executes every verification suite and prints one
// pass/fail line per criterion; exits nonzero on any failure.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cind/bench.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool determinism_check() {
#ifdef CIND_CLI_PATH
    std::string cli = CIND_CLI_PATH;
    std::string out1 = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/cind_bench_run1.txt";
    std::string out2 = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/cind_bench_run2.txt";
    std::string cmd1 = cli + " bench --suite all --seed 7 > " + out1 + " 2>/dev/null";
    std::string cmd2 = cli + " bench --suite all --seed 7 > " + out2 + " 2>/dev/null";
    if (std::system(cmd1.c_str()) != 0) return false;
    if (std::system(cmd2.c_str()) != 0) return false;
    std::string a = slurp(out1), b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    return !a.empty() && a == b;
#else
    return false;
#endif
}

} // namespace

int main() {
    auto results = cind::run_acceptance("all", 7);
    cind::CriterionResult det;
    det.name = "bench-determinism";
    det.passed = determinism_check();
    det.detail = det.passed ? "two seeded bench runs byte-identical"
                            : "bench output differed between runs";
    results.push_back(det);
    bool ok = cind::print_acceptance(results, std::cout);
    return ok ? 0 : 1;
}
