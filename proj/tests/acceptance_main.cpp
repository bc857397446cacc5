// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "ltlab/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

int main(int argc, char** argv) {
    std::uint64_t seed = 42;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);

    auto t0 = std::chrono::steady_clock::now();
    auto results = ltlab::run_acceptance(seed);
    auto t1 = std::chrono::steady_clock::now();

    bool pass = true;
    int i = 0;
    for (const auto& r : results) {
        ++i;
        std::printf("criterion %d [%s]: %s  -- %s\n", i, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.detail.c_str());
        pass = pass && r.pass;
    }
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("criterion 8 [end-to-end selftest runtime]: %s  -- %.2f s (budget 300 s), seed %llu\n",
                secs < 300.0 ? "PASS" : "FAIL", secs, static_cast<unsigned long long>(seed));
    pass = pass && secs < 300.0;
    return pass ? 0 : 1;
}
