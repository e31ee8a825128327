#include "ultrafun/selftest.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : uf::selftest::kDefaultSeed;
    int failed = 0;
    for (const auto& s : uf::selftest::suites()) {
        auto r = uf::selftest::run_suite(s.id, seed);
        if (!r.pass) ++failed;
        std::printf("%s criterion %2d [%s] %s: %zu instances", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    s.title.c_str(), r.instances);
        if (r.skipped) std::printf(", %zu margin cases skipped", r.skipped);
        std::printf(", %.2fs", r.seconds);
        if (!r.detail.empty()) std::printf(" (%s)", r.detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed (seed %llu)\n", failed, uf::selftest::suites().size(),
                static_cast<unsigned long long>(seed));
    return failed ? 1 : 0;
}
