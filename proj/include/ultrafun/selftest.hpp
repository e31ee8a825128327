#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uf::selftest {

struct SuiteInfo {
    int id;
    std::string name;
    std::string title;
};

struct SuiteResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::size_t instances = 0;
    std::size_t skipped = 0;  // margin cases left out of a float comparison
    std::string detail;       // first failure, replayable with the same seed
    double seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

const std::vector<SuiteInfo>& suites();
/// Accepts the suite number or its name.
std::optional<int> find_suite(const std::string& key);
SuiteResult run_suite(int id, std::uint64_t seed = kDefaultSeed);

/// max w.x over |w|_1 <= 1, w.g <= 0: the uniform-norm distance from x to cone(gens), in doubles.
double float_distance(const std::vector<std::vector<double>>& gens, const std::vector<double>& x);

}  // namespace uf::selftest
