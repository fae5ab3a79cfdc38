#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace synsq::cli {

struct BenchRow {
    std::string suite;
    std::string name;
    std::string metric;
    double value = 0.0;
};

// Suites: "tone", "robustness", "scaling". Progress text goes to `log`.
// Throws std::invalid_argument for an unknown suite.
std::vector<BenchRow> run_bench(std::string_view suite, std::ostream& log);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace synsq::cli
