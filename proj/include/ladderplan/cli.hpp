#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ladderplan/core.hpp"

namespace ladder {

// One benchmark measurement.  Timings are nanoseconds; a missing value means
// that leg was skipped (naive scan beyond its size cutoff, oracle over
// budget).
struct BenchRow {
    Index m = 0;
    Index n = 0;
    Index k = 0;
    std::optional<std::int64_t> t_indexed_ns;
    std::optional<std::int64_t> t_naive_ns;
    std::optional<std::int64_t> t_oracle_ns;
    bool planar = false;
};

struct BenchSpec {
    Index m = 0;
    Index n = 0;
    Index k = 0;
};

// Times the indexed decision, the naive decision (if k <= naive_limit), and
// the oracle (if within budget) on one seeded instance per entry of specs.
// The instance for row i uses seed + i.
std::vector<BenchRow> run_bench(std::uint64_t seed, const std::vector<BenchSpec>& specs,
                                Index naive_limit, std::uint64_t oracle_budget);

// CSV with the fixed header m,n,k,t_indexed_ns,t_naive_ns,t_oracle_ns,verdict
// (verdict is "planar" or "nonplanar"; skipped timings are empty fields).
std::string bench_to_csv(const std::vector<BenchRow>& rows);

// The command-line interface, callable in-process.  args does not include
// the program name.  Exit status: 0 = decided yes (or task completed),
// 1 = decided no, 2 = any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ladder
