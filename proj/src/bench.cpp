#include <chrono>

#include "ladderplan/cli.hpp"
#include "ladderplan/decision.hpp"
#include "ladderplan/oracle.hpp"
#include "ladderplan/rng.hpp"

namespace ladder {

namespace {

template <typename F>
std::int64_t time_ns(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

}  // namespace

std::vector<BenchRow> run_bench(std::uint64_t seed, const std::vector<BenchSpec>& specs,
                                Index naive_limit, std::uint64_t oracle_budget) {
    std::vector<BenchRow> rows;
    rows.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const BenchSpec& spec = specs[i];
        const GeneralizedLadder g =
            random_instance(seed + static_cast<std::uint64_t>(i), spec.m, spec.n, spec.k);

        BenchRow row;
        row.m = spec.m;
        row.n = spec.n;
        row.k = spec.k;

        bool planar = false;
        row.t_indexed_ns = time_ns([&] { planar = is_planar(g); });
        row.planar = planar;

        if (spec.k <= naive_limit) {
            bool naive = false;
            row.t_naive_ns = time_ns([&] { naive = is_planar_naive(g); });
            if (naive != planar) {
                throw std::logic_error("internal error: naive and indexed verdicts disagree");
            }
        }

        const SimpleGraph h = to_simple_graph(g);
        if (rotation_search_space(h) <= oracle_budget) {
            bool oracle = false;
            row.t_oracle_ns = time_ns([&] { oracle = oracle_is_planar(h, oracle_budget); });
            if (oracle != planar) {
                throw std::logic_error("internal error: oracle and indexed verdicts disagree");
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "m,n,k,t_indexed_ns,t_naive_ns,t_oracle_ns,verdict\n";
    auto cell = [](const std::optional<std::int64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (const BenchRow& r : rows) {
        out += std::to_string(r.m) + "," + std::to_string(r.n) + "," + std::to_string(r.k) +
               "," + cell(r.t_indexed_ns) + "," + cell(r.t_naive_ns) + "," +
               cell(r.t_oracle_ns) + "," + (r.planar ? "planar" : "nonplanar") + "\n";
    }
    return out;
}

}  // namespace ladder
