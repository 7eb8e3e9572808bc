#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folocal/engine.hpp"

namespace folocal {

struct BenchRow {
    std::string family;
    int n = 0;                      // universe size
    std::uint64_t total_size = 0;   // ||A||
    std::uint64_t cover_ns = 0;     // includes Gaifman graph construction
    std::uint64_t kernels_ns = 0;
    std::uint64_t local_eval_ns = 0;
    std::uint64_t scattered_ns = 0;
    std::uint64_t total_ns = 0;
    bool verdict = false;
};

/// Runs check_sentence `repeats` times and keeps the fastest run's
/// timings. Parsing/generation stays outside the clock.
BenchRow bench_check(const std::string& family, const Structure& s, const GnfPtr& g,
                     const EngineConfig& cfg, int repeats = 3);

/// Least-squares slope of log(total_ns) against log(n). Needs at least
/// two rows with distinct n.
std::optional<double> loglog_slope(const std::vector<BenchRow>& rows);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

} // namespace folocal
