#include "folocal/bench.hpp"

#include <cmath>
#include <sstream>

namespace folocal {

BenchRow bench_check(const std::string& family, const Structure& s, const GnfPtr& g,
                     const EngineConfig& cfg, int repeats) {
    if (repeats < 1)
        throw DomainError("bench needs at least one repeat");
    BenchRow row;
    row.family = family;
    row.n = s.universe_size();
    row.total_size = s.total_size();

    bool first = true;
    for (int i = 0; i < repeats; ++i) {
        EvalReport report = check_sentence(s, g, cfg);
        if (!first && report.total_ns >= row.total_ns)
            continue;
        first = false;
        row.verdict = report.verdict;
        row.total_ns = report.total_ns;
        row.cover_ns = report.gaifman_ns;
        row.kernels_ns = 0;
        row.local_eval_ns = 0;
        row.scattered_ns = 0;
        for (const auto& leaf : report.leaves) {
            row.cover_ns += leaf.cover_ns;
            row.kernels_ns += leaf.kernels_ns;
            row.local_eval_ns += leaf.local_eval_ns;
            row.scattered_ns += leaf.scattered_ns;
        }
    }
    return row;
}

std::optional<double> loglog_slope(const std::vector<BenchRow>& rows) {
    std::vector<std::pair<double, double>> points;
    for (const auto& r : rows)
        if (r.n > 0 && r.total_ns > 0)
            points.emplace_back(std::log(static_cast<double>(r.n)),
                                std::log(static_cast<double>(r.total_ns)));
    if (points.size() < 2)
        return std::nullopt;
    double mean_x = 0, mean_y = 0;
    for (auto [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());
    double cov = 0, var = 0;
    for (auto [x, y] : points) {
        cov += (x - mean_x) * (y - mean_y);
        var += (x - mean_x) * (x - mean_x);
    }
    if (var == 0)
        return std::nullopt;
    return cov / var;
}

std::string bench_csv_header() {
    return "family,n,total_size,cover_ns,kernels_ns,local_eval_ns,scattered_ns,total_ns,verdict";
}

std::string bench_csv_row(const BenchRow& row) {
    std::ostringstream out;
    out << row.family << ',' << row.n << ',' << row.total_size << ',' << row.cover_ns << ','
        << row.kernels_ns << ',' << row.local_eval_ns << ',' << row.scattered_ns << ','
        << row.total_ns << ',' << (row.verdict ? "true" : "false");
    return out.str();
}

} // namespace folocal
