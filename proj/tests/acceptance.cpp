// End-to-end gate: each criterion prints one PASS/FAIL line and the
// process exits nonzero if any of them fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "folocal/bench.hpp"
#include "folocal/covers.hpp"
#include "folocal/engine.hpp"
#include "folocal/gaifman.hpp"
#include "folocal/generators.hpp"
#include "folocal/gnf.hpp"
#include "folocal/induced.hpp"
#include "folocal/logic.hpp"
#include "folocal/parser.hpp"
#include "folocal/treewidth.hpp"
#include "test_support.hpp"

using namespace folocal;
using namespace testsupport;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string details;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

Structure random_graph(rng_t& rng, int max_n) {
    Vocabulary v;
    v.add("E", 2);
    int n = pick(rng, 1, max_n);
    Structure s(v, n);
    int edges = n > 1 ? pick(rng, 0, 2 * n) : 0;
    for (int e = 0; e < edges; ++e) {
        int a = pick(rng, 0, n - 1);
        int b = pick(rng, 0, n - 1);
        if (a == b)
            continue;
        s.add_tuple("E", {a, b});
        s.add_tuple("E", {b, a});
    }
    return s;
}

Outcome criterion1() {
    auto start = clock_type::now();
    rng_t rng(9001);
    int agreed = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        Structure s = [&] {
            switch (t % 3) {
            case 0: return gen_grid(pick(rng, 1, 7), pick(rng, 1, 7));
            case 1: return gen_rand_deg(pick(rng, 5, 60), pick(rng, 2, 4),
                                        static_cast<std::uint64_t>(t));
            default: return gen_cycle(pick(rng, 1, 60));
            }
        }();
        GnfPtr g = random_gnf(rng, s.vocabulary(), 2, 3, 2);
        bool expected = eval_gnf_naive(s, g);
        EngineConfig cfg;
        cfg.strategy = chance(rng, 0.5) ? CoverStrategy::Peleg : CoverStrategy::BfsLayers;
        cfg.k = pick(rng, 1, 3);
        cfg.verify_scattered_distances = true;
        if (check_sentence(s, g, cfg).verdict == expected)
            ++agreed;
    }
    double elapsed = seconds_since(start);
    Outcome o;
    o.pass = agreed == trials && elapsed < 60.0;
    o.details = std::to_string(agreed) + "/" + std::to_string(trials) +
                " verdicts agree with the naive evaluator in " + fmt(elapsed) + "s";
    return o;
}

bool peleg_size_bound(const Cover& cover, int n, int k) {
    using boost::multiprecision::cpp_int;
    cpp_int lhs = 1;
    for (int i = 0; i < k; ++i)
        lhs *= cover.total_size();
    cpp_int rhs = 1;
    for (int i = 0; i < k + 1; ++i)
        rhs *= n;
    return lhs <= rhs;
}

Outcome criterion2() {
    rng_t rng(9002);
    int checked = 0;
    int failed = 0;
    auto inspect = [&](const Structure& s, int r, int k) {
        GaifmanGraph g(s);
        Cover cover = peleg_cover(g, r, k);
        auto report = validate_cover(g, cover);
        bool ok = report.property1 && report.property2.value_or(false);
        ok = ok && cover.s == 2 * k * r;
        ok = ok && peleg_size_bound(cover, s.universe_size(), k);
        for (int it : cover.iterations)
            ok = ok && it <= k;
        ++checked;
        if (!ok)
            ++failed;
    };
    for (int t = 0; t < 100; ++t)
        inspect(random_graph(rng, 500), pick(rng, 1, 2), pick(rng, 1, 3));
    for (int side : {4, 16, 32})
        for (int r : {1, 2})
            for (int k : {1, 2, 3})
                inspect(gen_grid(side, side), r, k);
    Outcome o;
    o.pass = failed == 0;
    o.details = std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " covers satisfy both properties, the size bound, and the " +
                "iteration cap";
    return o;
}

Outcome criterion3() {
    rng_t rng(9003);
    int checked = 0;
    int failed = 0;
    auto inspect = [&](const Structure& s, int r) {
        GaifmanGraph g(s);
        Cover cover = bfs_layer_cover(g, r);
        bool ok = validate_cover(g, cover).property1;
        ok = ok && cover.total_size() <=
                       static_cast<std::uint64_t>(2 * r + 1) *
                           static_cast<std::uint64_t>(s.universe_size());
        ++checked;
        if (!ok)
            ++failed;
    };
    for (int t = 0; t < 60; ++t)
        inspect(random_graph(rng, 500), pick(rng, 0, 3));
    for (int side : {4, 16, 64})
        for (int r : {0, 1, 2})
            inspect(gen_grid(side, side), r);

    auto max_piece_width = [](int side) {
        GaifmanGraph g(gen_grid(side, side));
        Cover cover = bfs_layer_cover(g, 1);
        auto report = validate_cover(g, cover, true);
        int w = 0;
        for (int pw : report.piece_widths)
            w = std::max(w, pw);
        return w;
    };
    int w16 = max_piece_width(16);
    int w64 = max_piece_width(64);
    Outcome o;
    o.pass = failed == 0 && w64 <= w16 + 2;
    o.details = std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " covers valid within the size bound; grid piece width " +
                std::to_string(w64) + " at side 64 vs " + std::to_string(w16) +
                " at side 16";
    return o;
}

Outcome criterion4() {
    rng_t rng(9004);
    int pieces_checked = 0;
    int failed = 0;
    auto inspect = [&](const Structure& s, int r, bool layered, int k) {
        GaifmanGraph g(s);
        Cover cover = layered ? bfs_layer_cover(g, r) : peleg_cover(g, r, k);
        kernels(g, cover, r);
        auto adj = brute_adjacency(s);
        for (std::size_t pi = 0; pi < cover.pieces.size(); ++pi) {
            std::set<int> members(cover.pieces[pi].begin(), cover.pieces[pi].end());
            std::set<int> expected;
            for (int a : cover.pieces[pi]) {
                auto ball = brute_ball(adj, a, r);
                if (std::includes(members.begin(), members.end(),
                                  ball.begin(), ball.end()))
                    expected.insert(a);
            }
            std::set<int> got(cover.kernels[pi].begin(), cover.kernels[pi].end());
            ++pieces_checked;
            if (got != expected)
                ++failed;
        }
    };
    for (int t = 0; t < 20; ++t)
        inspect(random_graph(rng, 200), pick(rng, 1, 2), t % 2 == 0, pick(rng, 1, 3));
    for (int side : {4, 9, 14})
        for (int r : {1, 2}) {
            inspect(gen_grid(side, side), r, true, 2);
            inspect(gen_grid(side, side), r, false, 2);
        }
    Outcome o;
    o.pass = failed == 0;
    o.details = std::to_string(pieces_checked - failed) + "/" +
                std::to_string(pieces_checked) + " kernels match brute force";
    return o;
}

Outcome criterion5() {
    rng_t rng(9005);
    int agreed = 0;
    int distance_checks = 0;
    bool distances_ok = true;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        Structure s = random_graph(rng, 40);
        GaifmanGraph g(s);
        int radius = pick(rng, 1, 4);
        int m = pick(rng, 1, 3);
        std::vector<int> p;
        for (int a = 0; a < s.universe_size(); ++a)
            if (chance(rng, 0.4))
                p.push_back(a);
        auto res = scattered_exists(s, g, p, radius, m, true);
        if (res.found == exhaustive_scattered(s, p, radius, m))
            ++agreed;
        if (res.used_backtracking) {
            ++distance_checks;
            distances_ok = distances_ok && res.distance_check_ok;
        }
    }
    Outcome o;
    o.pass = agreed == trials && distances_ok;
    o.details = std::to_string(agreed) + "/" + std::to_string(trials) +
                " decisions match exhaustive search; piece distances verified in " +
                std::to_string(distance_checks) + " backtracking runs";
    return o;
}

Outcome criterion6() {
    rng_t rng(9006);
    int agreed = 0;
    const int samples = 200;
    for (int t = 0; t < samples; ++t) {
        Structure s = random_mixed_structure(rng, 40);
        int r = pick(rng, 1, 2);
        FormulaPtr psi = relativize(random_pure_formula(rng, s.vocabulary(), 2), r, "x");
        int a = pick(rng, 0, s.universe_size() - 1);
        bool full = eval_naive(s, psi, {{"x", a}});

        GaifmanGraph g(s);
        std::vector<int> ball = neighborhood(g, a, r);
        InducedPiece piece = induced_substructure(s, ball);
        bool local = eval_naive(piece.structure, psi, {{"x", piece.to_local(a)}});
        if (full == local)
            ++agreed;
    }
    Outcome o;
    o.pass = agreed == samples;
    o.details = std::to_string(agreed) + "/" + std::to_string(samples) +
                " local formulas agree between the full structure and the ball";
    return o;
}

Outcome criterion7() {
    int checked = 0;
    int failed = 0;
    for (const Structure& s : corpus_small()) {
        Evaluator ev(s);
        for (int r = 1; r <= 3; ++r) {
            FormulaPtr atom = parse_formula("dist(x, y) <= " + std::to_string(r));
            FormulaPtr expanded = expand_distance_atom(r, "x", "y", s.vocabulary());
            for (int a = 0; a < s.universe_size(); ++a)
                for (int b = 0; b < s.universe_size(); ++b) {
                    Assignment env = {{"x", a}, {"y", b}};
                    ++checked;
                    if (ev.eval(atom, env) != eval_naive(s, expanded, env))
                        ++failed;
                }
        }
    }
    Outcome o;
    o.pass = failed == 0;
    o.details = std::to_string(checked - failed) + "/" + std::to_string(checked) +
                " pairs agree between distance atoms and their expansions";
    return o;
}

Outcome criterion8() {
    auto start = clock_type::now();
    GnfPtr g = gnf_leaf(1, 2, relativize(parse_formula("exists y (E(x, y))"), 1, "x"));
    auto slope_for = [&](CoverStrategy strategy) {
        EngineConfig cfg;
        cfg.strategy = strategy;
        cfg.k = 2;
        cfg.record_witnesses = false;
        std::vector<BenchRow> rows;
        for (int side : {8, 16, 32, 64}) {
            Structure s = gen_grid(side, side);
            rows.push_back(bench_check("grid", s, g, cfg));
        }
        return loglog_slope(rows).value();
    };
    double layered = slope_for(CoverStrategy::BfsLayers);
    double peleg = slope_for(CoverStrategy::Peleg);
    double elapsed = seconds_since(start);
    Outcome o;
    o.pass = layered <= 1.2 && peleg <= 1.6 && elapsed < 300.0;
    o.details = "grid slopes: bfs-layers " + fmt(layered) + " (cap 1.2), peleg k=2 " +
                fmt(peleg) + " (cap 1.6), " + fmt(elapsed) + "s";
    return o;
}

Outcome criterion9() {
    FormulaPtr lonely = relativize(
        parse_formula("P(x) and not exists y exists z (not y = z and E(x, y) and E(x, z))"),
        1, "x");
    int agreed = 0;
    const int seeds = 20;
    for (int seed = 1; seed <= seeds; ++seed) {
        rng_t rng(static_cast<std::uint64_t>(9100 + seed));
        int cover = pick(rng, 2, 5);
        int ground = pick(rng, cover * 2, 30);
        int sets = pick(rng, cover, cover + 4);
        SetCoverInstance inst = gen_setcover(ground, sets, 2, cover,
                                             static_cast<std::uint64_t>(seed));
        GnfPtr no_more = gnf_not(gnf_leaf(1, inst.planted_optimum + 1, lonely));
        GnfPtr too_few = gnf_not(gnf_leaf(1, inst.planted_optimum, lonely));
        EngineConfig cfg;
        cfg.strategy = seed % 2 == 0 ? CoverStrategy::Peleg : CoverStrategy::BfsLayers;
        bool ok = check_sentence(inst.structure, no_more, cfg).verdict &&
                  !check_sentence(inst.structure, too_few, cfg).verdict &&
                  eval_gnf_naive(inst.structure, no_more) &&
                  !eval_gnf_naive(inst.structure, too_few);
        if (ok)
            ++agreed;
    }
    Outcome o;
    o.pass = agreed == seeds;
    o.details = std::to_string(agreed) + "/" + std::to_string(seeds) +
                " instances separate the planted optimum from one set fewer";
    return o;
}

Outcome criterion10() {
    rng_t rng(9010);
    int validated = 0;
    int compared = 0;
    int failed = 0;
    for (int t = 0; t < 500; ++t) {
        Structure s = random_graph(rng, 30);
        TreeDecomposition td = heuristic_decomposition(s);
        if (validate_decomposition(s, td).ok)
            ++validated;
        else
            ++failed;
        if (s.universe_size() <= 12) {
            ++compared;
            if (td.width() < exact_width(s, 12))
                ++failed;
        }
    }
    Vocabulary v;
    v.add("E", 2);
    Structure k4(v, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j)
                k4.add_tuple("E", {i, j});
    bool canon = exact_width(gen_cycle(5)) == 2 && exact_width(k4) == 3;
    Outcome o;
    o.pass = failed == 0 && validated == 500 && canon;
    o.details = std::to_string(validated) + "/500 decompositions valid, " +
                std::to_string(compared) + " exact comparisons, canonical widths " +
                std::string(canon ? "correct" : "wrong");
    return o;
}

} // namespace

int main() {
    Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8,
                               criterion9, criterion10};
    bool all_pass = true;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        Outcome o = criteria[i]();
        all_pass = all_pass && o.pass;
        std::printf("criterion %zu: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                    o.details.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
