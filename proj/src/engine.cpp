#include "folocal/engine.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "folocal/induced.hpp"
#include "folocal/logic.hpp"

namespace folocal {

namespace {

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

// First piece (in cover order) whose kernel contains each element, or -1.
std::vector<int> assign_elements(int n, const Cover& cover) {
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    for (std::size_t pi = 0; pi < cover.kernels.size(); ++pi)
        for (int a : cover.kernels[pi])
            if (assigned[static_cast<std::size_t>(a)] < 0)
                assigned[static_cast<std::size_t>(a)] = static_cast<int>(pi);
    return assigned;
}

void eval_pieces(const Structure& s, const Cover& cover, const FormulaPtr& psi,
                 const std::vector<int>& assigned, std::span<const int> piece_ids,
                 std::vector<char>& result) {
    PieceExtractor extractor(s);
    std::vector<int> members;
    for (int pi : piece_ids) {
        members.clear();
        for (int a : cover.kernels[static_cast<std::size_t>(pi)])
            if (assigned[static_cast<std::size_t>(a)] == pi)
                members.push_back(a);
        if (members.empty())
            continue;
        auto piece = extractor.extract(cover.pieces[static_cast<std::size_t>(pi)]);
        LocalEvaluator evaluator(piece.structure);
        for (int a : members) {
            int local = piece.to_local(a);
            if (evaluator.eval(psi, gnf_free_variable(), local))
                result[static_cast<std::size_t>(a)] = 1;
        }
    }
}

} // namespace

std::vector<int> local_satisfier_set(const Structure& s, const Cover& cover,
                                     const FormulaPtr& psi, int r, const EngineConfig& cfg) {
    if (!check_r_local(psi, r, gnf_free_variable()))
        throw DomainError("formula is not " + std::to_string(r) + "-local in '" +
                          gnf_free_variable() + "'");
    if (cover.kernels.size() != cover.pieces.size())
        throw DomainError("cover kernels are missing");
    if (cover.r != r)
        throw DomainError("cover was built for a different radius");

    int n = s.universe_size();
    auto assigned = assign_elements(n, cover);
    for (int a = 0; a < n; ++a)
        if (assigned[static_cast<std::size_t>(a)] < 0)
            throw DomainError("cover kernels do not cover element " + std::to_string(a));

    std::vector<char> result(static_cast<std::size_t>(n), 0);
    int piece_count = cover.piece_count();
    std::vector<int> all_pieces(static_cast<std::size_t>(piece_count));
    for (int i = 0; i < piece_count; ++i)
        all_pieces[static_cast<std::size_t>(i)] = i;

    int workers = 1;
    if (cfg.parallel_pieces) {
        workers = cfg.threads > 0 ? cfg.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
        workers = std::max(1, std::min(workers, piece_count));
    }
    if (workers <= 1) {
        eval_pieces(s, cover, psi, assigned, all_pieces, result);
    } else {
        // Each worker owns a slice of pieces and writes disjoint elements
        // of `result` (each element is assigned to exactly one piece).
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        int chunk = (piece_count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int begin = w * chunk;
            int end = std::min(piece_count, begin + chunk);
            if (begin >= end)
                break;
            pool.emplace_back([&, begin, end]() {
                eval_pieces(s, cover, psi, assigned,
                            std::span<const int>(all_pieces.data() + begin,
                                                 static_cast<std::size_t>(end - begin)),
                            result);
            });
        }
        for (auto& t : pool)
            t.join();
    }

    std::vector<int> p;
    for (int a = 0; a < n; ++a)
        if (result[static_cast<std::size_t>(a)])
            p.push_back(a);
    return p;
}

namespace {

// Pairwise-scattered search among candidates inside the piece. Chosen
// candidates exclude everything in their radius-ball (in the piece);
// candidates are tried in ascending id order.
class ScatteredBacktracker {
public:
    ScatteredBacktracker(const GaifmanGraph& piece_graph, std::vector<int> candidates,
                         int radius, int m)
        : graph_(piece_graph), candidates_(std::move(candidates)), radius_(radius), m_(m) {
        scratch_.reset(graph_.size());
        excluded_.assign(static_cast<std::size_t>(graph_.size()), 0);
    }

    bool run(std::vector<int>& witnesses_out) {
        chosen_.clear();
        if (!rec(0))
            return false;
        witnesses_out = chosen_;
        return true;
    }

private:
    bool rec(std::size_t start) {
        if (static_cast<int>(chosen_.size()) == m_)
            return true;
        int needed = m_ - static_cast<int>(chosen_.size());
        for (std::size_t i = start; i < candidates_.size(); ++i) {
            if (static_cast<int>(candidates_.size() - i) < needed)
                return false;
            int v = candidates_[i];
            if (excluded_[static_cast<std::size_t>(v)] > 0)
                continue;
            int src[1] = {v};
            auto ball = scratch_.ball(graph_, src, radius_);
            for (int u : ball)
                ++excluded_[static_cast<std::size_t>(u)];
            chosen_.push_back(v);
            if (rec(i + 1))
                return true;
            chosen_.pop_back();
            for (int u : ball)
                --excluded_[static_cast<std::size_t>(u)];
        }
        return false;
    }

    const GaifmanGraph& graph_;
    std::vector<int> candidates_;
    int radius_;
    int m_;
    BfsScratch scratch_;
    std::vector<int> excluded_;
    std::vector<int> chosen_;
};

} // namespace

ScatteredResult scattered_exists(const Structure& s, const GaifmanGraph& g,
                                 std::span<const int> p, int radius, int m,
                                 bool verify_distances) {
    if (m < 1)
        throw DomainError("scattered witness count must be >= 1");
    if (radius < 0)
        throw DomainError("scattered radius must be >= 0");

    ScatteredResult result;

    // Phase 1: greedy picks in id order; every pick removes its ball.
    std::vector<int> sorted(p.begin(), p.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);
    BfsScratch scratch;
    scratch.reset(g.size());
    std::vector<int> picks;
    for (int a : sorted) {
        if (static_cast<int>(picks.size()) == m)
            break;
        if (removed[static_cast<std::size_t>(a)])
            continue;
        picks.push_back(a);
        int src[1] = {a};
        for (int u : scratch.ball(g, src, radius))
            removed[static_cast<std::size_t>(u)] = 1;
    }
    result.greedy_picks = static_cast<int>(picks.size());

    if (static_cast<int>(picks.size()) == m) {
        result.found = true;
        result.witnesses = std::move(picks);
        return result;
    }
    if (picks.empty())
        return result; // p was empty

    // Phase 2: all of p lies within `radius` of the picks, so any scattered
    // set lives inside the 2*radius-ball around them; search the induced
    // substructure on that ball.
    result.used_backtracking = true;
    auto h = scratch.ball(g, picks, 2 * radius);
    auto piece = induced_substructure(s, h);
    GaifmanGraph piece_graph(piece.structure);

    std::vector<int> candidates;
    candidates.reserve(sorted.size());
    for (int a : sorted) {
        int local = piece.to_local(a);
        if (local >= 0)
            candidates.push_back(local);
    }

    if (verify_distances) {
        // The piece preserves distances between candidate pairs up to
        // radius+1; check that directly.
        BfsScratch piece_scratch;
        piece_scratch.reset(piece_graph.size());
        for (std::size_t i = 0; i < candidates.size() && result.distance_check_ok; ++i) {
            int local = candidates[i];
            int parent = piece.to_parent[static_cast<std::size_t>(local)];
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                int other_local = candidates[j];
                int other_parent = piece.to_parent[static_cast<std::size_t>(other_local)];
                int d_piece = capped_distance(piece_graph, local, other_local, radius + 1);
                int d_full = capped_distance(g, parent, other_parent, radius + 1);
                if (d_piece != d_full) {
                    result.distance_check_ok = false;
                    break;
                }
            }
        }
    }

    ScatteredBacktracker backtracker(piece_graph, std::move(candidates), radius, m);
    std::vector<int> local_witnesses;
    if (backtracker.run(local_witnesses)) {
        result.found = true;
        for (int v : local_witnesses)
            result.witnesses.push_back(piece.to_parent[static_cast<std::size_t>(v)]);
        std::sort(result.witnesses.begin(), result.witnesses.end());
    }
    return result;
}

namespace {

struct LeafOutcome {
    bool verdict;
    LeafReport report;
};

LeafOutcome run_leaf(const Structure& s, const GaifmanGraph& g,
                     const BasicLocalSentence& leaf, const EngineConfig& cfg) {
    LeafOutcome out;
    out.report.r = leaf.r;
    out.report.m = leaf.m;

    std::uint64_t t0 = now_ns();
    Cover cover = cfg.strategy == CoverStrategy::Peleg ? peleg_cover(g, leaf.r, cfg.k)
                                                       : bfs_layer_cover(g, leaf.r);
    std::uint64_t t1 = now_ns();
    kernels(g, cover, leaf.r);
    std::uint64_t t2 = now_ns();
    auto p = local_satisfier_set(s, cover, leaf.psi, leaf.r, cfg);
    std::uint64_t t3 = now_ns();
    auto scattered = scattered_exists(s, g, p, 2 * leaf.r, leaf.m,
                                      cfg.verify_scattered_distances);
    std::uint64_t t4 = now_ns();

    if (cfg.verify_scattered_distances && !scattered.distance_check_ok)
        throw DomainError("piece distances diverged from structure distances");

    out.verdict = scattered.found;
    out.report.verdict = scattered.found;
    out.report.satisfier_count = p.size();
    out.report.piece_count = cover.piece_count();
    out.report.cover_total_size = cover.total_size();
    if (scattered.found && cfg.record_witnesses)
        out.report.witnesses = scattered.witnesses;
    out.report.cover_ns = t1 - t0;
    out.report.kernels_ns = t2 - t1;
    out.report.local_eval_ns = t3 - t2;
    out.report.scattered_ns = t4 - t3;
    return out;
}

bool fold(const Structure& s, const GaifmanGraph& g, const GnfPtr& node,
          const EngineConfig& cfg, EvalReport& report) {
    switch (node->op) {
    case GnfOp::Leaf: {
        auto outcome = run_leaf(s, g, node->leaf, cfg);
        report.leaves.push_back(std::move(outcome.report));
        return outcome.verdict;
    }
    case GnfOp::Not:
        return !fold(s, g, node->children[0], cfg, report);
    case GnfOp::And: {
        bool all = true;
        for (const auto& c : node->children)
            all = fold(s, g, c, cfg, report) && all;
        return all;
    }
    case GnfOp::Or: {
        bool any = false;
        for (const auto& c : node->children)
            any = fold(s, g, c, cfg, report) || any;
        return any;
    }
    }
    throw DomainError("unreachable sentence op");
}

} // namespace

EvalReport check_sentence(const Structure& s, const GnfPtr& g, const EngineConfig& cfg) {
    validate_gnf(g);
    EvalReport report;
    std::uint64_t t0 = now_ns();
    GaifmanGraph graph(s);
    std::uint64_t t1 = now_ns();
    report.gaifman_ns = t1 - t0;
    report.verdict = fold(s, graph, g, cfg, report);
    report.total_ns = now_ns() - t0;
    return report;
}

} // namespace folocal
