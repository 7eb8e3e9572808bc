#include "folocal/covers.hpp"

#include <algorithm>

#include "folocal/treewidth.hpp"

namespace folocal {

std::uint64_t Cover::total_size() const {
    std::uint64_t total = 0;
    for (const auto& p : pieces)
        total += p.size();
    return total;
}

std::size_t Cover::max_piece_size() const {
    std::size_t m = 0;
    for (const auto& p : pieces)
        m = std::max(m, p.size());
    return m;
}

namespace {

using u128 = unsigned __int128;

u128 pow_u128(std::uint64_t base, int exp) {
    u128 out = 1;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

} // namespace

bool peleg_threshold(std::uint64_t n_size, std::uint64_t m_size, std::uint64_t n, int k) {
    return pow_u128(n_size, k) > static_cast<u128>(n) * pow_u128(m_size, k);
}

Cover peleg_cover(const GaifmanGraph& g, int r, int k) {
    if (r < 1)
        throw DomainError("neighborhood cover radius must be >= 1");
    if (k < 1)
        throw DomainError("neighborhood cover exponent must be >= 1");
    int n = g.size();
    if (n < 1)
        throw DomainError("cover needs a non-empty graph");

    Cover cover;
    cover.kind = CoverKind::Neighborhood;
    cover.r = r;
    cover.k = k;
    cover.s = 2 * k * r;

    std::vector<char> in_h(static_cast<std::size_t>(n), 1);
    BfsScratch scratch;
    scratch.reset(n);
    int cursor = 0;

    while (true) {
        while (cursor < n && !in_h[static_cast<std::size_t>(cursor)])
            ++cursor;
        if (cursor == n)
            break;
        int seed = cursor;

        std::vector<int> big = {seed};      // N
        std::vector<int> penultimate;       // M
        std::vector<int> shell;             // L = N_r(M) ∩ H
        int rounds = 0;
        do {
            penultimate = std::move(big);
            auto reach = scratch.ball(g, penultimate, r);
            shell.clear();
            for (int v : reach)
                if (in_h[static_cast<std::size_t>(v)])
                    shell.push_back(v);
            big = scratch.ball(g, shell, r);
            ++rounds;
        } while (peleg_threshold(big.size(), penultimate.size(),
                                 static_cast<std::uint64_t>(n), k));

        for (int v : shell)
            in_h[static_cast<std::size_t>(v)] = 0;
        cover.pieces.push_back(std::move(big));
        cover.seeds.push_back(seed);
        cover.iterations.push_back(rounds);
        cover.final_m.push_back(std::move(penultimate));
    }
    return cover;
}

Cover bfs_layer_cover(const GaifmanGraph& g, int r) {
    if (r < 0)
        throw DomainError("tree cover radius must be >= 0");
    int n = g.size();
    if (n < 1)
        throw DomainError("cover needs a non-empty graph");

    Cover cover;
    cover.kind = CoverKind::TreeLayers;
    cover.r = r;

    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        if (dist[static_cast<std::size_t>(root)] >= 0)
            continue;
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        int depth = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            depth = std::max(depth, dist[static_cast<std::size_t>(u)]);
            for (int w : g.neighbors(u))
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        std::vector<std::vector<int>> layers(static_cast<std::size_t>(depth) + 1);
        for (int u : queue)
            layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(u)])].push_back(u);
        for (int i = 0; i <= depth; ++i) {
            std::vector<int> piece;
            for (int j = i; j <= std::min(depth, i + 2 * r); ++j)
                piece.insert(piece.end(), layers[static_cast<std::size_t>(j)].begin(),
                             layers[static_cast<std::size_t>(j)].end());
            std::sort(piece.begin(), piece.end());
            cover.pieces.push_back(std::move(piece));
        }
    }
    return cover;
}

void kernels(const GaifmanGraph& g, Cover& cover, int r) {
    if (r != cover.r)
        throw DomainError("kernel radius does not match the cover's radius");
    int n = g.size();
    cover.kernels.assign(cover.pieces.size(), {});

    // member[v] == epoch of the piece currently containing v and surviving.
    std::vector<std::uint32_t> member(static_cast<std::size_t>(n), 0);
    std::vector<int> removed;
    for (std::size_t pi = 0; pi < cover.pieces.size(); ++pi) {
        const auto& piece = cover.pieces[pi];
        auto epoch = static_cast<std::uint32_t>(pi) + 1;
        for (int v : piece)
            member[static_cast<std::size_t>(v)] = epoch;
        std::vector<int> survivors = piece;
        for (int round = 0; round < r && !survivors.empty(); ++round) {
            removed.clear();
            std::vector<int> next;
            next.reserve(survivors.size());
            for (int v : survivors) {
                bool keep = true;
                for (int w : g.neighbors(v))
                    if (member[static_cast<std::size_t>(w)] != epoch) {
                        keep = false;
                        break;
                    }
                if (keep)
                    next.push_back(v);
                else
                    removed.push_back(v);
            }
            // Collect-then-remove: drops within a round must not influence
            // each other, only the previous round's membership counts.
            for (int v : removed)
                member[static_cast<std::size_t>(v)] = 0;
            survivors = std::move(next);
        }
        cover.kernels[pi] = std::move(survivors);
    }
}

ValidationReport validate_cover(const GaifmanGraph& g, const Cover& cover, bool with_widths) {
    ValidationReport report;
    int n = g.size();

    for (const auto& piece : cover.pieces)
        if (piece.empty())
            throw DomainError("cover contains an empty piece");

    // Property 1: for each element, some piece contains its whole r-ball.
    // Pieces are scanned via an element -> pieces index; membership tests
    // use one stamp array re-marked per candidate piece.
    std::vector<std::vector<int>> pieces_of(static_cast<std::size_t>(n));
    for (std::size_t pi = 0; pi < cover.pieces.size(); ++pi)
        for (int v : cover.pieces[pi])
            pieces_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(pi));

    std::vector<std::uint32_t> stamp(static_cast<std::size_t>(n), 0);
    std::uint32_t epoch = 0;
    auto mark_piece = [&](int pi) {
        ++epoch;
        for (int v : cover.pieces[static_cast<std::size_t>(pi)])
            stamp[static_cast<std::size_t>(v)] = epoch;
    };

    BfsScratch scratch;
    scratch.reset(n);
    report.property1 = true;
    for (int a = 0; a < n && report.property1; ++a) {
        int src[1] = {a};
        auto ball = scratch.ball(g, src, cover.r);
        bool covered = false;
        for (int pi : pieces_of[static_cast<std::size_t>(a)]) {
            mark_piece(pi);
            bool inside = true;
            for (int v : ball)
                if (stamp[static_cast<std::size_t>(v)] != epoch) {
                    inside = false;
                    break;
                }
            if (inside) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            report.property1 = false;
            report.bad_element = a;
        }
    }

    // Property 2 (neighborhood covers with recorded seeds): each piece is
    // inside the s-ball of its seed.
    if (cover.kind == CoverKind::Neighborhood && cover.seeds.size() == cover.pieces.size()) {
        report.property2 = true;
        for (std::size_t pi = 0; pi < cover.pieces.size(); ++pi) {
            int src[1] = {cover.seeds[pi]};
            auto ball = scratch.ball(g, src, cover.s);
            ++epoch;
            for (int v : ball)
                stamp[static_cast<std::size_t>(v)] = epoch;
            for (int v : cover.pieces[pi])
                if (stamp[static_cast<std::size_t>(v)] != epoch) {
                    report.property2 = false;
                    report.bad_piece = static_cast<int>(pi);
                    break;
                }
            if (!report.property2.value())
                break;
        }
    }

    if (with_widths) {
        report.piece_widths.reserve(cover.pieces.size());
        for (const auto& piece : cover.pieces) {
            // Induced subgraph of g on the piece, relabeled to 0..|piece|-1.
            std::vector<std::pair<int, int>> edges;
            ++epoch;
            for (std::size_t i = 0; i < piece.size(); ++i)
                stamp[static_cast<std::size_t>(piece[i])] = epoch;
            for (std::size_t i = 0; i < piece.size(); ++i)
                for (int w : g.neighbors(piece[i]))
                    if (stamp[static_cast<std::size_t>(w)] == epoch && w > piece[i]) {
                        auto it = std::lower_bound(piece.begin(), piece.end(), w);
                        edges.emplace_back(static_cast<int>(i),
                                           static_cast<int>(it - piece.begin()));
                    }
            GaifmanGraph sub(static_cast<int>(piece.size()), edges);
            report.piece_widths.push_back(heuristic_decomposition(sub).width());
        }
    }
    return report;
}

} // namespace folocal
