#include "folocal/gaifman.hpp"

#include <algorithm>

namespace folocal {

GaifmanGraph::GaifmanGraph(const Structure& s) {
    std::vector<std::pair<int, int>> pairs;
    std::uint64_t bound = 0;
    int k = s.vocabulary().max_arity();
    for (int r = 0; r < s.relation_count(); ++r)
        bound += s.tuple_count(r) * static_cast<std::uint64_t>(k) * k;
    pairs.reserve(bound);
    for (int r = 0; r < s.relation_count(); ++r) {
        for (const auto& t : s.tuples(r)) {
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j)
                    if (t[i] != t[j])
                        pairs.emplace_back(t[i], t[j]);
        }
    }
    n_ = s.universe_size();
    build_from_pairs(pairs);
}

GaifmanGraph::GaifmanGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge endpoint outside vertex range");
        if (u != v)
            pairs.emplace_back(u, v);
    }
    build_from_pairs(pairs);
}

void GaifmanGraph::build_from_pairs(std::vector<std::pair<int, int>>& pairs) {
    // Symmetrize, then counting-sort by source and dedup each list.
    std::size_t m = pairs.size();
    pairs.reserve(m * 2);
    for (std::size_t i = 0; i < m; ++i)
        pairs.emplace_back(pairs[i].second, pairs[i].first);

    std::vector<std::size_t> counts(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : pairs)
        ++counts[static_cast<std::size_t>(u) + 1];
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v)
        offsets_[static_cast<std::size_t>(v) + 1] = offsets_[v] + counts[static_cast<std::size_t>(v) + 1];
    adj_.resize(pairs.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : pairs)
        adj_[cursor[static_cast<std::size_t>(u)]++] = v;

    std::size_t write = 0;
    std::vector<std::size_t> new_offsets(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) {
        auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        auto end = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(begin, end);
        auto last = std::unique(begin, end);
        for (auto it = begin; it != last; ++it)
            adj_[write++] = *it;
        new_offsets[static_cast<std::size_t>(v) + 1] = write;
    }
    adj_.resize(write);
    offsets_ = std::move(new_offsets);
}

bool GaifmanGraph::has_edge(int u, int v) const {
    auto ns = neighbors(u);
    return std::binary_search(ns.begin(), ns.end(), v);
}

void BfsScratch::reset(int n) {
    n_ = n;
    stamp_.assign(static_cast<std::size_t>(n), 0);
    dist_.assign(static_cast<std::size_t>(n), 0);
    queue_.clear();
    queue_.reserve(static_cast<std::size_t>(n));
    epoch_ = 0;
}

std::vector<int> BfsScratch::ball(const GaifmanGraph& g, std::span<const int> sources,
                                  int radius) {
    std::vector<int> dist_unused;
    return ball_with_distances(g, sources, radius, dist_unused);
}

std::vector<int> BfsScratch::ball_with_distances(const GaifmanGraph& g,
                                                 std::span<const int> sources, int radius,
                                                 std::vector<int>& dist_out) {
    if (radius < 0)
        throw DomainError("ball radius must be non-negative");
    if (g.size() != n_)
        reset(g.size());
    ++epoch_;
    queue_.clear();
    for (int s : sources) {
        if (s < 0 || s >= n_)
            throw DomainError("ball source outside universe");
        if (stamp_[static_cast<std::size_t>(s)] != epoch_) {
            stamp_[static_cast<std::size_t>(s)] = epoch_;
            dist_[static_cast<std::size_t>(s)] = 0;
            queue_.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        int u = queue_[head];
        int du = dist_[static_cast<std::size_t>(u)];
        if (du == radius)
            continue;
        for (int w : g.neighbors(u)) {
            if (stamp_[static_cast<std::size_t>(w)] != epoch_) {
                stamp_[static_cast<std::size_t>(w)] = epoch_;
                dist_[static_cast<std::size_t>(w)] = du + 1;
                queue_.push_back(w);
            }
        }
    }
    std::vector<int> out = queue_;
    std::sort(out.begin(), out.end());
    dist_out.resize(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        dist_out[i] = dist_[static_cast<std::size_t>(out[i])];
    return out;
}

std::vector<int> neighborhood(const GaifmanGraph& g, int element, int radius) {
    BfsScratch scratch;
    int src[1] = {element};
    return scratch.ball(g, src, radius);
}

std::vector<int> neighborhood_of_set(const GaifmanGraph& g, std::span<const int> elements,
                                     int radius) {
    BfsScratch scratch;
    return scratch.ball(g, elements, radius);
}

int capped_distance(const GaifmanGraph& g, int a, int b, int cap) {
    if (cap < 0)
        throw DomainError("distance cap must be non-negative");
    if (a == b)
        return 0;
    BfsScratch scratch;
    std::vector<int> dist;
    int src[1] = {a};
    auto ball = scratch.ball_with_distances(g, src, cap, dist);
    auto it = std::lower_bound(ball.begin(), ball.end(), b);
    if (it != ball.end() && *it == b)
        return dist[static_cast<std::size_t>(it - ball.begin())];
    return cap;
}

std::vector<int> connected_components(const GaifmanGraph& g, int& count_out) {
    int n = g.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0)
            continue;
        comp[static_cast<std::size_t>(v)] = next;
        queue.clear();
        queue.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : g.neighbors(queue[head]))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    queue.push_back(w);
                }
        ++next;
    }
    count_out = next;
    return comp;
}

} // namespace folocal
