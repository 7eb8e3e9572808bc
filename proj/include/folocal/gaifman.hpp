#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "folocal/structure.hpp"

namespace folocal {

/// The Gaifman graph of a structure: vertices are the universe, with an
/// edge between two distinct elements whenever they occur together in some
/// tuple. Stored as sorted adjacency lists (CSR layout).
class GaifmanGraph {
public:
    explicit GaifmanGraph(const Structure& s);

    /// Plain graph constructor: edges as pairs, used by the treewidth code.
    GaifmanGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::uint64_t edge_count() const { return adj_.size() / 2; }
    int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool has_edge(int u, int v) const;

private:
    void build_from_pairs(std::vector<std::pair<int, int>>& pairs);

    int n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<int> adj_;
};

/// Reusable truncated BFS workspace. The visitation stamps are epoch
/// counters, so consecutive runs on the same graph cost time proportional
/// to the explored ball, not to the whole graph.
class BfsScratch {
public:
    void reset(int n);

    /// Elements at distance <= radius from `sources` in `g`, in BFS order
    /// (sources first). Output is sorted ascending.
    std::vector<int> ball(const GaifmanGraph& g, std::span<const int> sources, int radius);

    /// As above, but also reports each ball element's distance from the
    /// source set through `dist_out` (parallel to the returned vector).
    std::vector<int> ball_with_distances(const GaifmanGraph& g, std::span<const int> sources,
                                         int radius, std::vector<int>& dist_out);

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<int> dist_;
    std::vector<int> queue_;
    std::uint32_t epoch_ = 0;
    int n_ = 0;
};

/// N_r(a): the r-ball around one element. Convenience over BfsScratch.
std::vector<int> neighborhood(const GaifmanGraph& g, int element, int radius);

/// N_r(S): the r-ball around a set of elements.
std::vector<int> neighborhood_of_set(const GaifmanGraph& g, std::span<const int> elements,
                                     int radius);

/// Distance between two elements in the Gaifman graph, capped at `cap`:
/// returns min(d(a,b), cap). cap must be >= 0.
int capped_distance(const GaifmanGraph& g, int a, int b, int cap);

/// Connected components; returns component id per vertex, ids assigned in
/// ascending order of each component's smallest element.
std::vector<int> connected_components(const GaifmanGraph& g, int& count_out);

} // namespace folocal
