#include "folocal/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>

namespace folocal {

int TreeDecomposition::width() const {
    std::size_t largest = 0;
    for (const auto& b : bags)
        largest = std::max(largest, b.size());
    return static_cast<int>(largest) - 1;
}

namespace {

bool tree_is_connected_acyclic(int nodes, const std::vector<std::pair<int, int>>& edges,
                               std::string& why) {
    if (nodes == 0) {
        why = "decomposition has no bags";
        return false;
    }
    if (static_cast<int>(edges.size()) != nodes - 1) {
        why = "tree must have exactly bags-1 edges";
        return false;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= nodes || v < 0 || v >= nodes) {
            why = "tree edge endpoint out of range";
            return false;
        }
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int w : adj[static_cast<std::size_t>(queue[head])])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    if (queue.size() != static_cast<std::size_t>(nodes)) {
        why = "tree is not connected";
        return false;
    }
    return true; // connected with n-1 edges implies acyclic
}

// Occurrence sets must be non-empty and connected; checked by counting,
// for each element, the bags containing it and the edges joining two such
// bags: connected iff bag_count == joining_edges + 1 (forest + connected).
DecompositionCheck check_occurrences(int universe, const TreeDecomposition& td) {
    DecompositionCheck out;
    std::vector<int> bag_count(static_cast<std::size_t>(universe), 0);
    std::vector<int> join_count(static_cast<std::size_t>(universe), 0);
    for (const auto& bag : td.bags)
        for (int v : bag) {
            if (v < 0 || v >= universe) {
                out.ok = false;
                out.violation = "bag element out of range";
                return out;
            }
            ++bag_count[static_cast<std::size_t>(v)];
        }
    for (auto [bu, bv] : td.tree_edges) {
        const auto& a = td.bags[static_cast<std::size_t>(bu)];
        const auto& b = td.bags[static_cast<std::size_t>(bv)];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(common));
        for (int v : common)
            ++join_count[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < universe; ++v) {
        if (bag_count[static_cast<std::size_t>(v)] == 0) {
            out.ok = false;
            out.violation = "element " + std::to_string(v) + " occurs in no bag";
            return out;
        }
        if (join_count[static_cast<std::size_t>(v)] != bag_count[static_cast<std::size_t>(v)] - 1) {
            out.ok = false;
            out.violation =
                "occurrence set of element " + std::to_string(v) + " is not connected";
            return out;
        }
    }
    return out;
}

bool bag_contains_all(const std::vector<int>& bag, std::span<const int> needed) {
    for (int v : needed)
        if (!std::binary_search(bag.begin(), bag.end(), v))
            return false;
    return true;
}

DecompositionCheck validate_common(int universe, const TreeDecomposition& td) {
    DecompositionCheck out;
    std::string why;
    if (!tree_is_connected_acyclic(static_cast<int>(td.bags.size()), td.tree_edges, why)) {
        out.ok = false;
        out.violation = why;
        return out;
    }
    for (const auto& bag : td.bags)
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
            out.ok = false;
            out.violation = "bags must be sorted sets";
            return out;
        }
    return check_occurrences(universe, td);
}

// Occurrence-connectivity implies any clique of covered pairs shares a
// bag, but we check tuple coverage directly as defined.
template <typename TupleSource>
DecompositionCheck validate_tuples(int universe, const TreeDecomposition& td,
                                   TupleSource&& tuples_ok) {
    DecompositionCheck out = validate_common(universe, td);
    if (!out.ok)
        return out;
    return tuples_ok();
}

} // namespace

DecompositionCheck validate_decomposition(const Structure& s, const TreeDecomposition& td) {
    return validate_tuples(s.universe_size(), td, [&]() {
        DecompositionCheck out;
        for (int r = 0; r < s.relation_count(); ++r)
            for (const auto& t : s.tuples(r)) {
                bool covered = false;
                for (const auto& bag : td.bags)
                    if (bag_contains_all(bag, t)) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    out.ok = false;
                    out.violation = "a tuple of relation '" + s.vocabulary().symbol(r).name +
                                    "' lies in no bag";
                    return out;
                }
            }
        return out;
    });
}

DecompositionCheck validate_decomposition(const GaifmanGraph& g, const TreeDecomposition& td) {
    return validate_tuples(g.size(), td, [&]() {
        DecompositionCheck out;
        for (int u = 0; u < g.size(); ++u)
            for (int w : g.neighbors(u)) {
                if (w < u)
                    continue;
                bool covered = false;
                int pair[2] = {u, w};
                for (const auto& bag : td.bags)
                    if (bag_contains_all(bag, pair)) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    out.ok = false;
                    out.violation = "edge {" + std::to_string(u) + "," + std::to_string(w) +
                                    "} lies in no bag";
                    return out;
                }
            }
        return out;
    });
}

namespace {

// Working copy of the graph during elimination, adjacency as sorted sets.
struct EliminationGraph {
    std::vector<std::vector<int>> adj;
    std::vector<char> alive;

    explicit EliminationGraph(const GaifmanGraph& g) {
        adj.resize(static_cast<std::size_t>(g.size()));
        alive.assign(static_cast<std::size_t>(g.size()), 1);
        for (int v = 0; v < g.size(); ++v)
            adj[static_cast<std::size_t>(v)].assign(g.neighbors(v).begin(),
                                                    g.neighbors(v).end());
    }

    bool has(int u, int v) const {
        const auto& a = adj[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    void connect(int u, int v) {
        auto& a = adj[static_cast<std::size_t>(u)];
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
        auto& b = adj[static_cast<std::size_t>(v)];
        b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    }

    void remove(int v) {
        alive[static_cast<std::size_t>(v)] = 0;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            auto& a = adj[static_cast<std::size_t>(w)];
            a.erase(std::lower_bound(a.begin(), a.end(), v));
        }
        adj[static_cast<std::size_t>(v)].clear();
    }

    int fill_needed(int v) const {
        const auto& ns = adj[static_cast<std::size_t>(v)];
        int missing = 0;
        for (std::size_t i = 0; i < ns.size(); ++i)
            for (std::size_t j = i + 1; j < ns.size(); ++j)
                if (!has(ns[i], ns[j]))
                    ++missing;
        return missing;
    }
};

} // namespace

TreeDecomposition heuristic_decomposition(const GaifmanGraph& g) {
    int n = g.size();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }

    EliminationGraph work(g);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> later_neighbors(static_cast<std::size_t>(n));

    for (int step = 0; step < n; ++step) {
        int best = -1;
        int best_deg = 0;
        int best_fill = 0;
        for (int v = 0; v < n; ++v) {
            if (!work.alive[static_cast<std::size_t>(v)])
                continue;
            int deg = static_cast<int>(work.adj[static_cast<std::size_t>(v)].size());
            if (best >= 0 && deg > best_deg)
                continue;
            int fill = work.fill_needed(v);
            if (best < 0 || deg < best_deg || (deg == best_deg && fill < best_fill)) {
                best = v;
                best_deg = deg;
                best_fill = fill;
            }
        }
        later_neighbors[static_cast<std::size_t>(best)] =
            work.adj[static_cast<std::size_t>(best)];
        position[static_cast<std::size_t>(best)] = step;
        order.push_back(best);
        const auto ns = work.adj[static_cast<std::size_t>(best)];
        for (std::size_t i = 0; i < ns.size(); ++i)
            for (std::size_t j = i + 1; j < ns.size(); ++j)
                if (!work.has(ns[i], ns[j]))
                    work.connect(ns[i], ns[j]);
        work.remove(best);
    }

    // Bag of v: v plus its later neighbors in the fill graph. Attach each
    // bag to the bag of the earliest-eliminated later neighbor; bags with
    // none attach to the next bag in order.
    td.bags.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& bag = td.bags[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])];
        bag = later_neighbors[static_cast<std::size_t>(v)];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
    }
    for (int step = 0; step < n - 1; ++step) {
        int v = order[static_cast<std::size_t>(step)];
        int parent = step + 1;
        int earliest = n;
        for (int w : later_neighbors[static_cast<std::size_t>(v)])
            earliest = std::min(earliest, position[static_cast<std::size_t>(w)]);
        if (earliest < n)
            parent = earliest;
        td.tree_edges.emplace_back(step, parent);
    }
    return td;
}

TreeDecomposition heuristic_decomposition(const Structure& s) {
    return heuristic_decomposition(GaifmanGraph(s));
}

int heuristic_width(const GaifmanGraph& g) { return heuristic_decomposition(g).width(); }
int heuristic_width(const Structure& s) { return heuristic_decomposition(s).width(); }

namespace {

// Branch and bound for "is there an elimination order with back-degree
// <= w": vertices with degree <= w whose remaining neighborhood is a
// clique can always be eliminated first; otherwise branch over eliminable
// vertices, memoizing eliminated sets that failed.
class WidthDecider {
public:
    WidthDecider(std::vector<std::uint32_t> masks, int n) : masks_(std::move(masks)), n_(n) {}

    bool decide(int w) {
        w_ = w;
        failed_.clear();
        auto masks = masks_;
        std::uint32_t all = n_ == 32 ? ~0u : ((1u << n_) - 1);
        return search(masks, all);
    }

private:
    bool search(std::vector<std::uint32_t>& masks, std::uint32_t remaining) {
        int live = std::popcount(remaining);
        if (live <= w_ + 1)
            return true;

        // Greedy phase: simplicial vertices of degree <= w are always safe.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t bits = remaining; bits;) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                std::uint32_t nb = masks_at(masks, v) & remaining;
                int deg = std::popcount(nb);
                if (deg > w_)
                    continue;
                if (is_clique(masks, nb)) {
                    remaining &= ~(1u << v);
                    live = std::popcount(remaining);
                    if (live <= w_ + 1)
                        return true;
                    changed = true;
                }
            }
        }

        if (failed_.contains(remaining))
            return false;

        // Branch over eliminable vertices, lowest degree first.
        std::vector<std::pair<int, int>> candidates;
        for (std::uint32_t bits = remaining; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            int deg = std::popcount(masks_at(masks, v) & remaining);
            if (deg <= w_)
                candidates.emplace_back(deg, v);
        }
        std::sort(candidates.begin(), candidates.end());
        for (auto [deg, v] : candidates) {
            auto saved = masks;
            std::uint32_t nb = masks_at(masks, v) & remaining;
            for (std::uint32_t bits = nb; bits;) {
                int u = std::countr_zero(bits);
                bits &= bits - 1;
                masks[static_cast<std::size_t>(u)] |= nb & ~(1u << u);
            }
            if (search(masks, remaining & ~(1u << v)))
                return true;
            masks = std::move(saved);
        }
        failed_.insert(remaining);
        return false;
    }

    static std::uint32_t masks_at(const std::vector<std::uint32_t>& masks, int v) {
        return masks[static_cast<std::size_t>(v)];
    }

    bool is_clique(const std::vector<std::uint32_t>& masks, std::uint32_t set) const {
        for (std::uint32_t bits = set; bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            if ((masks_at(masks, v) & set & ~(1u << v)) != (set & ~(1u << v)))
                return false;
        }
        return true;
    }

    std::vector<std::uint32_t> masks_;
    int n_;
    int w_ = 0;
    std::unordered_set<std::uint32_t> failed_;
};

} // namespace

int exact_width(const GaifmanGraph& g, int cap) {
    int n = g.size();
    if (cap > 32)
        throw DomainError("exact width supports at most 32 vertices");
    if (n > cap)
        throw DomainError("graph with " + std::to_string(n) +
                          " vertices exceeds the exact-width cap of " + std::to_string(cap));
    if (n == 0)
        return -1;

    std::vector<std::uint32_t> masks(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            masks[static_cast<std::size_t>(v)] |= 1u << w;

    int upper = heuristic_width(g);
    // Degeneracy is a lower bound on treewidth.
    int lower = 0;
    {
        std::vector<std::uint32_t> work = masks;
        std::uint32_t remaining = n == 32 ? ~0u : ((1u << n) - 1);
        while (remaining) {
            int best = -1, best_deg = n + 1;
            for (std::uint32_t bits = remaining; bits;) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                int deg = std::popcount(work[static_cast<std::size_t>(v)] & remaining);
                if (deg < best_deg) {
                    best_deg = deg;
                    best = v;
                }
            }
            lower = std::max(lower, best_deg);
            remaining &= ~(1u << best);
        }
    }

    WidthDecider decider(masks, n);
    for (int w = lower; w < upper; ++w)
        if (decider.decide(w))
            return w;
    return upper;
}

int exact_width(const Structure& s, int cap) { return exact_width(GaifmanGraph(s), cap); }

} // namespace folocal
