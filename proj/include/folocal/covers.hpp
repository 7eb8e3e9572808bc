#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folocal/gaifman.hpp"

namespace folocal {

enum class CoverKind { Neighborhood, TreeLayers };

/// A family of element sets (pieces), each sorted ascending, with the
/// guarantee parameters it was built for. For neighborhood covers the
/// construction also records per-piece diagnostics: the seed element, the
/// number of inner-loop growth iterations, and the penultimate set M
/// (whose pairwise disjointness across pieces carries the size bound).
struct Cover {
    CoverKind kind = CoverKind::Neighborhood;
    int r = 0;
    int k = 0;      // neighborhood: exponent; pieces sit inside 2kr-balls
    int s = 0;      // neighborhood: 2kr

    std::vector<std::vector<int>> pieces;
    std::vector<std::vector<int>> kernels;   // filled by kernels(); else empty

    std::vector<int> seeds;                  // neighborhood cover only
    std::vector<int> iterations;             // neighborhood cover only
    std::vector<std::vector<int>> final_m;   // neighborhood cover only

    int piece_count() const { return static_cast<int>(pieces.size()); }
    std::uint64_t total_size() const;
    std::size_t max_piece_size() const;
};

/// The growth guard |N| > n^(1/k) * |M|, evaluated exactly as
/// |N|^k > n * |M|^k in 128-bit arithmetic.
bool peleg_threshold(std::uint64_t n_size, std::uint64_t m_size, std::uint64_t n, int k);

/// Sparse (r, 2kr)-neighborhood cover: grow a ball around each uncovered
/// seed until one more r-step no longer multiplies its size by n^(1/k),
/// emit the grown ball, retire the penultimate shell (see peleg_threshold).
Cover peleg_cover(const GaifmanGraph& g, int r, int k);

/// (r, w)-tree cover by BFS layering: per connected component, root at the
/// smallest element, emit the window of layers [i, i+2r] for every i up to
/// the component's depth. Total size <= (2r+1) * n.
Cover bfs_layer_cover(const GaifmanGraph& g, int r);

/// Fills cover.kernels: kernels[i] = {a in pieces[i] | N_r(a) subset of
/// pieces[i]}, computed in r peeling rounds over epoch-stamped membership
/// arrays. r must equal cover.r.
void kernels(const GaifmanGraph& g, Cover& cover, int r);

struct ValidationReport {
    bool property1 = false;               // every N_r(a) inside some piece
    std::optional<bool> property2;        // neighborhood: piece inside N_s(seed)
    std::optional<int> bad_element;       // property-1 counterexample
    std::optional<int> bad_piece;         // property-2 counterexample
    std::vector<int> piece_widths;        // filled when widths requested
    bool ok() const { return property1 && property2.value_or(true); }
};

/// Checks cover property 1 exactly (per-element BFS); for neighborhood
/// covers also property 2 against the recorded seeds (s = 2kr). When
/// with_widths is set, reports the heuristic width of the subgraph induced
/// on each piece (an upper bound on the piece's width).
ValidationReport validate_cover(const GaifmanGraph& g, const Cover& cover,
                                bool with_widths = false);

} // namespace folocal
