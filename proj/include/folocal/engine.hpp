#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "folocal/covers.hpp"
#include "folocal/gnf.hpp"
#include "folocal/structure.hpp"

namespace folocal {

enum class CoverStrategy { Peleg, BfsLayers };

struct EngineConfig {
    CoverStrategy strategy = CoverStrategy::Peleg;
    int k = 2;                        // Peleg exponent
    bool record_witnesses = true;
    bool parallel_pieces = false;
    int threads = 0;                  // 0: hardware concurrency
    bool verify_scattered_distances = false; // assert piece-distance equivalence
};

struct LeafReport {
    int r = 0;
    int m = 0;
    bool verdict = false;
    std::size_t satisfier_count = 0;          // |P|
    int piece_count = 0;
    std::uint64_t cover_total_size = 0;
    std::vector<int> witnesses;               // filled when satisfied and recording
    std::uint64_t cover_ns = 0;
    std::uint64_t kernels_ns = 0;
    std::uint64_t local_eval_ns = 0;
    std::uint64_t scattered_ns = 0;
};

struct EvalReport {
    bool verdict = false;
    std::vector<LeafReport> leaves;
    std::uint64_t gaifman_ns = 0;
    std::uint64_t total_ns = 0;
};

/// P = {a | s satisfies psi(a)} for an r-local psi, computed by evaluating
/// each element inside the first cover piece whose kernel contains it.
/// cover.kernels must be filled for radius r and their union must cover
/// the universe.
std::vector<int> local_satisfier_set(const Structure& s, const Cover& cover,
                                     const FormulaPtr& psi, int r,
                                     const EngineConfig& cfg = {});

struct ScatteredResult {
    bool found = false;
    std::vector<int> witnesses;
    int greedy_picks = 0;
    bool used_backtracking = false;
    bool distance_check_ok = true;   // meaningful when verification requested
};

/// Decides whether p contains m elements pairwise at distance > radius.
/// Phase 1 greedily picks elements in id order, removing each pick's
/// radius-ball; m picks succeed immediately and zero picks fail. Otherwise
/// phase 2 restricts to the induced substructure on the 2*radius-ball of
/// the picks and backtracks over candidates there. g must be the Gaifman
/// graph of s.
ScatteredResult scattered_exists(const Structure& s, const GaifmanGraph& g,
                                 std::span<const int> p, int radius, int m,
                                 bool verify_distances = false);

/// The full pipeline: per leaf, build a cover for the leaf's radius,
/// compute kernels, collect the satisfier set, and run the scattered-set
/// decision with radius 2r; then fold the Boolean tree.
EvalReport check_sentence(const Structure& s, const GnfPtr& g, const EngineConfig& cfg = {});

} // namespace folocal
