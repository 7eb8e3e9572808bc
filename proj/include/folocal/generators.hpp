#pragma once

#include <cstdint>

#include "folocal/structure.hpp"

namespace folocal {

/// width x height grid, row-major ids, binary relation E stored in both
/// orientations (2*W*H - W - H undirected edges).
Structure gen_grid(int width, int height);

/// Cycle 0-1-...-(n-1)-0 on relation E, both orientations. n = 1 gives a
/// single vertex with no edges, n = 2 a single edge.
Structure gen_cycle(int n);

/// Random graph with maximum degree <= deg: seeded trials adding an edge
/// when both endpoints have spare degree, stopping after n*deg/2 edges or
/// 10*n*deg trials. Deterministic for a fixed seed.
Structure gen_rand_deg(int n, int deg, std::uint64_t seed);

struct SetCoverInstance {
    Structure structure;
    int ground = 0;        // elements 0..ground-1, marked by unary P
    int sets = 0;          // elements ground..ground+sets-1
    int planted_optimum = 0;
};

/// Incidence structure of a set family over a ground set: binary E holds
/// (element, set) pairs, unary P marks ground elements. The first `cover`
/// sets partition the ground set, and each of them owns one private
/// element that no other set touches, so the minimum cover size is
/// exactly `cover`. Remaining sets are decoys drawn among non-private
/// elements, respecting the frequency cap (every element is in at most
/// `freq` sets).
SetCoverInstance gen_setcover(int ground, int sets, int freq, int cover, std::uint64_t seed);

} // namespace folocal
