#pragma once

#include <vector>

#include "folocal/structure.hpp"

namespace folocal {

/// For each radius 0..r_max, the maximum over all elements a of the width
/// of the substructure induced on the r-ball of a. Widths are heuristic
/// upper bounds, replaced by exact values when the ball has at most 12
/// elements. A reporting aid, not used by the engine.
std::vector<int> local_tree_width_profile(const Structure& s, int r_max);

} // namespace folocal
