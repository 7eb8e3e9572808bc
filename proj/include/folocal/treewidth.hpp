#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folocal/gaifman.hpp"
#include "folocal/structure.hpp"

namespace folocal {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // sorted element sets
    std::vector<std::pair<int, int>> tree_edges; // over bag indices

    int width() const;
};

struct DecompositionCheck {
    bool ok = true;
    std::string violation; // empty when ok
};

/// Checks: the tree is acyclic and connected; every element occurs in a
/// non-empty, tree-connected set of bags; every tuple (edge) lies inside
/// some bag.
DecompositionCheck validate_decomposition(const Structure& s, const TreeDecomposition& td);
DecompositionCheck validate_decomposition(const GaifmanGraph& g, const TreeDecomposition& td);

/// Min-degree elimination with min-fill then smallest-id tie-breaking.
/// Always returns a valid decomposition; its width is an upper bound.
TreeDecomposition heuristic_decomposition(const GaifmanGraph& g);
TreeDecomposition heuristic_decomposition(const Structure& s);

int heuristic_width(const GaifmanGraph& g);
int heuristic_width(const Structure& s);

/// Exact treewidth by branch-and-bound over elimination orders with
/// memoization on eliminated vertex sets. Throws DomainError when the
/// graph has more than cap vertices (hard limit 32).
int exact_width(const GaifmanGraph& g, int cap = 12);
int exact_width(const Structure& s, int cap = 12);

} // namespace folocal
