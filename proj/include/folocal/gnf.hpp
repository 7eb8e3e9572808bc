#pragma once

#include <memory>
#include <string>
#include <vector>

#include "folocal/logic.hpp"

namespace folocal {

/// One basic local sentence: exists x_1..x_m (pairwise dist > 2r, and
/// psi(x_i) for each i), with psi syntactically r-local in "x".
struct BasicLocalSentence {
    int r = 1;
    int m = 1;
    FormulaPtr psi;
};

enum class GnfOp { Leaf, Not, And, Or };

/// Boolean combination tree over basic local sentences.
struct GaifmanSentence {
    GnfOp op = GnfOp::Leaf;
    BasicLocalSentence leaf;                       // op == Leaf
    std::vector<std::shared_ptr<const GaifmanSentence>> children;
};

using GnfPtr = std::shared_ptr<const GaifmanSentence>;

GnfPtr gnf_leaf(int r, int m, FormulaPtr psi);
GnfPtr gnf_not(GnfPtr child);
GnfPtr gnf_and(std::vector<GnfPtr> children);
GnfPtr gnf_or(std::vector<GnfPtr> children);

/// Throws DomainError unless every leaf has r >= 1, m >= 1, psi with free
/// variables exactly {"x"} passing check_r_local, and every inner node has
/// the right child count (not: 1, and/or: >= 1).
void validate_gnf(const GnfPtr& g);

const std::string& gnf_free_variable();   // "x"

/// Brute-force evaluation: per leaf, compute the set of elements
/// satisfying psi with the naive evaluator, then search for m of them
/// pairwise at distance > 2r using BFS distances; fold the Boolean tree.
/// The oracle for the engine; intended for small structures.
bool eval_gnf_naive(const Structure& s, const GnfPtr& g);

} // namespace folocal
