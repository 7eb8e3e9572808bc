#pragma once

#include <string>
#include <unordered_map>

#include "folocal/formula.hpp"
#include "folocal/gaifman.hpp"
#include "folocal/structure.hpp"

namespace folocal {

using Assignment = std::unordered_map<std::string, int>;

/// Relativizes every quantifier in phi to the r-ball around x:
/// exists y B becomes exists y (dist(x,y) <= r and B), forall y B becomes
/// forall y (dist(x,y) <= r -> B). Throws if phi quantifies x itself.
FormulaPtr relativize(const FormulaPtr& phi, int r, const std::string& x);

/// True iff phi is syntactically r-local in x: every quantifier carries a
/// dist(x,·) <= r guard in the right polarity, and no other distance atoms
/// occur. Accepts arbitrary Boolean recombination of such formulas.
bool check_r_local(const FormulaPtr& phi, int r, const std::string& x);

/// Pure-FO formula equivalent to dist(x,y) <= r over the given vocabulary,
/// built by the doubling scheme: d_0 = (x=y), d_1 adds one disjunct per
/// relation and ordered position pair, d_r = d_0 or d_1 or
/// exists z (d_ceil(r/2)(x,z) and d_floor(r/2)(z,y)). Only used to
/// cross-validate the built-in distance atoms.
FormulaPtr expand_distance_atom(int r, const std::string& x, const std::string& y,
                                const Vocabulary& vocab);

/// Naive Tarskian evaluator; quantifiers range over the whole universe and
/// distance atoms run a truncated BFS on the Gaifman graph. This is the
/// oracle the rest of the project is checked against: intentionally plain.
class Evaluator {
public:
    explicit Evaluator(const Structure& s);

    bool eval(const FormulaPtr& phi, const Assignment& assignment) const;

    const GaifmanGraph& graph() const { return graph_; }

private:
    bool eval_rec(const FormulaPtr& f, std::vector<std::pair<std::string, int>>& env) const;
    int lookup(const std::string& var, const std::vector<std::pair<std::string, int>>& env) const;

    const Structure& s_;
    GaifmanGraph graph_;
};

bool eval_naive(const Structure& s, const FormulaPtr& phi, const Assignment& assignment);

/// Evaluator for r-local formulas on a piece. Semantics are identical to
/// eval_naive on the piece; the difference is that guarded quantifiers
/// enumerate only the guard ball (computed by BFS inside the piece and
/// cached), which keeps the engine's per-piece work proportional to the
/// ball instead of the piece.
class LocalEvaluator {
public:
    explicit LocalEvaluator(const Structure& piece);

    /// a is an element of the piece (local id).
    bool eval(const FormulaPtr& psi, const std::string& x, int a);

private:
    bool eval_rec(const FormulaPtr& f, std::vector<std::pair<std::string, int>>& env);
    int lookup(const std::string& var, const std::vector<std::pair<std::string, int>>& env) const;
    const std::vector<int>& guard_ball(int center, int radius);

    const Structure& piece_;
    GaifmanGraph graph_;
    BfsScratch scratch_;
    std::unordered_map<std::uint64_t, std::vector<int>> ball_cache_;
};

bool eval_local(const Structure& piece, const FormulaPtr& psi, const std::string& x, int a);

} // namespace folocal
