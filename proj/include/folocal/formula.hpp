#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace folocal {

enum class FormulaKind {
    RelAtom,   // R(x1, ..., xk)
    Equal,     // x = y
    DistLE,    // dist(x, y) <= r
    DistGT,    // dist(x, y) > r
    Not,
    And,
    Or,
    Implies,
    Exists,
    Forall,
};

/// Immutable FO formula node. Children are shared, so subformulas can be
/// reused freely. Variables are plain strings.
struct Formula {
    FormulaKind kind;
    std::string rel;               // RelAtom: relation symbol
    std::vector<std::string> vars; // RelAtom args; Equal/Dist: {x, y}; Exists/Forall: {bound var}
    int radius = 0;                // DistLE / DistGT
    std::shared_ptr<const Formula> left;  // unary/quantifier body, binary lhs
    std::shared_ptr<const Formula> right; // binary rhs
};

using FormulaPtr = std::shared_ptr<const Formula>;

FormulaPtr rel_atom(std::string rel, std::vector<std::string> vars);
FormulaPtr equal(std::string x, std::string y);
FormulaPtr dist_le(std::string x, std::string y, int radius);
FormulaPtr dist_gt(std::string x, std::string y, int radius);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr forall(std::string var, FormulaPtr body);

/// Conjunction/disjunction of a list; the empty conjunction is x=x-style
/// truth, so callers must pass at least one formula.
FormulaPtr conj(const std::vector<FormulaPtr>& fs);
FormulaPtr disj(const std::vector<FormulaPtr>& fs);

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Fully parenthesized concrete syntax; parse(print(f)) reproduces f.
std::string print_formula(const FormulaPtr& f);

std::set<std::string> free_variables(const FormulaPtr& f);

/// Checks well-formed scoping: no variable is bound twice on a path and no
/// quantifier rebinds a variable that is free elsewhere in its own scope
/// chain. Throws DomainError on violation.
void check_scoping(const FormulaPtr& f);

} // namespace folocal
