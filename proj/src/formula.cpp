#include "folocal/formula.hpp"

#include <algorithm>

#include "folocal/structure.hpp"

namespace folocal {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

} // namespace

FormulaPtr rel_atom(std::string rel, std::vector<std::string> vars) {
    if (rel.empty())
        throw DomainError("relation atom needs a symbol name");
    if (vars.empty())
        throw DomainError("relation atom needs at least one argument");
    Formula f;
    f.kind = FormulaKind::RelAtom;
    f.rel = std::move(rel);
    f.vars = std::move(vars);
    return make(std::move(f));
}

FormulaPtr equal(std::string x, std::string y) {
    Formula f;
    f.kind = FormulaKind::Equal;
    f.vars = {std::move(x), std::move(y)};
    return make(std::move(f));
}

FormulaPtr dist_le(std::string x, std::string y, int radius) {
    if (radius < 0)
        throw DomainError("distance atom radius must be >= 0");
    Formula f;
    f.kind = FormulaKind::DistLE;
    f.vars = {std::move(x), std::move(y)};
    f.radius = radius;
    return make(std::move(f));
}

FormulaPtr dist_gt(std::string x, std::string y, int radius) {
    if (radius < 0)
        throw DomainError("distance atom radius must be >= 0");
    Formula f;
    f.kind = FormulaKind::DistGT;
    f.vars = {std::move(x), std::move(y)};
    f.radius = radius;
    return make(std::move(f));
}

FormulaPtr f_not(FormulaPtr f) {
    Formula g;
    g.kind = FormulaKind::Not;
    g.left = std::move(f);
    return make(std::move(g));
}

namespace {

FormulaPtr binary(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = kind;
    f.left = std::move(a);
    f.right = std::move(b);
    return make(std::move(f));
}

FormulaPtr quantifier(FormulaKind kind, std::string var, FormulaPtr body) {
    if (var.empty())
        throw DomainError("quantifier needs a variable");
    Formula f;
    f.kind = kind;
    f.vars = {std::move(var)};
    f.left = std::move(body);
    return make(std::move(f));
}

} // namespace

FormulaPtr f_and(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Implies, std::move(a), std::move(b)); }
FormulaPtr exists(std::string var, FormulaPtr body) { return quantifier(FormulaKind::Exists, std::move(var), std::move(body)); }
FormulaPtr forall(std::string var, FormulaPtr body) { return quantifier(FormulaKind::Forall, std::move(var), std::move(body)); }

FormulaPtr conj(const std::vector<FormulaPtr>& fs) {
    if (fs.empty())
        throw DomainError("empty conjunction");
    FormulaPtr out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        out = f_and(out, fs[i]);
    return out;
}

FormulaPtr disj(const std::vector<FormulaPtr>& fs) {
    if (fs.empty())
        throw DomainError("empty disjunction");
    FormulaPtr out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        out = f_or(out, fs[i]);
    return out;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    if (a->kind != b->kind || a->rel != b->rel || a->vars != b->vars || a->radius != b->radius)
        return false;
    return formula_equal(a->left, b->left) && formula_equal(a->right, b->right);
}

namespace {

void print_rec(const FormulaPtr& f, std::string& out) {
    switch (f->kind) {
    case FormulaKind::RelAtom:
        out += f->rel;
        out += '(';
        for (std::size_t i = 0; i < f->vars.size(); ++i) {
            if (i)
                out += ", ";
            out += f->vars[i];
        }
        out += ')';
        break;
    case FormulaKind::Equal:
        out += f->vars[0];
        out += " = ";
        out += f->vars[1];
        break;
    case FormulaKind::DistLE:
    case FormulaKind::DistGT:
        out += "dist(";
        out += f->vars[0];
        out += ", ";
        out += f->vars[1];
        out += f->kind == FormulaKind::DistLE ? ") <= " : ") > ";
        out += std::to_string(f->radius);
        break;
    case FormulaKind::Not:
        out += "not ";
        print_rec(f->left, out);
        break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
        out += '(';
        print_rec(f->left, out);
        out += f->kind == FormulaKind::And ? " and " : f->kind == FormulaKind::Or ? " or " : " -> ";
        print_rec(f->right, out);
        out += ')';
        break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
        out += f->kind == FormulaKind::Exists ? "exists " : "forall ";
        out += f->vars[0];
        out += " (";
        print_rec(f->left, out);
        out += ')';
        break;
    }
}

} // namespace

std::string print_formula(const FormulaPtr& f) {
    if (!f)
        throw DomainError("cannot print a null formula");
    std::string out;
    print_rec(f, out);
    return out;
}

namespace {

void free_rec(const FormulaPtr& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind) {
    case FormulaKind::RelAtom:
    case FormulaKind::Equal:
    case FormulaKind::DistLE:
    case FormulaKind::DistGT:
        for (const auto& v : f->vars)
            if (std::find(bound.begin(), bound.end(), v) == bound.end())
                out.insert(v);
        break;
    case FormulaKind::Not:
        free_rec(f->left, bound, out);
        break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
        free_rec(f->left, bound, out);
        free_rec(f->right, bound, out);
        break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
        bound.push_back(f->vars[0]);
        free_rec(f->left, bound, out);
        bound.pop_back();
        break;
    }
}

void scoping_rec(const FormulaPtr& f, std::vector<std::string>& bound) {
    switch (f->kind) {
    case FormulaKind::RelAtom:
    case FormulaKind::Equal:
    case FormulaKind::DistLE:
    case FormulaKind::DistGT:
        break;
    case FormulaKind::Not:
        scoping_rec(f->left, bound);
        break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
        scoping_rec(f->left, bound);
        scoping_rec(f->right, bound);
        break;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        const auto& v = f->vars[0];
        if (std::find(bound.begin(), bound.end(), v) != bound.end())
            throw DomainError("variable '" + v + "' is bound twice on one path");
        bound.push_back(v);
        scoping_rec(f->left, bound);
        bound.pop_back();
        break;
    }
    }
}

} // namespace

std::set<std::string> free_variables(const FormulaPtr& f) {
    if (!f)
        throw DomainError("null formula");
    std::set<std::string> out;
    std::vector<std::string> bound;
    free_rec(f, bound, out);
    return out;
}

void check_scoping(const FormulaPtr& f) {
    if (!f)
        throw DomainError("null formula");
    std::vector<std::string> bound;
    scoping_rec(f, bound);
}

} // namespace folocal
