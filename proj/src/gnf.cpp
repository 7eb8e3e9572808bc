#include "folocal/gnf.hpp"

#include <algorithm>

namespace folocal {

namespace {

const std::string kFreeVar = "x";

GnfPtr make(GaifmanSentence g) { return std::make_shared<const GaifmanSentence>(std::move(g)); }

} // namespace

const std::string& gnf_free_variable() { return kFreeVar; }

GnfPtr gnf_leaf(int r, int m, FormulaPtr psi) {
    GaifmanSentence g;
    g.op = GnfOp::Leaf;
    g.leaf = BasicLocalSentence{r, m, std::move(psi)};
    return make(std::move(g));
}

GnfPtr gnf_not(GnfPtr child) {
    GaifmanSentence g;
    g.op = GnfOp::Not;
    g.children.push_back(std::move(child));
    return make(std::move(g));
}

namespace {

GnfPtr nary(GnfOp op, std::vector<GnfPtr> children) {
    GaifmanSentence g;
    g.op = op;
    g.children = std::move(children);
    return make(std::move(g));
}

} // namespace

GnfPtr gnf_and(std::vector<GnfPtr> children) { return nary(GnfOp::And, std::move(children)); }
GnfPtr gnf_or(std::vector<GnfPtr> children) { return nary(GnfOp::Or, std::move(children)); }

namespace {

void validate_rec(const GnfPtr& g) {
    if (!g)
        throw DomainError("null sentence node");
    switch (g->op) {
    case GnfOp::Leaf: {
        const auto& leaf = g->leaf;
        if (!leaf.psi)
            throw DomainError("leaf without a formula");
        if (leaf.r < 1)
            throw DomainError("leaf radius must be >= 1");
        if (leaf.m < 1)
            throw DomainError("leaf witness count must be >= 1");
        auto fv = free_variables(leaf.psi);
        if (fv != std::set<std::string>{kFreeVar})
            throw DomainError("leaf formula must have exactly one free variable '" +
                              kFreeVar + "'");
        check_scoping(leaf.psi);
        if (!check_r_local(leaf.psi, leaf.r, kFreeVar))
            throw DomainError("leaf formula is not " + std::to_string(leaf.r) + "-local in '" +
                              kFreeVar + "'");
        break;
    }
    case GnfOp::Not:
        if (g->children.size() != 1)
            throw DomainError("'not' node must have exactly one child");
        validate_rec(g->children[0]);
        break;
    case GnfOp::And:
    case GnfOp::Or:
        if (g->children.empty())
            throw DomainError("'and'/'or' node must have at least one child");
        for (const auto& c : g->children)
            validate_rec(c);
        break;
    }
}

// True iff some m elements of p (given as indices into `elements`) are
// pairwise "far" per the precomputed matrix.
bool scattered_brute(const std::vector<int>& elements,
                     const std::vector<std::vector<bool>>& far, int m) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == m)
            return true;
        if (elements.size() - start <
            static_cast<std::size_t>(m - static_cast<int>(chosen.size())))
            return false;
        for (std::size_t i = start; i < elements.size(); ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!far[static_cast<std::size_t>(c)][i]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(static_cast<int>(i));
            if (self(self, i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

bool eval_leaf(const Structure& s, const Evaluator& ev, const BasicLocalSentence& leaf) {
    std::vector<int> p;
    Assignment a;
    for (int v = 0; v < s.universe_size(); ++v) {
        a[kFreeVar] = v;
        if (ev.eval(leaf.psi, a))
            p.push_back(v);
    }
    if (static_cast<int>(p.size()) < leaf.m)
        return false;
    if (leaf.m == 1)
        return true;
    BfsScratch scratch;
    std::vector<std::vector<bool>> far(p.size(), std::vector<bool>(p.size(), false));
    for (std::size_t i = 0; i < p.size(); ++i) {
        int src[1] = {p[i]};
        auto ball = scratch.ball(ev.graph(), src, 2 * leaf.r);
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j)
                continue;
            auto it = std::lower_bound(ball.begin(), ball.end(), p[j]);
            bool within = it != ball.end() && *it == p[j];
            far[i][j] = !within;
        }
    }
    return scattered_brute(p, far, leaf.m);
}

bool eval_rec(const Structure& s, const Evaluator& ev, const GnfPtr& g) {
    switch (g->op) {
    case GnfOp::Leaf:
        return eval_leaf(s, ev, g->leaf);
    case GnfOp::Not:
        return !eval_rec(s, ev, g->children[0]);
    case GnfOp::And:
        return std::all_of(g->children.begin(), g->children.end(),
                           [&](const GnfPtr& c) { return eval_rec(s, ev, c); });
    case GnfOp::Or:
        return std::any_of(g->children.begin(), g->children.end(),
                           [&](const GnfPtr& c) { return eval_rec(s, ev, c); });
    }
    throw DomainError("unreachable sentence op");
}

} // namespace

void validate_gnf(const GnfPtr& g) { validate_rec(g); }

bool eval_gnf_naive(const Structure& s, const GnfPtr& g) {
    validate_gnf(g);
    Evaluator ev(s);
    return eval_rec(s, ev, g);
}

} // namespace folocal
