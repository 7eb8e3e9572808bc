#include "folocal/logic.hpp"

#include <algorithm>

namespace folocal {

namespace {

FormulaPtr relativize_rec(const FormulaPtr& f, int r, const std::string& x) {
    switch (f->kind) {
    case FormulaKind::RelAtom:
    case FormulaKind::Equal:
    case FormulaKind::DistLE:
    case FormulaKind::DistGT:
        return f;
    case FormulaKind::Not:
        return f_not(relativize_rec(f->left, r, x));
    case FormulaKind::And:
        return f_and(relativize_rec(f->left, r, x), relativize_rec(f->right, r, x));
    case FormulaKind::Or:
        return f_or(relativize_rec(f->left, r, x), relativize_rec(f->right, r, x));
    case FormulaKind::Implies:
        return f_implies(relativize_rec(f->left, r, x), relativize_rec(f->right, r, x));
    case FormulaKind::Exists: {
        if (f->vars[0] == x)
            throw DomainError("relativization would capture '" + x + "'");
        FormulaPtr body = relativize_rec(f->left, r, x);
        return exists(f->vars[0], f_and(dist_le(x, f->vars[0], r), std::move(body)));
    }
    case FormulaKind::Forall: {
        if (f->vars[0] == x)
            throw DomainError("relativization would capture '" + x + "'");
        FormulaPtr body = relativize_rec(f->left, r, x);
        return forall(f->vars[0], f_implies(dist_le(x, f->vars[0], r), std::move(body)));
    }
    }
    throw DomainError("unreachable formula kind");
}

bool is_guard(const FormulaPtr& f, int r, const std::string& x, const std::string& y) {
    return f->kind == FormulaKind::DistLE && f->radius == r && f->vars[0] == x &&
           f->vars[1] == y;
}

bool local_rec(const FormulaPtr& f, int r, const std::string& x) {
    switch (f->kind) {
    case FormulaKind::RelAtom:
    case FormulaKind::Equal:
        return true;
    case FormulaKind::DistLE:
    case FormulaKind::DistGT:
        // Bare distance atoms are not local: their value can change when
        // the structure is restricted to a piece.
        return false;
    case FormulaKind::Not:
        return local_rec(f->left, r, x);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
        return local_rec(f->left, r, x) && local_rec(f->right, r, x);
    case FormulaKind::Exists:
        return f->left->kind == FormulaKind::And &&
               is_guard(f->left->left, r, x, f->vars[0]) && local_rec(f->left->right, r, x);
    case FormulaKind::Forall:
        return f->left->kind == FormulaKind::Implies &&
               is_guard(f->left->left, r, x, f->vars[0]) && local_rec(f->left->right, r, x);
    }
    return false;
}

} // namespace

FormulaPtr relativize(const FormulaPtr& phi, int r, const std::string& x) {
    if (!phi)
        throw DomainError("null formula");
    if (r < 0)
        throw DomainError("relativization radius must be >= 0");
    return relativize_rec(phi, r, x);
}

bool check_r_local(const FormulaPtr& phi, int r, const std::string& x) {
    if (!phi)
        throw DomainError("null formula");
    return local_rec(phi, r, x);
}

namespace {

struct FreshNames {
    int counter = 0;
    std::string next() { return "_d" + std::to_string(++counter); }
};

// One hop: x = y, or some tuple contains both x and y. One disjunct per
// relation and ordered position pair, remaining positions existentially
// quantified left to right.
FormulaPtr delta_one(const std::string& x, const std::string& y, const Vocabulary& vocab,
                     FreshNames& fresh) {
    std::vector<FormulaPtr> disjuncts;
    disjuncts.push_back(equal(x, y));
    for (int rel = 0; rel < vocab.size(); ++rel) {
        const auto& sym = vocab.symbol(rel);
        if (sym.arity < 2)
            continue;
        for (int i = 0; i < sym.arity; ++i) {
            for (int j = i + 1; j < sym.arity; ++j) {
                for (bool x_first : {true, false}) {
                    std::vector<std::string> args(static_cast<std::size_t>(sym.arity));
                    args[static_cast<std::size_t>(i)] = x_first ? x : y;
                    args[static_cast<std::size_t>(j)] = x_first ? y : x;
                    std::vector<std::string> zs;
                    for (int p = 0; p < sym.arity; ++p)
                        if (p != i && p != j) {
                            zs.push_back(fresh.next());
                            args[static_cast<std::size_t>(p)] = zs.back();
                        }
                    FormulaPtr atom = rel_atom(sym.name, std::move(args));
                    for (auto it = zs.rbegin(); it != zs.rend(); ++it)
                        atom = exists(*it, std::move(atom));
                    disjuncts.push_back(std::move(atom));
                }
            }
        }
    }
    return disj(disjuncts);
}

FormulaPtr delta(int r, const std::string& x, const std::string& y, const Vocabulary& vocab,
                 FreshNames& fresh) {
    if (r == 0)
        return equal(x, y);
    if (r == 1)
        return delta_one(x, y, vocab, fresh);
    std::string z = fresh.next();
    FormulaPtr left = delta((r + 1) / 2, x, z, vocab, fresh);
    FormulaPtr right = delta(r / 2, z, y, vocab, fresh);
    return f_or(f_or(equal(x, y), delta_one(x, y, vocab, fresh)),
                exists(z, f_and(std::move(left), std::move(right))));
}

} // namespace

FormulaPtr expand_distance_atom(int r, const std::string& x, const std::string& y,
                                const Vocabulary& vocab) {
    if (r < 0)
        throw DomainError("distance radius must be >= 0");
    FreshNames fresh;
    return delta(r, x, y, vocab, fresh);
}

Evaluator::Evaluator(const Structure& s) : s_(s), graph_(s) {}

int Evaluator::lookup(const std::string& var,
                      const std::vector<std::pair<std::string, int>>& env) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == var)
            return it->second;
    throw DomainError("unassigned free variable '" + var + "'");
}

bool Evaluator::eval_rec(const FormulaPtr& f,
                         std::vector<std::pair<std::string, int>>& env) const {
    switch (f->kind) {
    case FormulaKind::RelAtom: {
        int rel = s_.vocabulary().index_of(f->rel);
        if (rel < 0)
            throw DomainError("unknown relation symbol '" + f->rel + "'");
        if (static_cast<int>(f->vars.size()) != s_.vocabulary().symbol(rel).arity)
            throw DomainError("atom '" + f->rel + "' has " + std::to_string(f->vars.size()) +
                              " arguments, arity is " +
                              std::to_string(s_.vocabulary().symbol(rel).arity));
        std::vector<int> tuple(f->vars.size());
        for (std::size_t i = 0; i < f->vars.size(); ++i)
            tuple[i] = lookup(f->vars[i], env);
        return s_.has_tuple(rel, tuple);
    }
    case FormulaKind::Equal:
        return lookup(f->vars[0], env) == lookup(f->vars[1], env);
    case FormulaKind::DistLE:
    case FormulaKind::DistGT: {
        int a = lookup(f->vars[0], env);
        int b = lookup(f->vars[1], env);
        bool le = capped_distance(graph_, a, b, f->radius + 1) <= f->radius;
        return f->kind == FormulaKind::DistLE ? le : !le;
    }
    case FormulaKind::Not:
        return !eval_rec(f->left, env);
    case FormulaKind::And:
        return eval_rec(f->left, env) && eval_rec(f->right, env);
    case FormulaKind::Or:
        return eval_rec(f->left, env) || eval_rec(f->right, env);
    case FormulaKind::Implies:
        return !eval_rec(f->left, env) || eval_rec(f->right, env);
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
        bool want = f->kind == FormulaKind::Exists;
        env.emplace_back(f->vars[0], 0);
        for (int v = 0; v < s_.universe_size(); ++v) {
            env.back().second = v;
            if (eval_rec(f->left, env) == want) {
                env.pop_back();
                return want;
            }
        }
        env.pop_back();
        return !want;
    }
    }
    throw DomainError("unreachable formula kind");
}

bool Evaluator::eval(const FormulaPtr& phi, const Assignment& assignment) const {
    if (!phi)
        throw DomainError("null formula");
    std::vector<std::pair<std::string, int>> env;
    env.reserve(assignment.size() + 8);
    for (const auto& [var, value] : assignment) {
        if (value < 0 || value >= s_.universe_size())
            throw DomainError("assignment of '" + var + "' is outside the universe");
        env.emplace_back(var, value);
    }
    return eval_rec(phi, env);
}

bool eval_naive(const Structure& s, const FormulaPtr& phi, const Assignment& assignment) {
    return Evaluator(s).eval(phi, assignment);
}

LocalEvaluator::LocalEvaluator(const Structure& piece) : piece_(piece), graph_(piece) {
    scratch_.reset(piece.universe_size());
}

int LocalEvaluator::lookup(const std::string& var,
                           const std::vector<std::pair<std::string, int>>& env) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == var)
            return it->second;
    throw DomainError("unassigned free variable '" + var + "'");
}

const std::vector<int>& LocalEvaluator::guard_ball(int center, int radius) {
    std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(center)) << 16) |
                        static_cast<std::uint64_t>(static_cast<std::uint32_t>(radius) & 0xffff);
    auto it = ball_cache_.find(key);
    if (it != ball_cache_.end())
        return it->second;
    int src[1] = {center};
    auto ball = scratch_.ball(graph_, src, radius);
    return ball_cache_.emplace(key, std::move(ball)).first->second;
}

bool LocalEvaluator::eval_rec(const FormulaPtr& f,
                              std::vector<std::pair<std::string, int>>& env) {
    switch (f->kind) {
    case FormulaKind::RelAtom: {
        int rel = piece_.vocabulary().index_of(f->rel);
        if (rel < 0)
            throw DomainError("unknown relation symbol '" + f->rel + "'");
        if (static_cast<int>(f->vars.size()) != piece_.vocabulary().symbol(rel).arity)
            throw DomainError("atom '" + f->rel + "' arity mismatch");
        std::vector<int> tuple(f->vars.size());
        for (std::size_t i = 0; i < f->vars.size(); ++i)
            tuple[i] = lookup(f->vars[i], env);
        return piece_.has_tuple(rel, tuple);
    }
    case FormulaKind::Equal:
        return lookup(f->vars[0], env) == lookup(f->vars[1], env);
    case FormulaKind::DistLE:
    case FormulaKind::DistGT: {
        int a = lookup(f->vars[0], env);
        int b = lookup(f->vars[1], env);
        const auto& ball = guard_ball(a, f->radius);
        bool le = std::binary_search(ball.begin(), ball.end(), b);
        return f->kind == FormulaKind::DistLE ? le : !le;
    }
    case FormulaKind::Not:
        return !eval_rec(f->left, env);
    case FormulaKind::And:
        return eval_rec(f->left, env) && eval_rec(f->right, env);
    case FormulaKind::Or:
        return eval_rec(f->left, env) || eval_rec(f->right, env);
    case FormulaKind::Implies:
        return !eval_rec(f->left, env) || eval_rec(f->right, env);
    case FormulaKind::Exists: {
        const FormulaPtr& body = f->left;
        if (body->kind == FormulaKind::And && body->left->kind == FormulaKind::DistLE &&
            body->left->vars[1] == f->vars[0] && body->left->vars[0] != f->vars[0]) {
            int center = lookup(body->left->vars[0], env);
            const auto& ball = guard_ball(center, body->left->radius);
            env.emplace_back(f->vars[0], 0);
            for (int v : ball) {
                env.back().second = v;
                if (eval_rec(body->right, env)) {
                    env.pop_back();
                    return true;
                }
            }
            env.pop_back();
            return false;
        }
        env.emplace_back(f->vars[0], 0);
        for (int v = 0; v < piece_.universe_size(); ++v) {
            env.back().second = v;
            if (eval_rec(body, env)) {
                env.pop_back();
                return true;
            }
        }
        env.pop_back();
        return false;
    }
    case FormulaKind::Forall: {
        const FormulaPtr& body = f->left;
        if (body->kind == FormulaKind::Implies && body->left->kind == FormulaKind::DistLE &&
            body->left->vars[1] == f->vars[0] && body->left->vars[0] != f->vars[0]) {
            int center = lookup(body->left->vars[0], env);
            const auto& ball = guard_ball(center, body->left->radius);
            env.emplace_back(f->vars[0], 0);
            for (int v : ball) {
                env.back().second = v;
                if (!eval_rec(body->right, env)) {
                    env.pop_back();
                    return false;
                }
            }
            env.pop_back();
            return true;
        }
        env.emplace_back(f->vars[0], 0);
        for (int v = 0; v < piece_.universe_size(); ++v) {
            env.back().second = v;
            if (!eval_rec(body, env)) {
                env.pop_back();
                return false;
            }
        }
        env.pop_back();
        return true;
    }
    }
    throw DomainError("unreachable formula kind");
}

bool LocalEvaluator::eval(const FormulaPtr& psi, const std::string& x, int a) {
    if (!psi)
        throw DomainError("null formula");
    if (a < 0 || a >= piece_.universe_size())
        throw DomainError("element " + std::to_string(a) + " is not in the piece");
    std::vector<std::pair<std::string, int>> env;
    env.emplace_back(x, a);
    return eval_rec(psi, env);
}

bool eval_local(const Structure& piece, const FormulaPtr& psi, const std::string& x, int a) {
    return LocalEvaluator(piece).eval(psi, x, a);
}

} // namespace folocal
