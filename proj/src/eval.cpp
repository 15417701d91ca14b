#include "meadowlab/eval.hpp"

#include <algorithm>
#include <set>

namespace meadowlab {

Elem eval(const TermPtr& t, const Algebra& a, const Env& env) {
    switch (t->kind) {
    case Term::Kind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw Error(ErrorCode::UnboundVariable, "variable '" + t->name + "' is not bound");
        return it->second;
    }
    case Term::Kind::Zero: return a.zero();
    case Term::Kind::One: return a.one();
    case Term::Kind::Numeral: {
        long k = t->value;
        bool negate = k < 0;
        if (negate) k = -k;
        Elem acc = a.zero();
        for (long i = 0; i < k; ++i) acc = a.add(acc, a.one());
        return negate ? a.neg(acc) : acc;
    }
    case Term::Kind::Add: return a.add(eval(t->left, a, env), eval(t->right, a, env));
    case Term::Kind::Mul: return a.mul(eval(t->left, a, env), eval(t->right, a, env));
    case Term::Kind::Neg: return a.neg(eval(t->left, a, env));
    case Term::Kind::Star: return a.star(eval(t->left, a, env));
    case Term::Kind::Root: return a.root(t->prime, eval(t->left, a, env));
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

long eval_idx(const TermPtr& t, const Tables& tab, const std::map<std::string, long>& env) {
    switch (t->kind) {
    case Term::Kind::Var: {
        auto it = env.find(t->name);
        if (it == env.end()) throw Error(ErrorCode::UnboundVariable, "variable '" + t->name + "' is not bound");
        return it->second;
    }
    case Term::Kind::Zero: return tab.zero;
    case Term::Kind::One: return tab.one;
    case Term::Kind::Numeral: return tab.numeral(t->value);
    case Term::Kind::Add: return tab.add_i(eval_idx(t->left, tab, env), eval_idx(t->right, tab, env));
    case Term::Kind::Mul: return tab.mul_i(eval_idx(t->left, tab, env), eval_idx(t->right, tab, env));
    case Term::Kind::Neg: return tab.neg[eval_idx(t->left, tab, env)];
    case Term::Kind::Star: return tab.star[eval_idx(t->left, tab, env)];
    case Term::Kind::Root: return tab.root_i(t->prime, eval_idx(t->left, tab, env));
    }
    throw Error(ErrorCode::Internal, "unreachable");
}

namespace {

std::vector<std::string> vars_of(const std::vector<Equation>& eqs) {
    std::vector<std::string> vars;
    for (const auto& e : eqs) {
        free_vars(e.lhs, vars);
        free_vars(e.rhs, vars);
    }
    return vars;
}

void require_finite(const AlgebraPtr& a, long cap) {
    if (a->size() == 0)
        throw Error(ErrorCode::InfiniteCarrier, "exhaustive satisfaction requires a finite carrier");
    if (a->size() > cap)
        throw Error(ErrorCode::CapExceeded,
                    "carrier " + std::to_string(a->size()) + " exceeds cap " + std::to_string(cap));
}

Env to_env(const AlgebraPtr& a, const std::vector<std::string>& vars, const std::vector<long>& assign) {
    Env env;
    for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = a->element(assign[i]);
    return env;
}

/// Enumerate assignments lexicographically; returns false when pred fails,
/// leaving the failing assignment in place.
template <typename Pred>
bool forall_assignments(long n, std::vector<long>& assign, Pred pred) {
    std::fill(assign.begin(), assign.end(), 0);
    if (assign.empty()) return pred(assign);
    while (true) {
        if (!pred(assign)) return false;
        size_t j = assign.size();
        while (j > 0) {
            if (++assign[j - 1] < n) break;
            assign[j - 1] = 0;
            --j;
        }
        if (j == 0) return true;
    }
}

} // namespace

SatResult satisfies(const AlgebraPtr& a, const Equation& eq, long cap) {
    require_finite(a, cap);
    const Tables& tab = a->tables();
    auto vars = vars_of({eq});
    std::vector<long> assign(vars.size());
    std::map<std::string, long> env;
    auto pred = [&](const std::vector<long>& as) {
        for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = as[i];
        return eval_idx(eq.lhs, tab, env) == eval_idx(eq.rhs, tab, env);
    };
    if (forall_assignments(tab.n, assign, pred)) return {true, std::nullopt};
    return {false, to_env(a, vars, assign)};
}

SatResult satisfies(const AlgebraPtr& a, const Quasiequation& q, long cap) {
    require_finite(a, cap);
    const Tables& tab = a->tables();
    std::vector<Equation> all = q.premises;
    all.push_back(q.conclusion);
    auto vars = vars_of(all);
    std::vector<long> assign(vars.size());
    std::map<std::string, long> env;
    auto pred = [&](const std::vector<long>& as) {
        for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = as[i];
        for (const auto& prem : q.premises)
            if (eval_idx(prem.lhs, tab, env) != eval_idx(prem.rhs, tab, env)) return true;
        return eval_idx(q.conclusion.lhs, tab, env) == eval_idx(q.conclusion.rhs, tab, env);
    };
    if (forall_assignments(tab.n, assign, pred)) return {true, std::nullopt};
    return {false, to_env(a, vars, assign)};
}

bool pp_check(const AlgebraPtr& a, const PPFormula& f, const Env& args, long cap) {
    require_finite(a, cap);
    const Tables& tab = a->tables();
    std::map<std::string, long> env;
    for (const auto& v : f.free()) {
        auto it = args.find(v);
        if (it == args.end()) throw Error(ErrorCode::UnboundVariable, "free variable '" + v + "' is not bound");
        env[v] = a->index_of_elem(it->second);
    }
    std::vector<long> assign(f.bound.size());
    bool found = false;
    auto pred = [&](const std::vector<long>& as) {
        for (size_t i = 0; i < f.bound.size(); ++i) env[f.bound[i]] = as[i];
        for (const auto& eq : f.conjuncts)
            if (eval_idx(eq.lhs, tab, env) != eval_idx(eq.rhs, tab, env)) return true; // keep searching
        found = true;
        return false; // witness found, stop
    };
    forall_assignments(tab.n, assign, pred);
    return found;
}

} // namespace meadowlab
