#ifndef MEADOWLAB_EVAL_HPP
#define MEADOWLAB_EVAL_HPP

#include <map>
#include <optional>

#include "meadowlab/algebra.hpp"
#include "meadowlab/term.hpp"

namespace meadowlab {

using Env = std::map<std::string, Elem>;

/// Structural evaluation. Root uses the weak root, Star the weak inverse,
/// Numeral(k) is k copies of 1 summed.
Elem eval(const TermPtr& t, const Algebra& a, const Env& env);

/// Index-domain evaluation against precomputed operation tables.
long eval_idx(const TermPtr& t, const Tables& tab, const std::map<std::string, long>& env);

struct SatResult {
    bool holds;
    /// First falsifying assignment in lexicographic enumeration order
    /// (variables sorted by name, element indices counting up).
    std::optional<Env> counterexample;
};

SatResult satisfies(const AlgebraPtr& a, const Equation& eq, long cap = kDefaultCap * kDefaultCap);
SatResult satisfies(const AlgebraPtr& a, const Quasiequation& q, long cap = kDefaultCap * kDefaultCap);

/// Exhaustive witness search over the bound variables; args bind the free
/// variables of the formula.
bool pp_check(const AlgebraPtr& a, const PPFormula& f, const Env& args, long cap = kDefaultCap * kDefaultCap);

} // namespace meadowlab

#endif
