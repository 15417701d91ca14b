#ifndef MEADOWLAB_LAWS_HPP
#define MEADOWLAB_LAWS_HPP

#include <string>
#include <vector>

#include "meadowlab/eval.hpp"

namespace meadowlab {

/// Outcome of one named axiom suite. A failing report always carries a
/// counterexample assignment that re-checks via termlang.
struct LawReport {
    std::string law;
    bool pass = false;
    std::optional<Env> counterexample;
    std::optional<std::string> failed_axiom; // rendered equation or quasiequation
    double elapsed_ms = 0.0;
};

/// The equational base used for "the axioms of commutative rings":
/// commutative monoid laws for + and *, additive inverse, distributivity,
/// and annihilation by zero.
std::vector<Equation> commutative_ring_axioms();
std::vector<Equation> meadow_axioms();                       // ring axioms + x = x^2 x*, x = x**
std::vector<Equation> icm_axioms(const std::set<int>& P);    // meadow axioms + root_p(x, r_p(x)) per p in P

LawReport check_commutative_ring(const AlgebraPtr& a, long cap = kDefaultCap * kDefaultCap);
LawReport check_meadow(const AlgebraPtr& a, long cap = kDefaultCap * kDefaultCap);
LawReport check_icm(const AlgebraPtr& a, const std::set<int>& P, long cap = kDefaultCap * kDefaultCap);
/// Quasiequation x^2 = 0 -> x = 0.
LawReport check_reduced(const AlgebraPtr& a, long cap = kDefaultCap * kDefaultCap);
/// For every a, exhaustive search for b with a = a^2 b.
LawReport check_regular(const AlgebraPtr& a, long cap = kDefaultCap * kDefaultCap);
/// Field handles only: characteristic 0 passes; characteristic p passes iff
/// the Frobenius is surjective.
LawReport check_weakly_rooted(const AlgebraPtr& a, long cap = kDefaultCap);
/// Single ICF handles only: t(a,a,c) = c and t(a,b,c) = a for a != b, with
/// t(x,y,z) = x(x-y)(x-y)* + z(1 - (x-y)(x-y)*).
LawReport check_discriminator(const AlgebraPtr& a, long cap = kDefaultCap);

TermPtr discriminator_term();

} // namespace meadowlab

#endif
