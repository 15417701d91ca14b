#ifndef MEADOWLAB_TERM_HPP
#define MEADOWLAB_TERM_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "meadowlab/error.hpp"

namespace meadowlab {

/// AST over the ICM signature {+, *, -, 0, 1, star, root_p} plus variables.
/// Numeral(k) abbreviates k copies of 1 summed (0x = 0, (n+1)x = nx + x);
/// it is sugar, not a signature symbol.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Var, Zero, One, Numeral, Add, Mul, Neg, Star, Root };

    Kind kind;
    std::string name; // Var
    long value = 0;   // Numeral
    int prime = 0;    // Root
    TermPtr left;
    TermPtr right;
};

TermPtr t_var(const std::string& name);
TermPtr t_zero();
TermPtr t_one();
TermPtr t_numeral(long k);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_neg(TermPtr a);
TermPtr t_sub(TermPtr a, TermPtr b); // sugar: a + (-b)
TermPtr t_star(TermPtr a);
TermPtr t_root(int p, TermPtr a);
TermPtr t_pow(TermPtr a, int e); // left-nested product of e copies, e >= 1

bool term_equal(const TermPtr& a, const TermPtr& b);
void free_vars(const TermPtr& t, std::vector<std::string>& out); // sorted, unique

struct Equation {
    TermPtr lhs;
    TermPtr rhs;
};

struct Quasiequation {
    std::vector<Equation> premises;
    Equation conclusion;
};

/// Existentially quantified conjunction of equations.
struct PPFormula {
    std::vector<std::string> bound;
    std::vector<Equation> conjuncts;

    std::vector<std::string> free() const;
};

/// inv(x, y) = (x^2 y ~ x) and (x y^2 ~ y), the pp definition of the weak
/// inverse; free variables named exactly "x", "y".
PPFormula pp_inv();

/// Eroot_p(x, y) = exists z (inv(p, z) and (y^p ~ (1 - z p) x)).
PPFormula pp_exists_root(int p);

/// root_p(x, y) = y^p ~ (1 - p* p) x, as a single equation in variables x, y.
Equation eq_root(int p);

// S-expression grammar:
//   term  := var | "0" | "1" | "(int k)" | "(+ t t)" | "(* t t)" | "(- t)"
//          | "(star t)" | "(root p t)"
//   eq    := "(= t t)"
//   quasi := "(=> (and eq*) eq)"
//   pp    := "(exists (v*) (and eq*))"
using Parsed = std::variant<TermPtr, Equation, Quasiequation, PPFormula>;

TermPtr parse_term(const std::string& text);
Equation parse_equation(const std::string& text);
Quasiequation parse_quasiequation(const std::string& text);
PPFormula parse_pp(const std::string& text);
Parsed parse_any(const std::string& text);

std::string render(const TermPtr& t);
std::string render(const Equation& e);
std::string render(const Quasiequation& q);
std::string render(const PPFormula& f);

} // namespace meadowlab

#endif
