#include "meadowlab/laws.hpp"

#include <chrono>

namespace meadowlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

LawReport run_equations(const std::string& law, const AlgebraPtr& a, const std::vector<Equation>& eqs, long cap) {
    auto start = Clock::now();
    LawReport r;
    r.law = law;
    r.pass = true;
    for (const auto& eq : eqs) {
        SatResult sr = satisfies(a, eq, cap);
        if (!sr.holds) {
            r.pass = false;
            r.counterexample = sr.counterexample;
            r.failed_axiom = render(eq);
            break;
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

} // namespace

std::vector<Equation> commutative_ring_axioms() {
    TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");
    return {
        {t_add(x, y), t_add(y, x)},
        {t_add(t_add(x, y), z), t_add(x, t_add(y, z))},
        {t_add(x, t_zero()), x},
        {t_add(x, t_neg(x)), t_zero()},
        {t_mul(x, y), t_mul(y, x)},
        {t_mul(t_mul(x, y), z), t_mul(x, t_mul(y, z))},
        {t_mul(x, t_one()), x},
        {t_mul(x, t_add(y, z)), t_add(t_mul(x, y), t_mul(x, z))},
        {t_mul(t_add(x, y), z), t_add(t_mul(x, z), t_mul(y, z))},
        {t_mul(x, t_zero()), t_zero()},
    };
}

std::vector<Equation> meadow_axioms() {
    auto eqs = commutative_ring_axioms();
    TermPtr x = t_var("x");
    eqs.push_back({x, t_mul(t_mul(x, x), t_star(x))});
    eqs.push_back({x, t_star(t_star(x))});
    return eqs;
}

std::vector<Equation> icm_axioms(const std::set<int>& P) {
    auto eqs = meadow_axioms();
    for (int p : P) {
        // (r_p(x))^p = (1 - p* p) x, with y instantiated to r_p(x)
        TermPtr x = t_var("x");
        TermPtr pn = t_numeral(p);
        eqs.push_back({t_pow(t_root(p, x), p), t_mul(t_sub(t_one(), t_mul(t_star(pn), pn)), x)});
    }
    return eqs;
}

LawReport check_commutative_ring(const AlgebraPtr& a, long cap) {
    return run_equations("ring", a, commutative_ring_axioms(), cap);
}

LawReport check_meadow(const AlgebraPtr& a, long cap) { return run_equations("meadow", a, meadow_axioms(), cap); }

LawReport check_icm(const AlgebraPtr& a, const std::set<int>& P, long cap) {
    for (int p : P)
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "signature prime " + std::to_string(p) + " is not prime");
    return run_equations("icm", a, icm_axioms(P), cap);
}

LawReport check_reduced(const AlgebraPtr& a, long cap) {
    auto start = Clock::now();
    TermPtr x = t_var("x");
    Quasiequation q{{{t_mul(x, x), t_zero()}}, {x, t_zero()}};
    SatResult sr = satisfies(a, q, cap);
    LawReport r;
    r.law = "reduced";
    r.pass = sr.holds;
    r.counterexample = sr.counterexample;
    if (!sr.holds) r.failed_axiom = render(q);
    r.elapsed_ms = ms_since(start);
    return r;
}

LawReport check_regular(const AlgebraPtr& a, long cap) {
    auto start = Clock::now();
    LawReport r;
    r.law = "regular";
    r.pass = true;
    if (a->size() == 0) throw Error(ErrorCode::InfiniteCarrier, "regularity check requires a finite carrier");
    if (a->size() > cap) throw Error(ErrorCode::CapExceeded, "carrier exceeds cap");
    const Tables& t = a->tables();
    for (long i = 0; i < t.n && r.pass; ++i) {
        bool found = false;
        long sq = t.mul_i(i, i);
        for (long b = 0; b < t.n; ++b) {
            if (t.mul_i(sq, b) == i) {
                found = true;
                break;
            }
        }
        if (!found) {
            r.pass = false;
            r.counterexample = Env{{"x", a->element(i)}};
            r.failed_axiom = "(exists (y) (and (= x (* (* x x) y))))";
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

LawReport check_weakly_rooted(const AlgebraPtr& a, long cap) {
    auto start = Clock::now();
    LawReport r;
    r.law = "weakly-rooted";
    if (a->kind() == Algebra::Kind::Rationals) {
        r.pass = true; // characteristic 0 clause
        r.elapsed_ms = ms_since(start);
        return r;
    }
    if (a->kind() != Algebra::Kind::IcfField)
        throw Error(ErrorCode::NotAField, "weak rootedness is defined for fields");
    if (a->size() > cap) throw Error(ErrorCode::CapExceeded, "carrier exceeds cap");
    const auto& f = static_cast<const IcfFieldAlg&>(*a).field();
    // characteristic p: every element needs a p-th root, i.e. Frobenius onto
    std::vector<bool> hit(f->size, false);
    for (long i = 0; i < f->size; ++i) hit[index_of(ff_frobenius(element_at(f, i)))] = true;
    r.pass = true;
    for (long i = 0; i < f->size; ++i) {
        if (!hit[i]) {
            r.pass = false;
            r.counterexample = Env{{"x", element_at(f, i)}};
            break;
        }
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

TermPtr discriminator_term() {
    TermPtr x = t_var("x"), y = t_var("y"), z = t_var("z");
    TermPtr d = t_sub(x, y);
    TermPtr e = t_mul(d, t_star(d));
    return t_add(t_mul(x, e), t_mul(z, t_sub(t_one(), e)));
}

LawReport check_discriminator(const AlgebraPtr& a, long cap) {
    auto start = Clock::now();
    if (a->kind() == Algebra::Kind::Product && components_copy(a).size() != 1)
        throw Error(ErrorCode::NotAField,
                    "the discriminator behavior is asserted on single ICF fields, not on products");
    if (a->kind() != Algebra::Kind::IcfField &&
        !(a->kind() == Algebra::Kind::Product && components_copy(a).size() == 1))
        throw Error(ErrorCode::NotAField, "the discriminator check requires an ICF handle");
    if (a->size() > cap) throw Error(ErrorCode::CapExceeded, "carrier exceeds cap");

    LawReport r;
    r.law = "discriminator";
    r.pass = true;
    TermPtr t = discriminator_term();
    const Tables& tab = a->tables();
    std::map<std::string, long> env;
    for (long x = 0; x < tab.n && r.pass; ++x)
        for (long y = 0; y < tab.n && r.pass; ++y)
            for (long z = 0; z < tab.n; ++z) {
                env["x"] = x;
                env["y"] = y;
                env["z"] = z;
                long got = eval_idx(t, tab, env);
                long want = (x == y) ? z : x;
                if (got != want) {
                    r.pass = false;
                    r.counterexample =
                        Env{{"x", a->element(x)}, {"y", a->element(y)}, {"z", a->element(z)}};
                    r.failed_axiom = render(t);
                    break;
                }
            }
    r.elapsed_ms = ms_since(start);
    return r;
}

} // namespace meadowlab
