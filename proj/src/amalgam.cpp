#include "meadowlab/amalgam.hpp"

#include <algorithm>
#include <numeric>

namespace meadowlab {

namespace {

/// Residue class of x in f, the canonical primitive element.
FFElement residue_x(const FieldRef& f) {
    std::vector<int> cc(f->n, 0);
    if (f->n > 1)
        cc[1] = 1;
    else
        cc[0] = (f->p - f->modulus[0]) % f->p;
    return FFElement{f, cc};
}

/// First embedding in enumeration order, except that the identity embedding
/// is preferred when the endpoints coincide; keeps identity spans mapping to
/// identity amalgams.
FieldEmbedding pick_embedding(const FieldRef& src, const FieldRef& dst) {
    auto embs = enumerate_embeddings(src, dst);
    if (embs.empty()) throw Error(ErrorCode::Internal, "no embedding between compositum components");
    if (*src == *dst) {
        FFElement x = residue_x(dst);
        for (const auto& e : embs)
            if (e.image == x) return e;
    }
    return embs.front();
}

bool preserves_signature(const Hom& h) {
    const long n = h.src->size();
    if (!elem_eq(apply_hom(h, h.src->zero()), h.dst->zero()) || !elem_eq(apply_hom(h, h.src->one()), h.dst->one()))
        return false;
    std::set<int> primes = h.src->signature_primes();
    primes.insert(h.dst->signature_primes().begin(), h.dst->signature_primes().end());
    for (long i = 0; i < n; ++i) {
        Elem a = h.src->element(i);
        Elem ha = apply_hom(h, a);
        if (!elem_eq(apply_hom(h, h.src->neg(a)), h.dst->neg(ha))) return false;
        if (!elem_eq(apply_hom(h, h.src->star(a)), h.dst->star(ha))) return false;
        for (int p : primes)
            if (!elem_eq(apply_hom(h, h.src->root(p, a)), h.dst->root(p, ha))) return false;
        for (long j = 0; j < n; ++j) {
            Elem b = h.src->element(j);
            Elem hb = apply_hom(h, b);
            if (!elem_eq(apply_hom(h, h.src->add(a, b)), h.dst->add(ha, hb))) return false;
            if (!elem_eq(apply_hom(h, h.src->mul(a, b)), h.dst->mul(ha, hb))) return false;
        }
    }
    return true;
}

} // namespace

Amalgam amalgamate(const Span& s, long cap) {
    if (!is_embedding(s.h1) || !is_embedding(s.h2))
        throw Error(ErrorCode::NotEmbedding, "span legs must be embeddings");
    if (s.b->size() > cap || s.c->size() > cap)
        throw Error(ErrorCode::CapExceeded, "span carrier exceeds cap");

    const auto bc = components_copy(s.b);
    const auto cc = components_copy(s.c);
    const auto ac = components_copy(s.a);

    // the induced Spec maps send the j-th projection kernel of B to the
    // tau[j]-th projection kernel of A; the pullback pairs are the component
    // pairs lying over a common component of A
    std::vector<FieldRef> dcomps;
    std::vector<int> tau1, tau2;
    std::vector<FieldEmbedding> embs1, embs2;
    for (size_t j = 0; j < bc.size(); ++j) {
        for (size_t k = 0; k < cc.size(); ++k) {
            if (s.h1.tau[j] != s.h2.tau[k]) continue;
            const FieldRef& base = ac[s.h1.tau[j]];
            FieldRef dcomp = make_field(bc[j]->p, std::lcm(bc[j]->n, cc[k]->n));
            FieldEmbedding eb = pick_embedding(bc[j], dcomp);
            FieldEmbedding ec0 = pick_embedding(cc[k], dcomp);

            // reconcile over the image of the base field: twist e_C by
            // Frobenius powers until both paths from the base agree
            bool found = false;
            FieldEmbedding ec = ec0;
            for (int t = 0; t < dcomp->n && !found; ++t) {
                bool agree = true;
                for (long i = 0; i < base->size && agree; ++i) {
                    FFElement a = element_at(base, i);
                    agree = eb.apply(s.h1.embs[j].apply(a)) == ec.apply(s.h2.embs[k].apply(a));
                }
                if (agree)
                    found = true;
                else
                    ec = FieldEmbedding{ec.src, ec.dst, ff_frobenius(ec.image)};
            }
            if (!found)
                throw Error(ErrorCode::NoCompatibleTwist, "no Frobenius twist reconciles a compositum component");

            dcomps.push_back(dcomp);
            tau1.push_back(static_cast<int>(j));
            embs1.push_back(eb);
            tau2.push_back(static_cast<int>(k));
            embs2.push_back(ec);
        }
    }

    std::set<int> primes = s.b->signature_primes();
    primes.insert(s.c->signature_primes().begin(), s.c->signature_primes().end());
    for (const auto& f : dcomps) primes.insert(f->p);
    AlgebraPtr d = make_product(dcomps, primes);

    Amalgam am;
    am.d = d;
    am.g1 = make_hom(s.b, d, std::move(tau1), std::move(embs1), false);
    am.g2 = make_hom(s.c, d, std::move(tau2), std::move(embs2), false);
    if (!verify_amalgam(s, am)) throw Error(ErrorCode::Internal, "constructed amalgam failed verification");
    return am;
}

bool verify_amalgam(const Span& s, const Amalgam& am) {
    if (!is_embedding(am.g1) || !is_embedding(am.g2)) return false;
    if (!preserves_signature(am.g1) || !preserves_signature(am.g2)) return false;
    for (long i = 0; i < s.a->size(); ++i) {
        Elem a = s.a->element(i);
        if (!elem_eq(apply_hom(am.g1, apply_hom(s.h1, a)), apply_hom(am.g2, apply_hom(s.h2, a)))) return false;
    }
    return true;
}

} // namespace meadowlab
