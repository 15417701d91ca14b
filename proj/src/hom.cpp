#include "meadowlab/hom.hpp"

namespace meadowlab {

static void check_componentized(const AlgebraPtr& a) {
    if (a->kind() != Algebra::Kind::IcfField && a->kind() != Algebra::Kind::Product)
        throw Error(ErrorCode::NotProduct, "homomorphisms are defined between products of fields");
}

Elem apply_hom(const Hom& h, const Elem& e) {
    auto src_comps = as_component_vector(*h.src, e);
    std::vector<FFElement> out;
    out.reserve(h.tau.size());
    for (size_t j = 0; j < h.tau.size(); ++j) out.push_back(h.embs[j].apply(src_comps[h.tau[j]]));
    return from_component_vector(*h.dst, out);
}

Hom make_hom(AlgebraPtr src, AlgebraPtr dst, std::vector<int> tau, std::vector<FieldEmbedding> embs, bool verify,
             long cap) {
    check_componentized(src);
    check_componentized(dst);
    const auto scomps = components_copy(src);
    const auto dcomps = components_copy(dst);
    if (tau.size() != dcomps.size() || embs.size() != dcomps.size())
        throw Error(ErrorCode::SpecMismatch, "component map arity mismatch");
    for (size_t j = 0; j < dcomps.size(); ++j) {
        if (tau[j] < 0 || tau[j] >= static_cast<int>(scomps.size()))
            throw Error(ErrorCode::SpecMismatch, "component index out of range");
        if (!(*embs[j].src == *scomps[tau[j]]) || !(*embs[j].dst == *dcomps[j]))
            throw Error(ErrorCode::SpecMismatch, "embedding endpoints do not match components");
    }
    Hom h{std::move(src), std::move(dst), std::move(tau), std::move(embs)};
    if (verify && h.src->size() <= cap) {
        const long n = h.src->size();
        if (!elem_eq(apply_hom(h, h.src->zero()), h.dst->zero()) ||
            !elem_eq(apply_hom(h, h.src->one()), h.dst->one()))
            throw Error(ErrorCode::Internal, "hom does not preserve constants");
        for (long i = 0; i < n; ++i) {
            Elem a = h.src->element(i);
            Elem ha = apply_hom(h, a);
            if (!elem_eq(apply_hom(h, h.src->neg(a)), h.dst->neg(ha)) ||
                !elem_eq(apply_hom(h, h.src->star(a)), h.dst->star(ha)))
                throw Error(ErrorCode::Internal, "hom does not preserve unary operations");
            for (int p : h.src->signature_primes())
                if (!elem_eq(apply_hom(h, h.src->root(p, a)), h.dst->root(p, ha)))
                    throw Error(ErrorCode::Internal, "hom does not preserve weak roots");
            for (long j = 0; j < n; ++j) {
                Elem b = h.src->element(j);
                Elem hb = apply_hom(h, b);
                if (!elem_eq(apply_hom(h, h.src->add(a, b)), h.dst->add(ha, hb)) ||
                    !elem_eq(apply_hom(h, h.src->mul(a, b)), h.dst->mul(ha, hb)))
                    throw Error(ErrorCode::Internal, "hom does not preserve ring operations");
            }
        }
    }
    return h;
}

Hom identity_hom(const AlgebraPtr& a) {
    check_componentized(a);
    const auto comps = components_copy(a);
    std::vector<int> tau(comps.size());
    std::vector<FieldEmbedding> embs;
    for (size_t j = 0; j < comps.size(); ++j) {
        tau[j] = static_cast<int>(j);
        // identity embedding: x maps to the residue of x
        std::vector<int> cc(comps[j]->n, 0);
        if (comps[j]->n > 1) cc[1] = 1; // residue of x
        // in a degree-1 field the residue of x equals -c_0 of the modulus
        if (comps[j]->n == 1) cc[0] = (comps[j]->p - comps[j]->modulus[0]) % comps[j]->p;
        embs.push_back({comps[j], comps[j], FFElement{comps[j], cc}});
    }
    return make_hom(a, a, std::move(tau), std::move(embs), false);
}

std::vector<long> hom_index_map(const Hom& h) {
    const long n = h.src->size();
    std::vector<long> out(n);
    for (long i = 0; i < n; ++i) out[i] = h.dst->index_of_elem(apply_hom(h, h.src->element(i)));
    return out;
}

bool is_embedding(const Hom& h) {
    auto m = hom_index_map(h);
    std::vector<long> sorted = m;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Hom compose_homs(const Hom& first, const Hom& then) {
    const auto mid1 = components_copy(first.dst);
    const auto mid2 = components_copy(then.src);
    if (mid1.size() != mid2.size()) throw Error(ErrorCode::SpecMismatch, "homs not composable");
    for (size_t j = 0; j < mid1.size(); ++j)
        if (!(*mid1[j] == *mid2[j])) throw Error(ErrorCode::SpecMismatch, "homs not composable");
    std::vector<int> tau(then.tau.size());
    std::vector<FieldEmbedding> embs;
    embs.reserve(then.tau.size());
    for (size_t j = 0; j < then.tau.size(); ++j) {
        tau[j] = first.tau[then.tau[j]];
        embs.push_back(compose(first.embs[then.tau[j]], then.embs[j]));
    }
    return make_hom(first.src, then.dst, std::move(tau), std::move(embs), false);
}

bool homs_equal(const Hom& a, const Hom& b) {
    if (a.tau != b.tau) return false;
    for (size_t j = 0; j < a.embs.size(); ++j)
        if (!(a.embs[j] == b.embs[j])) return false;
    return true;
}

std::vector<Hom> enumerate_homs(const AlgebraPtr& b, const AlgebraPtr& c) {
    check_componentized(b);
    check_componentized(c);
    const auto bc = components_copy(b);
    const auto cc = components_copy(c);

    // per destination component: all (source component, embedding) choices
    struct Choice {
        int tau;
        FieldEmbedding emb;
    };
    std::vector<std::vector<Choice>> options(cc.size());
    for (size_t j = 0; j < cc.size(); ++j) {
        for (size_t i = 0; i < bc.size(); ++i) {
            if (bc[i]->p != cc[j]->p) continue;
            for (const auto& e : enumerate_embeddings(bc[i], cc[j]))
                options[j].push_back({static_cast<int>(i), e});
        }
        if (options[j].empty()) return {}; // some component unreachable
    }

    std::vector<Hom> out;
    std::vector<size_t> pick(cc.size(), 0);
    while (true) {
        std::vector<int> tau;
        std::vector<FieldEmbedding> embs;
        for (size_t j = 0; j < cc.size(); ++j) {
            tau.push_back(options[j][pick[j]].tau);
            embs.push_back(options[j][pick[j]].emb);
        }
        out.push_back(make_hom(b, c, std::move(tau), std::move(embs), false));
        // next combination
        size_t j = 0;
        while (j < cc.size()) {
            if (++pick[j] < options[j].size()) break;
            pick[j] = 0;
            ++j;
        }
        if (j == cc.size()) break;
        if (cc.empty()) break;
    }
    return out;
}

} // namespace meadowlab
