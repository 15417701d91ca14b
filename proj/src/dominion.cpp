#include "meadowlab/dominion.hpp"

#include <algorithm>
#include <numeric>

namespace meadowlab {

bool DominionResult::is_member(long b_idx) const {
    return std::binary_search(members.begin(), members.end(), b_idx);
}

namespace {

void require_finite_b(const AlgebraPtr& b, long cap) {
    if (b->size() == 0) throw Error(ErrorCode::InfiniteCarrier, "dominion computation requires a finite carrier");
    if (b->size() > cap)
        throw Error(ErrorCode::CapExceeded,
                    "carrier " + std::to_string(b->size()) + " exceeds cap " + std::to_string(cap));
}

/// Single-field codomains that suffice for separating certificates: for each
/// same-characteristic ordered pair of components (F_i, F_j) of B, the field
/// GF(p, lcm(n_i, n_j)) admits embeddings of both factors, and any pair of
/// homomorphisms out of B/I x B/J into a single field composes with the pair
/// projection to a pair of homomorphisms out of B.
std::vector<FieldRef> candidate_fields(const AlgebraPtr& b, long bound) {
    auto comps = components_copy(b);
    std::vector<FieldRef> out;
    auto push = [&](int p, int n) {
        FieldRef f = make_field(p, n);
        for (const auto& g : out)
            if (*g == *f) return;
        out.push_back(f);
    };
    for (const auto& fi : comps)
        for (const auto& fj : comps)
            if (fi->p == fj->p) push(fi->p, std::lcm(fi->n, fj->n));
    // extra small fields of matching characteristic, within the bound
    for (const auto& fi : comps) {
        long sz = fi->p;
        for (int k = 1; sz <= bound; ++k, sz *= fi->p) push(fi->p, k);
    }
    std::sort(out.begin(), out.end(), [](const FieldRef& a, const FieldRef& b) { return a->size < b->size; });
    return out;
}

/// Separating hom pairs for every index in outs, searched over single-field
/// codomains. Pairs must agree on the carrier of a and differ at the element.
std::map<long, NonMemberCert> separate_all(const SubalgebraAlg& a, const AlgebraPtr& b, const std::vector<long>& outs,
                                           long bound) {
    std::map<long, NonMemberCert> certs;
    if (outs.empty()) return certs;
    for (const auto& f : candidate_fields(b, bound)) {
        AlgebraPtr c = make_icf_field(f);
        auto homs = enumerate_homs(b, c);
        std::vector<std::vector<long>> maps;
        maps.reserve(homs.size());
        for (const auto& h : homs) maps.push_back(hom_index_map(h));
        for (size_t gi = 0; gi < homs.size(); ++gi) {
            for (size_t hi = gi + 1; hi < homs.size(); ++hi) {
                bool agree = true;
                for (long aidx : a.carrier())
                    if (maps[gi][aidx] != maps[hi][aidx]) {
                        agree = false;
                        break;
                    }
                if (!agree) continue;
                for (long e : outs)
                    if (!certs.count(e) && maps[gi][e] != maps[hi][e])
                        certs.emplace(e, NonMemberCert{e, homs[gi], homs[hi]});
            }
        }
        if (certs.size() == outs.size()) return certs;
    }
    throw Error(ErrorCode::Internal, "no separating homomorphism pair found for a dominion non-member");
}

} // namespace

DominionResult dominion_sg(const std::vector<Elem>& a_gens, const AlgebraPtr& b, long cap) {
    auto ideals = prime_ideals(b); // rejects non-product handles
    require_finite_b(b, cap);
    auto a = sg_closure(b, a_gens, b->size());

    DominionResult r;
    r.b = b;
    r.a = a;
    r.method = "sg_formula";

    // The membership formula asks, for each ordered pair of prime ideals
    // (I, J), whether <b+I, b+J> is generated by the pair images of A inside
    // icf_I(B) x icf_J(B), where icf_I(B) is the ICF expansion of the
    // algebraic closure of frac(B/I). That carrier is infinite. For finite B
    // the quotient B/I is already a finite field, so frac(B/I) = B/I and its
    // ICF expansion (B/I)^+ contains every generator a+I and is closed under
    // the whole signature inside icf_I(B). Subalgebra generation applies
    // signature operations only, so the closure computed in the finite
    // (B/I)^+ coincides with the closure in icf_I(B). Everything below works
    // in the finite component fields for that reason.
    const auto comps = components_copy(b);
    const int m = static_cast<int>(comps.size());
    struct PairClosure {
        int i, j;
        AlgebraPtr prod;
        std::shared_ptr<const SubalgebraAlg> sg;
        Quotient qi, qj;
    };
    std::vector<PairClosure> pairs;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Quotient qi = quotient(b, ideals[i]);
            Quotient qj = quotient(b, ideals[j]);
            AlgebraPtr prod = make_product({comps[i], comps[j]}, b->signature_primes());
            std::vector<Elem> pair_gens;
            pair_gens.reserve(a->carrier().size());
            for (long aidx : a->carrier()) {
                Elem ae = b->element(aidx);
                pair_gens.push_back(Tuple{{qi.apply(*b, ae), qj.apply(*b, ae)}});
            }
            pairs.push_back({i, j, prod, sg_closure(prod, pair_gens, prod->size()), qi, qj});
        }
    }

    std::vector<long> outs;
    for (long e = 0; e < b->size(); ++e) {
        Elem be = b->element(e);
        MemberCert cert;
        cert.elem = e;
        bool in = true;
        for (const auto& pc : pairs) {
            Elem pe = Tuple{{pc.qi.apply(*b, be), pc.qj.apply(*b, be)}};
            long pidx = pc.prod->index_of_elem(pe);
            if (!pc.sg->contains(pidx)) {
                in = false;
                break;
            }
            cert.pair_witnesses[{pc.i, pc.j}] = pc.sg->witness(pidx);
        }
        if (in) {
            r.members.push_back(e);
            r.member_certs.push_back(std::move(cert));
        } else {
            outs.push_back(e);
        }
    }
    auto sep = separate_all(*a, b, outs, cap);
    for (long e : outs) r.nonmember_certs.push_back(sep.at(e));
    return r;
}

DominionResult dominion_field_case(const std::vector<Elem>& a_gens, const AlgebraPtr& b, long cap) {
    if (b->kind() != Algebra::Kind::IcfField)
        throw Error(ErrorCode::NotAField, "the field-case dominion requires a single field");
    require_finite_b(b, cap);
    auto a = sg_closure(b, a_gens, b->size());

    // B intersect Sg(A), with Sg taken in B^+ standing in for acl(B)^+: the
    // signature-generated closure never leaves the finite field B, and B^+
    // is signature-closed inside the ICF expansion of the closure, so the
    // two closures agree on elements of B.
    DominionResult r;
    r.b = b;
    r.a = a;
    r.method = "field_case";
    std::vector<long> outs;
    for (long e = 0; e < b->size(); ++e) {
        if (a->contains(e)) {
            r.members.push_back(e);
            MemberCert cert;
            cert.elem = e;
            cert.pair_witnesses[{0, 0}] = a->witness(e);
            r.member_certs.push_back(std::move(cert));
        } else {
            outs.push_back(e);
        }
    }
    auto sep = separate_all(*a, b, outs, cap);
    for (long e : outs) r.nonmember_certs.push_back(sep.at(e));
    return r;
}

DominionResult dominion_oracle(const std::vector<Elem>& a_gens, const AlgebraPtr& b, long codomain_bound,
                               bool galois_shortcut, long cap) {
    require_finite_b(b, cap);
    auto a = sg_closure(b, a_gens, b->size());

    DominionResult r;
    r.b = b;
    r.a = a;
    r.method = "oracle";

    std::vector<AlgebraPtr> codomains;
    if (galois_shortcut && b->kind() == Algebra::Kind::IcfField) {
        // every embedding of GF(p^n) into its algebraic closure lands in
        // GF(p^n) itself up to a Frobenius twist, so B is the only codomain
        // that matters
        codomains.push_back(b);
        r.codomain_class = "fields";
    } else {
        r.codomain_class = "products-of-fields";
        std::set<int> chars;
        for (const auto& f : components_copy(b)) chars.insert(f->p);
        std::vector<FieldRef> fields;
        for (int p : chars) {
            long sz = p;
            for (int k = 1; sz <= codomain_bound; ++k, sz *= p) fields.push_back(make_field(p, k));
        }
        std::sort(fields.begin(), fields.end(),
                  [](const FieldRef& x, const FieldRef& y) { return x->size < y->size; });
        for (const auto& f : fields) codomains.push_back(make_icf_field(f, b->signature_primes()));
        for (size_t i = 0; i < fields.size(); ++i)
            for (size_t j = i; j < fields.size(); ++j)
                if (fields[i]->size * fields[j]->size <= codomain_bound)
                    codomains.push_back(make_product({fields[i], fields[j]}, b->signature_primes()));
    }

    std::vector<char> in(b->size(), 1);
    std::map<long, NonMemberCert> certs;
    for (const auto& c : codomains) {
        auto homs = enumerate_homs(b, c);
        std::vector<std::vector<long>> maps;
        maps.reserve(homs.size());
        for (const auto& h : homs) maps.push_back(hom_index_map(h));
        for (size_t gi = 0; gi < homs.size(); ++gi) {
            for (size_t hi = gi + 1; hi < homs.size(); ++hi) {
                bool agree = true;
                for (long aidx : a->carrier())
                    if (maps[gi][aidx] != maps[hi][aidx]) {
                        agree = false;
                        break;
                    }
                if (!agree) continue;
                for (long e = 0; e < b->size(); ++e)
                    if (in[e] && maps[gi][e] != maps[hi][e]) {
                        in[e] = 0;
                        certs.emplace(e, NonMemberCert{e, homs[gi], homs[hi]});
                    }
            }
        }
    }
    for (long e = 0; e < b->size(); ++e) {
        if (in[e]) {
            r.members.push_back(e);
            if (a->contains(e)) {
                MemberCert cert;
                cert.elem = e;
                cert.pair_witnesses[{0, 0}] = a->witness(e);
                r.member_certs.push_back(std::move(cert));
            }
        } else {
            r.nonmember_certs.push_back(certs.at(e));
        }
    }
    return r;
}

DominionResult dominion_icm(const std::vector<Elem>& a_carrier, const AlgebraPtr& b, long cap) {
    if (b->kind() != Algebra::Kind::IcfField)
        throw Error(ErrorCode::NotAField, "trivial dominions are asserted on single ICF handles");
    require_finite_b(b, cap);

    std::vector<long> given;
    for (const auto& e : a_carrier) given.push_back(b->index_of_elem(e));
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    auto a = sg_closure(b, a_carrier, b->size());
    if (a->carrier() != given)
        throw Error(ErrorCode::NotICFSubalgebra, "the given set is not closed under the full signature");

    DominionResult r;
    r.b = b;
    r.a = a;
    r.method = "icm";
    std::vector<long> outs;
    for (long e = 0; e < b->size(); ++e) {
        if (a->contains(e)) {
            r.members.push_back(e);
            MemberCert cert;
            cert.elem = e;
            cert.pair_witnesses[{0, 0}] = a->witness(e);
            r.member_certs.push_back(std::move(cert));
        } else {
            outs.push_back(e);
        }
    }

    // separating pairs live among the Frobenius twists of B: A is closed, so
    // it is the fixed field of some twist, which moves every outside element
    auto homs = enumerate_homs(b, b);
    std::vector<std::vector<long>> maps;
    for (const auto& h : homs) maps.push_back(hom_index_map(h));
    for (long e : outs) {
        bool found = false;
        for (size_t gi = 0; gi < homs.size() && !found; ++gi) {
            for (size_t hi = gi + 1; hi < homs.size() && !found; ++hi) {
                bool agree = true;
                for (long aidx : a->carrier())
                    if (maps[gi][aidx] != maps[hi][aidx]) {
                        agree = false;
                        break;
                    }
                if (agree && maps[gi][e] != maps[hi][e]) {
                    r.nonmember_certs.push_back(NonMemberCert{e, homs[gi], homs[hi]});
                    found = true;
                }
            }
        }
        if (!found) throw Error(ErrorCode::Internal, "no Frobenius pair separates a dominion non-member");
    }
    return r;
}

std::optional<NonMemberCert> find_separating_pair(const SubalgebraAlg& a, const AlgebraPtr& b, long b_idx,
                                                  long bound) {
    auto certs = separate_all(a, b, {b_idx}, bound);
    auto it = certs.find(b_idx);
    if (it == certs.end()) return std::nullopt;
    return it->second;
}

} // namespace meadowlab
