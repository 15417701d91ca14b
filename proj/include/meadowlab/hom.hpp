#ifndef MEADOWLAB_HOM_HPP
#define MEADOWLAB_HOM_HPP

#include "meadowlab/algebra.hpp"

namespace meadowlab {

/// A unital ring homomorphism between finite products of finite fields:
/// component j of the image reads source component tau[j] through the field
/// embedding embs[j]. By construction it preserves +, *, -, 0, 1, and hence
/// also star and every r_p (ring homomorphisms between products of ICF
/// fields automatically commute with the expansion operations).
struct Hom {
    AlgebraPtr src;
    AlgebraPtr dst;
    std::vector<int> tau;
    std::vector<FieldEmbedding> embs;
};

/// Builds a Hom and, when verify is set and the source carrier is within
/// cap, exhaustively checks signature preservation including star and r_p.
Hom make_hom(AlgebraPtr src, AlgebraPtr dst, std::vector<int> tau, std::vector<FieldEmbedding> embs,
             bool verify = true, long cap = kDefaultCap);

Hom identity_hom(const AlgebraPtr& a);

Elem apply_hom(const Hom& h, const Elem& e);

/// h as an index map: result[i] = index in dst of the image of src element i.
std::vector<long> hom_index_map(const Hom& h);

/// Exhaustive injectivity test.
bool is_embedding(const Hom& h);

/// then ∘ first.
Hom compose_homs(const Hom& first, const Hom& then);

bool homs_equal(const Hom& a, const Hom& b);

/// All unital ring homomorphisms B -> C between finite products of finite
/// fields, in a deterministic order.
std::vector<Hom> enumerate_homs(const AlgebraPtr& b, const AlgebraPtr& c);

} // namespace meadowlab

#endif
