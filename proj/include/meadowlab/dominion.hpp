#ifndef MEADOWLAB_DOMINION_HPP
#define MEADOWLAB_DOMINION_HPP

#include "meadowlab/hom.hpp"

namespace meadowlab {

/// Membership certificate: for each ordered pair (I_i, I_j) of prime ideals
/// of B, a term over g1..gk (the enumeration of A) whose evaluation at the
/// pair images of A equals the pair image of the member.
struct MemberCert {
    long elem; // index in B
    std::map<std::pair<int, int>, TermPtr> pair_witnesses;
};

/// Non-membership certificate: a pair of homomorphisms out of B that agree
/// on A and differ at the element.
struct NonMemberCert {
    long elem; // index in B
    Hom g;
    Hom h;
};

struct DominionResult {
    AlgebraPtr b;
    std::shared_ptr<const SubalgebraAlg> a; // the subalgebra A <= B
    std::string method;                     // sg_formula | field_case | oracle | icm
    std::string codomain_class;             // oracle only: fields | products-of-fields
    std::vector<long> members;              // sorted B element indices
    std::vector<MemberCert> member_certs;
    std::vector<NonMemberCert> nonmember_certs;

    bool is_member(long b_idx) const;
};

/// Dominion via the prime-ideal pair subalgebra-generation formula:
/// b is in the dominion iff for every ordered pair (I, J) of prime ideals of
/// B (I = J allowed), <b+I, b+J> lies in the subalgebra of B/I x B/J
/// generated by {<a+I, a+J> : a in A}.
///
/// The abstract formula takes the generated subalgebra inside
/// icf_I(B) x icf_J(B), whose factors are infinite algebraic closures. For
/// finite B the quotient B/I is a finite field, frac(B/I) = B/I, and
/// (B/I)^+ is itself an ICF that contains every generator a+I and is closed
/// under the whole signature inside icf_I(B). Subalgebra generation only
/// applies signature operations, so the closure computed in (B/I)^+ equals
/// the closure computed in icf_I(B). That finite replacement is what this
/// implementation computes.
DominionResult dominion_sg(const std::vector<Elem>& a_gens, const AlgebraPtr& b, long cap = kDefaultCap);

/// Single-field specialization: d_F(A, B) = B intersect Sg^{acl(B)+}(A),
/// computed inside B^+ (same finite replacement as above).
DominionResult dominion_field_case(const std::vector<Elem>& a_gens, const AlgebraPtr& b, long cap = kDefaultCap);

/// Independent oracle straight from the definition: enumerate codomains and
/// all homomorphism pairs g, h: B -> C with g|A = h|A, and intersect their
/// equalizers. For a single-field B of characteristic p the Galois shortcut
/// restricts C to B itself (all embeddings of B into its algebraic closure
/// factor through GF(p^deg B) up to a Frobenius twist); full enumeration
/// over products of fields with carrier <= codomain_bound is kept as a slow
/// cross-check mode.
DominionResult dominion_oracle(const std::vector<Elem>& a_gens, const AlgebraPtr& b, long codomain_bound = kDefaultCap,
                               bool galois_shortcut = true, long cap = kDefaultCap);

/// Dominions in ICM are trivial: for a signature-closed A <= B with B a
/// single ICF handle, the dominion is A itself, with a separating Frobenius
/// pair attached for every element outside A.
DominionResult dominion_icm(const std::vector<Elem>& a_carrier, const AlgebraPtr& b, long cap = kDefaultCap);

/// Searches a pair of homomorphisms out of B agreeing on the carrier of A
/// and differing at b_idx, over single fields and two-component products of
/// matching characteristic with carrier <= bound.
std::optional<NonMemberCert> find_separating_pair(const SubalgebraAlg& a, const AlgebraPtr& b, long b_idx, long bound);

} // namespace meadowlab

#endif
