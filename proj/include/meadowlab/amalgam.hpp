#ifndef MEADOWLAB_AMALGAM_HPP
#define MEADOWLAB_AMALGAM_HPP

#include "meadowlab/hom.hpp"

namespace meadowlab {

/// A span of embeddings h1: A -> B, h2: A -> C between finite products of
/// finite fields.
struct Span {
    AlgebraPtr a, b, c;
    Hom h1;
    Hom h2;
};

/// A completion of a span: embeddings g1: B -> D, g2: C -> D with
/// g1 . h1 = g2 . h2 on all of A.
struct Amalgam {
    AlgebraPtr d;
    Hom g1;
    Hom g2;
};

/// Constructive amalgamation. Each component of D is the compositum
/// GF(p^lcm(b,c)) of a pullback pair of components of B and C lying over the
/// same component of A; the two embeddings into it are reconciled over the
/// image of the base field by a Frobenius twist search (smallest twist wins,
/// so the output is deterministic). The construction is re-verified
/// exhaustively before returning.
///
/// Errors: NotEmbedding when h1 or h2 is not injective; NoCompatibleTwist
/// when no twist reconciles a pair (cannot happen for a valid span).
Amalgam amalgamate(const Span& s, long cap = kDefaultCap * kDefaultCap);

/// Exhaustive re-check: g1, g2 injective, preserve the whole signature
/// including star and every r_p, and close the square on all of A.
bool verify_amalgam(const Span& s, const Amalgam& am);

} // namespace meadowlab

#endif
