#ifndef MEADOWLAB_GF_HPP
#define MEADOWLAB_GF_HPP

#include <memory>
#include <vector>

#include "meadowlab/error.hpp"

namespace meadowlab {

/// Default carrier-size cap for exhaustive routines. Routines that would
/// enumerate a larger carrier refuse with CapExceeded instead of running long.
inline constexpr long kDefaultCap = 64;

bool is_prime(long n);

/// A finite field GF(p^n) presented by a monic irreducible modulus polynomial
/// over GF(p). The modulus is the lexicographically smallest monic irreducible
/// of degree n, coefficients compared low-degree-first, so construction is
/// deterministic and reproducible bit-for-bit.
struct FieldSpec {
    int p;                    // prime characteristic
    int n;                    // extension degree
    std::vector<int> modulus; // length n+1, constant term first, monic
    long size;                // p^n

    bool operator==(const FieldSpec& o) const { return p == o.p && n == o.n; }
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Deterministic, idempotent field construction. Repeated calls with the same
/// (p, n) return the same shared spec.
FieldRef make_field(int p, int n);

/// An element of GF(p^n) in the polynomial residue representation:
/// coeffs[i] is the coefficient of x^i, each in [0, p), length exactly n.
struct FFElement {
    FieldRef spec;
    std::vector<int> coeffs;

    bool is_zero() const;
    bool operator==(const FFElement& o) const { return coeffs == o.coeffs && *spec == *o.spec; }
    bool operator!=(const FFElement& o) const { return !(*this == o); }
};

/// Elements are ordered by coefficient-vector lexicographic order
/// (coeffs[0] most significant); index_of/element_at realize that order.
long index_of(const FFElement& a);
FFElement element_at(const FieldRef& f, long idx);
FFElement ff_zero(const FieldRef& f);
FFElement ff_one(const FieldRef& f);
FFElement ff_scalar(const FieldRef& f, long k); // k * 1

FFElement ff_add(const FFElement& a, const FFElement& b);
FFElement ff_sub(const FFElement& a, const FFElement& b);
FFElement ff_mul(const FFElement& a, const FFElement& b);
FFElement ff_neg(const FFElement& a);
FFElement ff_pow(const FFElement& a, long e);

/// a^{-1} when a != 0, else 0. Satisfies a * a * weak_inverse(a) = a.
FFElement ff_weak_inverse(const FFElement& a);

/// a^p, an automorphism of the field.
FFElement ff_frobenius(const FFElement& a);

/// The unique q-th root when the field has characteristic q, computed as
/// a^(p^(n-1)) (Frobenius is an automorphism, so its inverse is its (n-1)-th
/// power); otherwise the constant 0.
FFElement ff_weak_root(int q, const FFElement& a);

/// Exact rational, stored in lowest terms with positive denominator.
/// ICM-signature carrier for the characteristic-0 case: star is the weak
/// inverse and every r_p is the zero map.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    bool is_zero() const { return num == 0; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_neg(const Rational& a);
Rational rat_weak_inverse(const Rational& a);

/// A polynomial with coefficients in a finite field, constant term first,
/// no trailing zeros (the zero polynomial has an empty coefficient list).
struct Polynomial {
    FieldRef base;
    std::vector<FFElement> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const Polynomial& o) const;
};

// Polynomials over the prime field GF(p), as plain residue vectors with
// constant term first and no trailing zeros. Used by field construction.
namespace polyp {
std::vector<int> trim(std::vector<int> c);
std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, int p);
std::vector<int> mod(std::vector<int> a, const std::vector<int>& m, int p);
bool is_irreducible(const std::vector<int>& f, int p);
} // namespace polyp

/// The monic minimal polynomial of a over the subfield GF(p^d), d | n.
/// Computed as the product over the Frobenius^d orbit of a; coefficients are
/// translated into the canonical GF(p^d) via its first embedding into spec.
Polynomial minimal_polynomial(const FFElement& a, int d);

bool poly_is_irreducible(const Polynomial& f);

/// A field embedding GF(p^a) -> GF(p^b), represented by the image of the
/// residue of x (a root of src->modulus in dst).
struct FieldEmbedding {
    FieldRef src;
    FieldRef dst;
    FFElement image; // image of the residue class of x

    FFElement apply(const FFElement& a) const;
    bool operator==(const FieldEmbedding& o) const;
};

/// All unital ring homomorphisms src -> dst: exactly src->n of them when
/// src->n divides dst->n, none otherwise. Sorted by image element index.
std::vector<FieldEmbedding> enumerate_embeddings(const FieldRef& src, const FieldRef& dst);

FieldEmbedding compose(const FieldEmbedding& first, const FieldEmbedding& then);

} // namespace meadowlab

#endif
