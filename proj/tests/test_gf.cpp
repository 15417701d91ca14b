#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "meadowlab/gf.hpp"

using namespace meadowlab;

namespace {

FFElement alpha(const FieldRef& f) {
    std::vector<int> c(f->n, 0);
    c[1] = 1;
    return FFElement{f, c};
}

std::vector<FieldRef> fields_up_to(long bound) {
    std::vector<FieldRef> out;
    for (int p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        long sz = p;
        for (int n = 1; sz <= bound; ++n, sz *= p) out.push_back(make_field(p, n));
    }
    return out;
}

} // namespace

TEST_CASE("field construction is deterministic and validated") {
    FieldRef f2 = make_field(2, 1);
    CHECK(f2->modulus == std::vector<int>{0, 1}); // the monic x

    FieldRef f4 = make_field(2, 2);
    // oracle: of the four monic quadratics over GF(2), only x^2+x+1 has no
    // root, so it is the unique irreducible and the lexicographic minimum
    CHECK(f4->modulus == std::vector<int>{1, 1, 1});
    CHECK(f4->size == 4);

    CHECK_THROWS_AS(make_field(4, 1), Error);
    try {
        make_field(4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    try {
        make_field(2, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadDegree);
    }

    CHECK(make_field(2, 2).get() == f4.get()); // idempotent registry

    // every registered modulus is actually irreducible and minimal: no monic
    // irreducible of the same degree compares lexicographically smaller
    for (const auto& f : {make_field(3, 2), make_field(2, 3), make_field(5, 2)}) {
        CHECK(polyp::is_irreducible(f->modulus, f->p));
        std::vector<int> probe = f->modulus;
        bool smaller_exists = false;
        // decrement through all smaller monic polynomials of equal degree
        std::vector<int> cur(f->n, 0);
        auto lex_less = [&](const std::vector<int>& a, const std::vector<int>& b) {
            for (int i = 0; i <= f->n; ++i) {
                int ai = i < f->n ? a[i] : 1, bi = i < f->n ? b[i] : 1;
                if (ai != bi) return ai < bi;
            }
            return false;
        };
        while (true) {
            std::vector<int> cand = cur;
            cand.push_back(1);
            if (lex_less(cand, f->modulus) && polyp::is_irreducible(cand, f->p)) smaller_exists = true;
            int i = 0;
            while (i < f->n && ++cur[i] == f->p) cur[i++] = 0;
            if (i == f->n) break;
        }
        CHECK_FALSE(smaller_exists);
    }
}

TEST_CASE("ring operations match hand values") {
    FieldRef f5 = make_field(5, 1);
    CHECK(ff_add(ff_scalar(f5, 3), ff_scalar(f5, 4)) == ff_scalar(f5, 2));

    FieldRef f4 = make_field(2, 2);
    FFElement a = alpha(f4);
    CHECK(ff_mul(a, a) == ff_add(a, ff_one(f4))); // x^2 = x + 1 mod x^2+x+1

    Rational r = rat_mul(Rational(2, 3), Rational(3, 2));
    CHECK(r == Rational(1, 1));
}

TEST_CASE("weak inverse") {
    FieldRef f5 = make_field(5, 1);
    // oracle: exhaustive search for the inverse of 2
    FFElement two = ff_scalar(f5, 2);
    FFElement found = ff_zero(f5);
    for (long i = 1; i < 5; ++i)
        if (ff_mul(two, element_at(f5, i)) == ff_one(f5)) found = element_at(f5, i);
    CHECK(ff_weak_inverse(two) == found);
    CHECK(ff_weak_inverse(two) == ff_scalar(f5, 3));

    CHECK(ff_weak_inverse(ff_zero(f5)) == ff_zero(f5));
    CHECK(rat_weak_inverse(Rational(-4, 1)) == Rational(-1, 4));
    CHECK(rat_weak_inverse(Rational(0, 1)) == Rational(0, 1));
}

TEST_CASE("frobenius") {
    FieldRef f4 = make_field(2, 2);
    FFElement a = alpha(f4);
    CHECK(ff_frobenius(a) == ff_add(a, ff_one(f4)));

    FieldRef f5 = make_field(5, 1);
    for (long i = 0; i < 5; ++i) CHECK(ff_frobenius(element_at(f5, i)) == element_at(f5, i));

    FieldRef f9 = make_field(3, 2);
    CHECK(ff_frobenius(ff_zero(f9)) == ff_zero(f9));

    // automorphism property on GF(16)
    FieldRef f16 = make_field(2, 4);
    for (long i = 0; i < 16; ++i) {
        for (long j = 0; j < 16; ++j) {
            FFElement x = element_at(f16, i), y = element_at(f16, j);
            CHECK(ff_frobenius(ff_add(x, y)) == ff_add(ff_frobenius(x), ff_frobenius(y)));
            CHECK(ff_frobenius(ff_mul(x, y)) == ff_mul(ff_frobenius(x), ff_frobenius(y)));
        }
    }
}

TEST_CASE("weak root") {
    FieldRef f4 = make_field(2, 2);
    FFElement a = alpha(f4);
    // oracle: the unique square root of a by exhaustive search
    int roots = 0;
    FFElement found = ff_zero(f4);
    for (long i = 0; i < 4; ++i) {
        FFElement c = element_at(f4, i);
        if (ff_mul(c, c) == a) {
            ++roots;
            found = c;
        }
    }
    CHECK(roots == 1);
    CHECK(ff_weak_root(2, a) == found);
    CHECK(ff_weak_root(2, a) == ff_add(a, ff_one(f4)));

    CHECK(ff_weak_root(3, a) == ff_zero(f4)); // characteristic mismatch clause
    CHECK_THROWS_AS(ff_weak_root(4, a), Error);
}

TEST_CASE("meadow and root identities hold on every field up to 64") {
    for (const auto& f : fields_up_to(64)) {
        for (long i = 0; i < f->size; ++i) {
            FFElement a = element_at(f, i);
            FFElement s = ff_weak_inverse(a);
            CHECK(ff_mul(ff_mul(a, a), s) == a);
            CHECK(ff_weak_inverse(s) == a);
            CHECK(ff_weak_root(f->p, ff_frobenius(a)) == a);
            CHECK(ff_frobenius(ff_weak_root(f->p, a)) == a);
            if (!a.is_zero()) CHECK(ff_mul(a, s) == ff_one(f));
        }
    }
}

TEST_CASE("element order round-trips and is coefficient-lexicographic") {
    FieldRef f9 = make_field(3, 2);
    for (long i = 0; i < 9; ++i) CHECK(index_of(element_at(f9, i)) == i);
    // index 0 is zero, the next indices vary the highest coefficient last
    CHECK(element_at(f9, 0) == ff_zero(f9));
    CHECK(element_at(f9, 3) == ff_one(f9)); // coeffs (1,0)
}

TEST_CASE("minimal polynomials") {
    FieldRef f4 = make_field(2, 2);
    FFElement a = alpha(f4);
    Polynomial m = minimal_polynomial(a, 1);
    CHECK(m.degree() == 2);
    for (const auto& c : m.coeffs) CHECK(c == ff_one(m.base)); // x^2+x+1

    FieldRef f8 = make_field(2, 3);
    Polynomial m1 = minimal_polynomial(ff_one(f8), 1);
    CHECK(m1.degree() == 1);
    CHECK(m1.coeffs[0] == ff_one(m1.base)); // x - 1 = x + 1 over GF(2)

    Polynomial m2 = minimal_polynomial(a, 2);
    CHECK(m2.degree() == 1); // x - a over GF(4)
    CHECK(m2.coeffs[0] == ff_neg(a));

    CHECK_THROWS_AS(minimal_polynomial(a, 3), Error); // 3 does not divide 2

    // oracle: output annihilates its input and is irreducible
    FieldRef f16 = make_field(2, 4);
    for (long i = 0; i < 16; ++i) {
        FFElement b = element_at(f16, i);
        Polynomial mb = minimal_polynomial(b, 1);
        CHECK(poly_is_irreducible(mb));
        CHECK(4 % mb.degree() == 0);
        // evaluate inside GF(16) through the first embedding of the base
        auto emb = enumerate_embeddings(mb.base, f16).front();
        FFElement acc = ff_zero(f16);
        FFElement pw = ff_one(f16);
        for (const auto& c : mb.coeffs) {
            acc = ff_add(acc, ff_mul(emb.apply(c), pw));
            pw = ff_mul(pw, b);
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("embedding enumeration") {
    CHECK(enumerate_embeddings(make_field(2, 1), make_field(2, 3)).size() == 1);
    CHECK(enumerate_embeddings(make_field(2, 2), make_field(2, 4)).size() == 2);
    CHECK(enumerate_embeddings(make_field(2, 2), make_field(2, 3)).empty());
    CHECK_THROWS_AS(enumerate_embeddings(make_field(2, 1), make_field(3, 2)), Error);

    // oracle: count roots of x^2+x+1 in GF(16) directly
    FieldRef f4 = make_field(2, 2), f16 = make_field(2, 4);
    int roots = 0;
    for (long i = 0; i < 16; ++i) {
        FFElement b = element_at(f16, i);
        if (ff_add(ff_add(ff_mul(b, b), b), ff_one(f16)).is_zero()) ++roots;
    }
    CHECK(roots == 2);

    auto embs = enumerate_embeddings(f4, f16);
    for (const auto& e : embs) {
        // ring homomorphism and injectivity, checked exhaustively
        std::vector<long> seen;
        for (long i = 0; i < 4; ++i) {
            FFElement x = element_at(f4, i);
            seen.push_back(index_of(e.apply(x)));
            for (long j = 0; j < 4; ++j) {
                FFElement y = element_at(f4, j);
                CHECK(e.apply(ff_add(x, y)) == ff_add(e.apply(x), e.apply(y)));
                CHECK(e.apply(ff_mul(x, y)) == ff_mul(e.apply(x), e.apply(y)));
            }
        }
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        CHECK(e.apply(ff_one(f4)) == ff_one(f16));
    }
    CHECK(embs.size() == 2);
    CHECK_FALSE(embs[0] == embs[1]);

    // composing with the Frobenius of the target permutes the list
    for (const auto& e : embs) {
        FieldEmbedding twisted{e.src, e.dst, ff_frobenius(ff_frobenius(e.image))};
        bool in_list = false;
        for (const auto& other : embs) in_list = in_list || (twisted == other);
        CHECK(in_list);
    }
}

TEST_CASE("rationals normalize") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(rat_add(Rational(1, 6), Rational(1, 3)) == Rational(1, 2));
    CHECK(rat_sub(Rational(1, 2), Rational(1, 2)).is_zero());
}
