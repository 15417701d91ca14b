#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "meadowlab/hom.hpp"

using namespace meadowlab;

namespace {

/// Oracle: all unital maps preserving +, *, 0, 1, found by raw function
/// enumeration over index tables.
long count_homs_brute_force(const AlgebraPtr& b, const AlgebraPtr& c) {
    const Tables& tb = b->tables();
    const Tables& tc = c->tables();
    std::vector<long> f(tb.n, 0);
    long count = 0;
    while (true) {
        bool ok = f[tb.zero] == tc.zero && f[tb.one] == tc.one;
        for (long i = 0; i < tb.n && ok; ++i)
            for (long j = 0; j < tb.n && ok; ++j)
                ok = f[tb.add_i(i, j)] == tc.add_i(f[i], f[j]) && f[tb.mul_i(i, j)] == tc.mul_i(f[i], f[j]);
        if (ok) ++count;
        long k = 0;
        while (k < tb.n && ++f[k] == tc.n) f[k++] = 0;
        if (k == tb.n) break;
    }
    return count;
}

} // namespace

TEST_CASE("hom counts match hand values") {
    AlgebraPtr f4 = make_icf_field(2, 2);
    AlgebraPtr f8 = make_icf_field(2, 3);
    AlgebraPtr f2 = make_icf_field(2, 1);
    AlgebraPtr f2f2 = make_product({make_field(2, 1), make_field(2, 1)}, {2});
    CHECK(enumerate_homs(f4, f4).size() == 2);
    CHECK(enumerate_homs(f4, f8).empty());
    CHECK(enumerate_homs(f2f2, f2).size() == 2);
}

TEST_CASE("enumerate_homs agrees with brute-force function search") {
    std::vector<AlgebraPtr> family = {
        make_icf_field(2, 1),
        make_icf_field(2, 2),
        make_icf_field(3, 1),
        make_product({make_field(2, 1), make_field(2, 1)}, {2}),
        make_product({make_field(2, 1), make_field(3, 1)}, {2, 3}),
    };
    for (const auto& b : family) {
        for (const auto& c : family) {
            if (b->size() * c->size() > 256 && !(b->size() == 6 && c->size() == 6)) continue;
            if (static_cast<double>(std::pow(static_cast<double>(c->size()), static_cast<double>(b->size()))) > 5e7)
                continue;
            CHECK(static_cast<long>(enumerate_homs(b, c).size()) == count_homs_brute_force(b, c));
        }
    }
}

TEST_CASE("every enumerated hom preserves star and weak roots") {
    std::vector<AlgebraPtr> family = {
        make_icf_field(2, 2),
        make_icf_field(2, 4),
        make_icf_field(3, 2),
        make_product({make_field(2, 1), make_field(2, 2)}, {2}),
        make_product({make_field(2, 2), make_field(3, 1)}, {2, 3}),
    };
    for (const auto& b : family) {
        for (const auto& c : family) {
            for (const auto& h : enumerate_homs(b, c)) {
                for (long i = 0; i < b->size(); ++i) {
                    Elem a = b->element(i);
                    Elem ha = apply_hom(h, a);
                    CHECK(elem_eq(apply_hom(h, b->star(a)), c->star(ha)));
                    for (int p : {2, 3}) CHECK(elem_eq(apply_hom(h, b->root(p, a)), c->root(p, ha)));
                }
            }
        }
    }
}

TEST_CASE("identity, projections, composition") {
    AlgebraPtr f4 = make_icf_field(2, 2);
    Hom id = identity_hom(f4);
    CHECK(is_embedding(id));
    for (long i = 0; i < 4; ++i) CHECK(elem_eq(apply_hom(id, f4->element(i)), f4->element(i)));

    AlgebraPtr f2f2 = make_product({make_field(2, 1), make_field(2, 1)}, {2});
    AlgebraPtr f2 = make_icf_field(2, 1);
    auto projections = enumerate_homs(f2f2, f2);
    REQUIRE(projections.size() == 2);
    for (const auto& pr : projections) CHECK_FALSE(is_embedding(pr));

    // Frobenius composed with itself is the identity on GF(4)
    auto autos = enumerate_homs(f4, f4);
    REQUIRE(autos.size() == 2);
    for (const auto& g : autos) {
        Hom gg = compose_homs(g, g);
        if (homs_equal(g, id)) {
            CHECK(homs_equal(gg, id));
        } else {
            CHECK(homs_equal(gg, id));
            // and the non-identity one is the Frobenius
            for (long i = 0; i < 4; ++i) {
                FFElement x = std::get<FFElement>(f4->element(i));
                CHECK(std::get<FFElement>(apply_hom(g, f4->element(i))) == ff_frobenius(x));
            }
        }
    }

    CHECK_THROWS_AS(compose_homs(projections[0], autos[0]), Error); // endpoints do not line up
}

TEST_CASE("composition composes pointwise") {
    AlgebraPtr f2 = make_icf_field(2, 1);
    AlgebraPtr f4 = make_icf_field(2, 2);
    AlgebraPtr f16 = make_icf_field(2, 4);
    for (const auto& g : enumerate_homs(f2, f4)) {
        for (const auto& h : enumerate_homs(f4, f16)) {
            Hom gh = compose_homs(g, h);
            for (long i = 0; i < f2->size(); ++i)
                CHECK(elem_eq(apply_hom(gh, f2->element(i)), apply_hom(h, apply_hom(g, f2->element(i)))));
        }
    }
}

TEST_CASE("make_hom validates endpoints and preservation") {
    FieldRef f2 = make_field(2, 1), f4 = make_field(2, 2);
    AlgebraPtr a2 = make_icf_field(f2), a4 = make_icf_field(f4);
    auto embs = enumerate_embeddings(f2, f4);
    REQUIRE(embs.size() == 1);
    Hom h = make_hom(a2, a4, {0}, {embs[0]}, true);
    CHECK(is_embedding(h));
    CHECK_THROWS_AS(make_hom(a2, a4, {1}, {embs[0]}, false), Error);    // tau out of range
    CHECK_THROWS_AS(make_hom(a4, a4, {0}, {embs[0]}, false), Error);    // embedding endpoint mismatch
}
