#include "doctest.h"

#include <cmath>
#include <random>

#include "meadowlab/amalgam.hpp"

using namespace meadowlab;

namespace {

Hom first_embedding_hom(const AlgebraPtr& a, const AlgebraPtr& b, std::vector<int> tau) {
    auto ac = components_copy(a);
    auto bc = components_copy(b);
    std::vector<FieldEmbedding> embs;
    for (size_t j = 0; j < bc.size(); ++j) embs.push_back(enumerate_embeddings(ac[tau[j]], bc[j]).front());
    return make_hom(a, b, std::move(tau), std::move(embs), false);
}

} // namespace

TEST_CASE("compositum of a field tower") {
    AlgebraPtr a = make_icf_field(2, 1), b = make_icf_field(2, 2), c = make_icf_field(2, 3);
    Span s{a, b, c, first_embedding_hom(a, b, {0}), first_embedding_hom(a, c, {0})};
    Amalgam am = amalgamate(s);
    auto dc = components_copy(am.d);
    REQUIRE(dc.size() == 1);
    CHECK(dc[0]->p == 2);
    CHECK(dc[0]->n == 6); // lcm(2, 3)
    CHECK(verify_amalgam(s, am));
}

TEST_CASE("diagonal against an extension") {
    AlgebraPtr a = make_icf_field(2, 1);
    AlgebraPtr b = make_product({make_field(2, 1), make_field(2, 1)}, {2});
    AlgebraPtr c = make_icf_field(2, 2);
    Span s{a, b, c, first_embedding_hom(a, b, {0, 0}), first_embedding_hom(a, c, {0})};
    Amalgam am = amalgamate(s);
    auto dc = components_copy(am.d);
    REQUIRE(dc.size() == 2);
    CHECK(dc[0]->n == 2);
    CHECK(dc[1]->n == 2); // GF(4) x GF(4)
    CHECK(am.g1.tau == std::vector<int>{0, 1});
    CHECK(am.g2.tau == std::vector<int>{0, 0}); // diagonal
    CHECK(verify_amalgam(s, am));
}

TEST_CASE("identity span produces the identity amalgam") {
    AlgebraPtr a = make_icf_field(2, 2);
    Span s{a, a, a, identity_hom(a), identity_hom(a)};
    Amalgam am = amalgamate(s);
    auto dc = components_copy(am.d);
    REQUIRE(dc.size() == 1);
    CHECK(dc[0]->n == 2);
    for (long i = 0; i < a->size(); ++i) {
        CHECK(elem_eq(as_component_vector(*am.d, apply_hom(am.g1, a->element(i)))[0],
                      std::get<FFElement>(a->element(i))));
        CHECK(homs_equal(am.g1, am.g2));
    }
    CHECK(verify_amalgam(s, am));
}

TEST_CASE("non-embedding spans are rejected") {
    AlgebraPtr a = make_product({make_field(2, 1), make_field(2, 1)}, {2});
    AlgebraPtr b = make_icf_field(2, 1);
    auto projections = enumerate_homs(a, b);
    REQUIRE_FALSE(projections.empty());
    Span s{a, b, b, projections[0], projections[0]};
    CHECK_THROWS_AS(amalgamate(s), Error);
    try {
        amalgamate(s);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotEmbedding);
    }
}

TEST_CASE("a twisted leg is caught by verification") {
    // base GF(4): a Frobenius twist of g2 moves the image of the generator of
    // the base field, so the square stops commuting on A
    AlgebraPtr a = make_icf_field(2, 2), b = make_icf_field(2, 2), c = make_icf_field(2, 4);
    Span s{a, b, c, first_embedding_hom(a, b, {0}), first_embedding_hom(a, c, {0})};
    Amalgam am = amalgamate(s);
    CHECK(verify_amalgam(s, am));
    Amalgam bad = am;
    auto& e = bad.g2.embs[0];
    e = FieldEmbedding{e.src, e.dst, ff_frobenius(e.image)};
    CHECK_FALSE(verify_amalgam(s, bad));
}

TEST_CASE("randomized spans amalgamate and verify") {
    std::mt19937 rng(917);
    auto rand_int = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    int done = 0;
    while (done < 40) {
        int p = (rand_int(0, 1) == 0) ? 2 : 3;
        int na = rand_int(1, 2);
        if (static_cast<long>(std::pow(p, na)) > 4) continue;
        FieldRef base = make_field(p, na);
        AlgebraPtr a = make_icf_field(base);

        auto extend = [&](int max_comps) {
            int comps = rand_int(1, max_comps);
            std::vector<FieldRef> fs;
            std::vector<int> tau;
            long total = 1;
            for (int i = 0; i < comps; ++i) {
                int mult = rand_int(1, 2);
                FieldRef f = make_field(p, na * mult);
                if (total * f->size > 16) f = base;
                total *= f->size;
                fs.push_back(f);
                tau.push_back(0);
            }
            AlgebraPtr alg = make_product(fs, {p});
            std::vector<FieldEmbedding> embs;
            for (const auto& f : fs) {
                auto all = enumerate_embeddings(base, f);
                embs.push_back(all[rng() % all.size()]);
            }
            return make_hom(a, alg, tau, embs, false);
        };
        Hom h1 = extend(2);
        Hom h2 = extend(2);
        if (h1.dst->size() > 16 || h2.dst->size() > 16) continue;
        Span s{a, h1.dst, h2.dst, h1, h2};
        Amalgam am = amalgamate(s);
        CHECK(verify_amalgam(s, am));
        ++done;
    }
}
