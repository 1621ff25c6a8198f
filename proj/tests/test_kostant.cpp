#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2forge/kostant.hpp"

#include <random>

using namespace g2forge;

namespace {

SymMatrix random_gl2(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    for (;;) {
        SymMatrix m{{RFrac(d(rng)), RFrac(d(rng))}, {RFrac(d(rng)), RFrac(d(rng))}};
        if (!mat_det(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("Weyl dimension formula against known G2 dimensions") {
    CHECK(weyl_dim(Weight(0, 0)) == 1);
    CHECK(weyl_dim(Weight(1, 2)) == 7);
    CHECK(weyl_dim(Weight(2, 3)) == 14);
    CHECK(weyl_dim(Weight(2, 4)) == 27);
    CHECK(weyl_dim(Weight(3, 5)) == 64);
    CHECK(weyl_dim(Weight(3, 6)) == 77);
    CHECK(weyl_dim(Weight(4, 6)) == 77);
    CHECK_THROWS_AS(weyl_dim(roots::alpha()), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dim(Weight(rat(1, 2), 1)), std::invalid_argument);
}

TEST_CASE("R7 weights are the short roots and zero") {
    const auto& b = r7_basis();
    REQUIRE(b.size() == 7);
    int shorts = 0;
    for (auto& w : b)
        if (w != Weight()) {
            CHECK(w.inner(w) == 2);
            ++shorts;
        }
    CHECK(shorts == 6);
}

TEST_CASE("Levi embeddings are homomorphisms") {
    std::mt19937 rng(11);
    for (int t = 0; t < 15; ++t) {
        SymMatrix x = random_gl2(rng), y = random_gl2(rng);
        for (auto g : {roots::alpha(), roots::beta()}) CHECK(levi_embed(g, x * y) == levi_embed(g, x) * levi_embed(g, y));
    }
    CHECK(levi_embed(roots::beta(), SymMatrix::identity(2)) == SymMatrix::identity(7));
    CHECK_THROWS_AS(levi_embed(Weight(1, 1), SymMatrix::identity(2)), std::invalid_argument);
    CHECK_THROWS_AS(levi_embed(roots::alpha(), SymMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("Kostant pieces") {
    auto pieces = kostant_pieces(Parabolic::Palpha, Weight(1, 2));
    REQUIRE(pieces.size() == 6);
    for (auto& p : pieces) {
        CHECK(p.degree == p.w.length());
        CHECK(is_levi_dominant(Parabolic::Palpha, p.levi_highest_weight));
        CHECK(p.reported == p.levi_highest_weight);
    }
    auto neg = kostant_pieces(Parabolic::Palpha, Weight(1, 2), KostantSign::Negated);
    for (std::size_t i = 0; i < neg.size(); ++i)
        CHECK(neg[i].reported == -(neg[i].levi_highest_weight + roots::rho()));
    CHECK_THROWS_AS(kostant_pieces(Parabolic::B, roots::alpha()), std::invalid_argument);
}

TEST_CASE("P_alpha degree cases") {
    MPoly c1 = MPoly::var("c1"), c2 = MPoly::var("c2");
    auto cs = degree_cases_alpha();
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].i == 4);
    CHECK(cs[0].k == c1.scaled(2) + c2 + MPoly(4));
    CHECK(cs[0].s == (c2 + MPoly(1)).scaled(rat(1, 10)));
    CHECK(cs[1].i == 5);
    CHECK(cs[1].k == c1 + c2 + MPoly(3));
    CHECK(cs[1].s == (c1.scaled(3) + c2 + MPoly(4)).scaled(rat(1, 10)));
    CHECK(cs[2].i == 6);
    CHECK(cs[2].k == c1 + MPoly(2));
    CHECK(cs[2].s == (c1.scaled(3) + c2.scaled(2) + MPoly(5)).scaled(rat(1, 10)));
    CHECK(cs[0].w.name() == "w_bab");
    // every case reconstructs its own -w(l+rho)
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 4; ++b)
            for (auto& c : degree_cases_alpha(a, b)) {
                Weight v = -c.w.act(Weight::from_fund(a, b) + roots::rho());
                CHECK(c.neg_inf_char.eval({}) == v);
                Rat k = c.k.const_value(), s = c.s.const_value();
                Weight levi = roots::alpha() * ((k - 1) / 2);
                Weight ap = Weight(1, 2) * (5 * s);
                CHECK((v == levi + ap || v == -levi + ap));
            }
    CHECK_THROWS_AS(degree_cases_alpha(-1, 0), std::invalid_argument);
}

TEST_CASE("Hodge-Tate weights by pairing") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(0, 40);
    for (int t = 0; t < 20; ++t) {
        long c1 = d(rng), c2 = d(rng);
        auto p = hodge_tate_by_pairing(c1, c2);
        auto h = hodge_tate_weights(c1, c2);
        auto l = lift_weights(c1, c2);
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(p[i] == h[i]);
            CHECK(h[i] - l[i] == 3 - static_cast<long>(i));
        }
    }
}
