#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2forge/kostant.hpp"
#include "g2forge/lie.hpp"

#include <random>

using namespace g2forge;

namespace {

RFrac v(const char* s) { return RFrac::var(s); }

// inverse Weyl action on the R7 weights, independent of the matrix model
Perm7 weight_perm(const std::string& word) {
    const auto& b = r7_basis();
    WeylElement wi = WeylElement::from_word(word).inverse();
    Perm7 p{};
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (wi.act(b[i]) == b[j]) p[i] = j;
    return p;
}

}  // namespace

TEST_CASE("alternating form basics") {
    AltTriForm f;
    f.set(0, 3, 6, RFrac(2));
    CHECK(f.at(3, 0, 6) == RFrac(-2));
    CHECK(f.at(6, 3, 0) == RFrac(-2));
    CHECK(f.at(0, 0, 6).is_zero());
    CHECK(f.nonzero_count() == 1);
    CHECK(f.pullback(SymMatrix::identity(7)) == f);
    CHECK(AltTriForm::triple(0) == std::array<int, 3>{0, 1, 2});
    // pullback along a composite is the composite of pullbacks
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-3, 3);
    SymMatrix g(7, 7), h(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            g(i, j) = RFrac(d(rng));
            h(i, j) = RFrac(d(rng));
        }
    AltTriForm s = standard_form();
    CHECK(s.pullback(g * h) == s.pullback(g).pullback(h));
}

TEST_CASE("generic form is stabilized by the matrix model") {
    RFrac a = v("a"), x = v("x");
    AltTriForm f = generic_form(a);
    CHECK(f.nonzero_count() == 5);
    CHECK(f.at(1, 3, 5) == RFrac(-1));
    CHECK(f.at(1, 3, 4).is_zero());
    for (auto& g : subgroup_roots()) CHECK(f.pullback(root_subgroup(g, x, a)) == f);
    CHECK(f.pullback(torus_elem(v("t1"), v("t2"))) == f);
    CHECK(f.pullback(weyl_rep('a', a)) == f);
    CHECK(f.pullback(weyl_rep('b', a)) == f);
    for (auto& g : subgroup_roots()) CHECK(conj_relation(g));
    CHECK(torus_character(roots::beta(), v("t1"), v("t2")) == v("t1") / v("t2"));
}

TEST_CASE("genericity witnesses") {
    RFrac a = v("a"), b = v("b");
    auto lit = genericity_witness(literal_scaling(a), a);
    CHECK_FALSE(lit.exact);
    CHECK(lit.mismatches.size() == 2);
    auto cube = genericity_witness(cube_root_scaling(b), b.pow(3));
    CHECK(cube.exact);
    CHECK(cube.result == generic_form(b.pow(3)));
    CHECK(cube.mismatches.empty());
}

TEST_CASE("S7 images") {
    for (auto& e : weyl_group()) {
        Perm7 p = weyl_word_to_s7(e.word());
        CHECK(p == weight_perm(e.word()));
        int sign = 1;
        for (char c : e.word()) sign *= c == 'b' ? -1 : 1;
        CHECK(perm_sign(p) == sign);
    }
    CHECK(cycle_string(weyl_word_to_s7("ababa")) == "(16)(27)");
    CHECK(cycle_string(parse_cycles("(31)(26)(57)")) == "(13)(26)(57)");
    CHECK(cycle_string(perm_identity()) == "()");
    auto cmp = compare_s7_images();
    REQUIRE(cmp.size() == displayed_s7_images().size());
    std::vector<std::string> bad;
    for (auto& c : cmp)
        if (!c.match) bad.push_back(c.word);
    CHECK(bad == std::vector<std::string>{"ababa"});
    CHECK(s7_homomorphism_failures() == 0);
    CHECK(s7_injective());
    Perm7 p = parse_cycles("(12)"), q = parse_cycles("(23)");
    CHECK(cycle_string(perm_then(p, q)) == "(132)");
    CHECK_THROWS(monomial_perm(SymMatrix(7, 7)));
}

TEST_CASE("Bruhat data") {
    auto r = bruhat_disjointness_check();
    CHECK(r.generators_in_P232);
    CHECK(r.intersection == std::vector<std::string>{"1", "w_b"});
    CHECK(r.reps_in_P232 == r.intersection);
    CHECK(in_W232(parse_cycles("(12)(35)(67)")));
    CHECK_FALSE(in_W232(parse_cycles("(23)(56)")));
}

TEST_CASE("coefficient relations") {
    RFrac a = v("a");
    CHECK(coeff_relations(unipotent_product(a)));
    CHECK(coeff_relations(torus_elem(v("t1"), v("t2"))));
    SymMatrix bad = SymMatrix::identity(7);
    bad(0, 3) = RFrac(1);
    CHECK_FALSE(coeff_relations(bad));
    auto r = relation_word_search(2);
    CHECK(r.failures == 0);
    CHECK(r.words == 8 + 64);
    for (int k = 0; k < kPbetaGeneratorKinds; ++k) CHECK(in_P232(pbeta_generator(k, 0, a)));
}

TEST_CASE("Lie algebra of the matrix model") {
    RFrac a = v("a");
    LieG2 g = lie_basis(a);
    REQUIRE(g.basis.size() == 14);
    CHECK(bracket_closure_failures(g) == 0);
    CHECK(derivation_failures(g) == 0);
    // [H, E_gamma] is a multiple of E_gamma for both Cartan elements
    for (std::size_t i = 2; i < 14; ++i) {
        auto c0 = lie_coords(g, bracket(g.basis[0], g.basis[i]));
        auto c1 = lie_coords(g, bracket(g.basis[1], g.basis[i]));
        for (std::size_t j = 0; j < 14; ++j)
            if (j != i) {
                CHECK(c0[j].is_zero());
                CHECK(c1[j].is_zero());
            }
    }
    std::vector<RFrac> c(14, RFrac(0));
    c[3] = RFrac(2);
    c[9] = v("y");
    CHECK(lie_coords(g, lie_combine(g, c)) == c);
    CHECK_THROWS_AS(lie_coords(g, SymMatrix::identity(7)), NotInSpan);
}

TEST_CASE("subregular sl2 and the zeta witness") {
    RFrac a = v("a");
    LieG2 g = lie_basis(a);
    Assignment at{{"a", Rat(1)}};
    auto t = complete_sl2(g, subregular_e(g), at);
    CHECK(bracket(t.h, t.e) == t.e.scaled(RFrac(2)));
    CHECK(bracket(t.h, t.f) == t.f.scaled(RFrac(-2)));
    CHECK(bracket(t.e, t.f) == t.h);
    CHECK(sl2_centralizer_dim(g, t.e, t.f, at) == 0);
    auto w = zeta_witness(g);
    CHECK(w.centralizes_e);
    CHECK(w.centralizes_f);
    CHECK(w.order_three);
    CHECK(w.w_beta_centralizes);
    CHECK(reduce_zeta(v("z").pow(3) - RFrac(1)).is_zero());
    CHECK(reduce_zeta(v("z").pow(2) + v("z") + RFrac(1)).is_zero());
    CHECK_FALSE(reduce_zeta(v("z")).is_zero());
}
