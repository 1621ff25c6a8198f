#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2forge/lattice.hpp"

#include <random>

using namespace g2forge;

namespace {

SymMatrix random_square(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-4, 4);
    SymMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = RFrac(d(rng));
    return m;
}

// (wedge^2 M)_{(ij),(kl)} = M_ik M_jl - M_il M_jk
SymMatrix minors_oracle(const SymMatrix& m) {
    std::size_t n = m.rows();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    SymMatrix out(pairs.size(), pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r)
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            auto [i, j] = pairs[r];
            auto [k, l] = pairs[c];
            out(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
        }
    return out;
}

// Sym^3 by expanding products of linear forms in X = v6, Y = v7; the symmetrized
// tensor of X^2 Y is 3 X^2 Y as a polynomial
SymMatrix sym3_oracle(const SymMatrix& r) {
    MPoly x = MPoly::var("X"), y = MPoly::var("Y");
    auto c = [&](std::size_t i, std::size_t j) { return r(i, j).as_poly(); };
    MPoly rx = c(0, 0) * x + c(1, 0) * y, ry = c(0, 1) * x + c(1, 1) * y;
    const int scale[4] = {1, 3, -3, -1};
    SymMatrix out(4, 4);
    for (int j = 0; j < 4; ++j) {
        MPoly img(scale[j]);
        for (int t = 0; t < 3 - j; ++t) img = img * rx;
        for (int t = 0; t < j; ++t) img = img * ry;
        for (int i = 0; i < 4; ++i) {
            MPoly mono = MPoly::var("X", 3 - i) * MPoly::var("Y", i);
            Rat coef = 0;
            for (auto& [m, cf] : img.terms())
                if (MPoly::monomial(m, 1) == mono) coef = cf;
            out(i, j) = RFrac(coef / scale[i]);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("wedge^2 against 2x2 minors") {
    std::mt19937 rng(17);
    std::vector<std::string> names{"v1", "v2", "v3", "v4", "v5"};
    for (int t = 0; t < 5; ++t) {
        SymMatrix m = random_square(rng, 5);
        CHECK(wedge2_action(m, WedgeBasis::standard(5, names)) == minors_oracle(m));
    }
    SymMatrix a = random_square(rng, 5), b = random_square(rng, 5);
    WedgeBasis f = WedgeBasis::five_dim();
    a = a + SymMatrix::identity(5).scaled(RFrac(11));
    b = b + SymMatrix::identity(5).scaled(RFrac(11));
    CHECK(wedge2_action(a * b, f) == wedge2_action(a, f) * wedge2_action(b, f));
}

TEST_CASE("basis changes") {
    CHECK(WedgeBasis::five_dim().change_matrix().size() == 10);
    CHECK(WedgeBasis::four_dim().change_matrix().size() == 6);
    WedgeBasis bad = WedgeBasis::standard(4, {"v1", "v2", "v3", "v4"});
    bad.elements[1] = bad.elements[0];
    CHECK_THROWS_AS(bad.change_matrix(), NotABasis);
}

TEST_CASE("Sym^3 against the tensor oracle") {
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        SymMatrix r = random_square(rng, 2);
        CHECK(sym3(r) == sym3_oracle(r));
        SymMatrix q = random_square(rng, 2);
        CHECK(sym3(r * q) == sym3(r) * sym3(q));
    }
    auto s = ShapedElement::symbolic();
    CHECK(sym3_block_matches(s, true));
    CHECK_FALSE(sym3_block_matches(s, false));
}

TEST_CASE("first five columns of wedge^2 E") {
    auto s = ShapedElement::symbolic();
    auto r = first_columns_report(s);
    CHECK_FALSE(r.match);
    REQUIRE(r.mismatches.size() == 2);
    CHECK(r.mismatches[0].rfind("(3,3)", 0) == 0);
    CHECK(r.mismatches[1].rfind("(5,4)", 0) == 0);
    // v1^v2 scales by 1/d
    CHECK(r.computed(0, 0) == s.d());
    CHECK(mat_det(s.matrix()) == mat_det(s.rho1()) * mat_det(s.rho2()) * mat_det(s.rho3()));
}

TEST_CASE("relation elimination") {
    auto r = relation_elimination();
    RFrac d = ShapedElement::symbolic().d();
    CHECK(r.expected == RFrac(-9) * d.pow(3));
    CHECK(r.literal_det == RFrac(-9) * d.pow(3));
    CHECK(r.transform_det == RFrac(-1));
    CHECK(r.eliminated_det == RFrac(9) * d.pow(3));
    CHECK(r.eliminated == r.transform * r.literal);
    CHECK(r.eliminated_matches_display);
    CHECK(r.eliminated_det == mat_det_cofactor(r.eliminated));
    auto c = c_functions(ShapedElement::symbolic());
    CHECK(c[3] == -(MPoly::var("g77") * MPoly::var("p15")) - MPoly::var("g67") * MPoly::var("p25"));
}

TEST_CASE("four-dimensional wedge") {
    auto r = four_dim_wedge_report();
    RFrac d = ShapedElement::symbolic().d();
    CHECK(r.columns(0, 0) == d.inv());
    CHECK_FALSE(r.shape_ok);
    CHECK_FALSE(r.star_matches);
    CHECK(r.star_on_relation.is_zero());
    auto sw = four_dim_wedge_report(WedgeBasis::four_dim_swapped());
    CHECK(sw.shape_ok);
    CHECK(sw.ratio_on_relation == RFrac(-2));
}

TEST_CASE("constraint families") {
    CHECK(constraint_families(SymMatrix::identity(7))[0].is_zero());
    auto levi = form_constraint_probe(2, ProbeGenerators::LeviAndHighest);
    for (auto f : levi.failures) CHECK(f == 0);
    auto full = form_constraint_probe(2, ProbeGenerators::Pbeta);
    CHECK(full.failures[0] > 0);
    CHECK(full.failures[1] > 0);
}
