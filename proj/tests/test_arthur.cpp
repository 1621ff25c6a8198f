#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2forge/arthur.hpp"
#include "g2forge/kostant.hpp"

#include <algorithm>
#include <random>

using namespace g2forge;

namespace {

// orbit dimension as the rank of {[x, b] : b in the basis}, flattened to Q^49
std::size_t orbit_dim_oracle(const LieG2& g, const SymMatrix& x) {
    RatMatrix rows;
    for (auto& b : g.basis) {
        SymMatrix c = bracket(x, b);
        std::vector<Rat> r;
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j) r.push_back(c(i, j).const_value());
        rows.push_back(r);
    }
    return mat_rank(rows);
}

const DotIdentity& find_identity(const std::vector<DotIdentity>& ids, const std::string& name) {
    auto it = std::find_if(ids.begin(), ids.end(), [&](const DotIdentity& d) { return d.name == name; });
    REQUIRE(it != ids.end());
    return *it;
}

}  // namespace

TEST_CASE("nilpotent orbits") {
    auto t = orbit_table();
    REQUIRE(t.size() == 5);
    LieG2 g = lie_basis(RFrac(1));
    std::vector<std::size_t> dims;
    for (auto& o : t) {
        CHECK(o.dim_verified);
        CHECK(o.dim + o.centralizer == 14);
        CHECK(orbit_dim_oracle(g, orbit_representative(g, o.name)) == o.dim);
        dims.push_back(o.dim);
    }
    CHECK(dims == std::vector<std::size_t>{0, 6, 8, 10, 12});
    CHECK(t[3].component_group == "S3");
    CHECK(t[4].component_group == "trivial");
    CHECK_THROWS(orbit_representative(g, "O_x"));
}

TEST_CASE("psi_k packets") {
    for (int k = 4; k <= 20; k += 2) {
        auto [ql, qds] = packet_psi_k(k);
        CHECK(ql.kind == PacketKind::LanglandsQuotient);
        CHECK(qds.kind == PacketKind::QuaternionicDS);
        CHECK(ql.harish_chandra_param == lambda_k(k) + roots::rho());
        CHECK(qds.harish_chandra_param == ql.harish_chandra_param);
        CHECK(ql.cohomology_degrees == std::vector<int>{3, 5});
        CHECK(qds.cohomology_degrees == std::vector<int>{4});
        CHECK(lambda_k(k) == lambda0(k));
    }
    CHECK(packet_psi_k(4).first.harish_chandra_param == Weight(3, 5));
    CHECK(packet_psi_k(12).first.harish_chandra_param == Weight(11, 17));
    CHECK_THROWS_AS(packet_psi_k(2), std::invalid_argument);
    CHECK_THROWS_AS(packet_psi_k(5), std::invalid_argument);
}

TEST_CASE("lifted infinitesimal characters") {
    auto l = lift_inf_char(1, 1);
    CHECK(l.coweight.a == 10);
    CHECK(l.coweight.b == 6);
    CHECK(l.k == std::array<long, 3>{13, 9, 5});
    CHECK(lift_inf_char(1, 2).k[0] == 15);
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(1, 30);
    for (int t = 0; t < 20; ++t) {
        long c1 = d(rng), c2 = d(rng);
        auto x = lift_inf_char(c1, c2);
        CHECK(x.matches_hodge_tate);
        std::vector<Rat> want;
        for (auto& mu : r7_basis()) want.push_back(x.coweight.pair(mu));
        std::sort(want.begin(), want.end(), [](const Rat& p, const Rat& q) { return p > q; });
        CHECK(std::vector<Rat>(x.pairings.begin(), x.pairings.end()) == want);
    }
    CHECK_THROWS_AS(lift_inf_char(0, 1), std::invalid_argument);
}

TEST_CASE("multiplicity sign") {
    std::map<std::string, int> eps{{"v", 1}, {"w", -1}, {"u", 1}};
    CHECK(multiplicity_sign(eps, -1) == 1);
    CHECK(multiplicity_sign(eps, 1) == 0);
    std::mt19937 rng(37);
    for (int t = 0; t < 30; ++t) {
        std::map<std::string, int> e;
        int prod = 1;
        for (int i = 0; i < 5; ++i) {
            int s = rng() % 2 ? 1 : -1;
            e["v" + std::to_string(i)] = s;
            prod *= s;
        }
        for (int g : {1, -1}) {
            int base = multiplicity_sign(e, g);
            CHECK(base == (prod == g ? 1 : 0));
            auto f = e;
            f["v0"] = -f["v0"];
            f["v3"] = -f["v3"];
            CHECK(multiplicity_sign(f, g) == base);
        }
    }
    CHECK_THROWS(multiplicity_sign({{"v", 2}}, 1));
}

TEST_CASE("multiplicity ledger") {
    auto l = multiplicity_ledger(8, rat(1, 2), default_rules(rat(1, 2)));
    REQUIRE(l.terms.size() == 7);
    for (auto& t : l.terms) {
        CHECK(t.radical_dim == radical_dim(t.p));
        int parity = static_cast<int>(t.radical_dim - t.w.length()) % 2;
        CHECK(t.sign == (parity ? -1 : 1));
    }
    CHECK(l.raw.size() == 16);
    LinearForm want{{mult_cl("Pi"), 1}, {mult_eis(Parabolic::Palpha, WeylElement::from_word("ba"), "Piw"), -1}, {mult_cusp("Piw"), 1}};
    CHECK(l.reduced == want);
    CHECK_FALSE(l.bound_derived);
    CHECK(l.conclusion.rfind("no lower bound derivable", 0) == 0);
    CHECK(l.displayed.at(mult_eis(Parabolic::Palpha, WeylElement::from_word("ba"), "Piw")) == 1);
    CHECK(l.discrepancies.size() == 1);

    // dropping the alpha-lemma outcome leaves more unbounded terms, never a bound
    auto rules = default_rules(rat(1, 2));
    rules.pop_back();
    CHECK_FALSE(multiplicity_ledger(8, rat(1, 2), rules).bound_derived);

    // with the sign of w_ba reversed, the remaining terms are all nonnegative
    auto rigged = default_rules(rat(1, 2));
    rigged.push_back({VanishingRule::Zero, mult_eis(Parabolic::Palpha, WeylElement::from_word("ba"), "Piw"), {}, 0, "test"});
    auto b = multiplicity_ledger(8, rat(1, 2), rigged);
    CHECK(b.bound_derived);
    CHECK(b.lower_bound == 2);

    auto bad = default_rules(rat(1, 2));
    bad.push_back({VanishingRule::Zero, mult_cl("Pi"), {}, 0, "test"});
    CHECK_THROWS_AS(multiplicity_ledger(8, rat(1, 2), bad), AlgebraError);
    auto unknown = default_rules(0);
    unknown.push_back({VanishingRule::Zero, MultSymbol{"nonsense", "Pi"}, {}, 0, "test"});
    CHECK_THROWS_AS(multiplicity_ledger(8, 0, unknown), AlgebraError);
    CHECK_THROWS_AS(multiplicity_ledger(8, 1, default_rules(1)), std::invalid_argument);
}

TEST_CASE("dot identities against direct weight arithmetic") {
    auto ids = dot_identities();
    REQUIRE(ids.size() == 10);
    std::vector<bool> m;
    for (auto& d : ids) m.push_back(d.matches);
    CHECK(m == std::vector<bool>{false, true, true, true, true, true, true, false, false, false});
    WeylElement wb = WeylElement::from_word("b");
    for (int k = 6; k <= 24; k += 2) {
        Assignment at{{"k", Rat(k)}};
        Weight l0 = lambda0(k), b = roots::beta();
        CHECK(ids[1].computed.eval(at) == dot_act(wb, l0));
        CHECK(ids[6].computed.eval(at) == l0 - dot_act(wb, l0));
        // M_beta dot action uses rho_M = beta/2
        Weight mu = l0 - b + two_rho(Parabolic::Pbeta);
        Weight wmu = wb.act(mu + b * rat(1, 2)) - b * rat(1, 2);
        CHECK(ids[7].computed.eval(at) == mu - wmu);
        CHECK(mu - wmu == -b);
        CHECK(ids[8].computed.eval(at) == l0 - b + two_rho(Parabolic::Palpha));
        CHECK(ids[9].computed.eval(at) == dot_act(wb, l0 - b) + two_rho(Parabolic::Palpha));
        CHECK(ids[8].displayed.eval(at) != ids[8].computed.eval(at));
    }
    CHECK(find_identity(ids, "lambda_0 - w_beta*lambda_0").matches);
}
