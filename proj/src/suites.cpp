#include "g2forge/suites.hpp"

#include "g2forge/arthur.hpp"
#include "g2forge/kostant.hpp"
#include "g2forge/lattice.hpp"
#include "g2forge/phin.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace g2forge {

const char* const kVersion = "0.1.0";

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Finding: return "finding";
    }
    return "?";
}

bool VerificationReport::any_fail() const { return !failing_ids().empty(); }

std::vector<std::string> VerificationReport::failing_ids() const {
    std::vector<std::string> out;
    for (auto& s : suites)
        for (auto& c : s.checks)
            if (c.status == CheckStatus::Fail) out.push_back(c.id);
    return out;
}

std::string VerificationReport::json() const {
    nlohmann::ordered_json j;
    j["version"] = version;
    j["seed"] = seed;
    j["suites"] = nlohmann::ordered_json::array();
    for (auto& s : suites) {
        nlohmann::ordered_json js;
        js["name"] = s.name;
        js["checks"] = nlohmann::ordered_json::array();
        for (auto& c : s.checks)
            js["checks"].push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"detail", c.detail}});
        j["suites"].push_back(js);
    }
    return j.dump(2) + "\n";
}

std::string VerificationReport::text(bool timings) const {
    std::ostringstream os;
    std::size_t counts[3] = {0, 0, 0};
    for (auto& s : suites) {
        os << "[" << s.name << "]\n";
        for (auto& c : s.checks) {
            counts[static_cast<int>(c.status)]++;
            os << "  " << status_name(c.status) << "  " << c.id;
            if (timings) os << "  (" << static_cast<long>(c.millis) << " ms)";
            os << "\n      " << c.detail << "\n";
        }
    }
    os << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " finding\n";
    return os.str();
}

namespace {

using Outcome = std::pair<CheckStatus, std::string>;

Outcome verdict(bool ok, const std::string& detail) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, detail}; }

struct SuiteBuilder {
    SuiteReport rep;
    void add(const std::string& id, const std::string& anchor, const std::function<Outcome()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        Check c{id, anchor, CheckStatus::Fail, ""};
        try {
            auto [st, d] = f();
            c.status = st;
            c.detail = d;
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.detail = std::string("exception: ") + e.what();
        }
        c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rep.checks.push_back(c);
    }
};

// rng() % n on the raw engine, so instances do not depend on the library's distributions
long draw(std::mt19937_64& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

RFrac v(const std::string& s) { return RFrac::var(s); }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ", ") {
    std::string s;
    for (auto& x : xs) s += (s.empty() ? "" : sep) + x;
    return s;
}

SuiteReport core_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "core";
    b.add("core.det_eliminated_display", "determinant of the eliminated 6x6 matrix is -9 d^3", [] {
        auto r = relation_elimination();
        return verdict(r.displayed_eliminated_det == r.expected,
                       "det = " + r.displayed_eliminated_det.str() + ", expected " + r.expected.str());
    });
    b.add("core.rank_regular_orbit", "orbit of E_alpha + E_beta has dimension 12", [] {
        LieG2 g = lie_basis(RFrac(1));
        SymMatrix x = g.e(roots::alpha()) + g.e(roots::beta());
        std::size_t r = mat_rank(ad_matrix(g, x), {});
        return verdict(r == 12, "rank ad(X) = " + std::to_string(r));
    });
    b.add("core.det_multiplicative", "property", [&] {
        std::mt19937_64 rng(o.seed);
        for (int t = 0; t < 5; ++t) {
            SymMatrix x(4, 4), y(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    x(i, j) = RFrac(Rat(draw(rng, -9, 9)));
                    y(i, j) = RFrac(Rat(draw(rng, -9, 9))) + (i == j ? v("s") : RFrac(0));
                }
            if (mat_det(x * y) != mat_det(x) * mat_det(y)) return verdict(false, "trial " + std::to_string(t));
        }
        return verdict(true, "det(XY) = det X det Y on 5 seeded 4x4 pairs, one symbolic");
    });
    return b.rep;
}

SuiteReport roots_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "roots";
    using roots::alpha;
    using roots::beta;
    b.add("roots.longest_negates", "w_-1 acts by -1 on the root lattice", [&] {
        std::mt19937_64 rng(o.seed + 1);
        auto w = WeylElement::longest();
        for (int t = 0; t < 20; ++t) {
            Weight l(draw(rng, -50, 50), draw(rng, -50, 50));
            if (weyl_act(w, l) != -l) return verdict(false, "fails at " + l.str());
        }
        return verdict(true, "20 seeded weights");
    });
    b.add("roots.dot_w_beta_lambda0", "w_beta*lambda_0 = lambda_0 - beta", [] {
        PWeight l0 = PWeight::from_fund((MPoly::var("k") - MPoly(4)).scaled(rat(1, 2)), MPoly(0));
        PWeight got = dot_act(WeylElement::from_word("b"), l0);
        return verdict(got == l0 - PWeight(beta()), got.str());
    });
    b.add("roots.neg_w_bab", "-w_bab(L+rho) = -(2c1+c2+3) alpha/2 + (c2+1)(alpha+2beta)/2", [] {
        MPoly c1 = MPoly::var("c1"), c2 = MPoly::var("c2");
        PWeight lr = PWeight::from_fund(c1, c2) + PWeight(roots::rho());
        PWeight got = -weyl_act(WeylElement::from_word("bab"), lr);
        MPoly u = -(c1.scaled(2) + c2 + MPoly(3)), t = c2 + MPoly(1);
        PWeight want = PWeight(u.scaled(rat(1, 2)), MPoly(0)) + PWeight(t.scaled(rat(1, 2)), t);
        return verdict(got == want, got.str());
    });
    auto reps = [](Parabolic p) {
        std::vector<std::string> out;
        for (auto& w : minimal_coset_reps(p)) out.push_back(w.name() + ":" + std::to_string(w.length()));
        return out;
    };
    b.add("roots.coset_reps_Palpha", "W^Palpha = 1, w_b, w_ba, w_bab, w_baba, w_babab", [&] {
        auto r = reps(Parabolic::Palpha);
        return verdict(r == std::vector<std::string>{"1:0", "w_b:1", "w_ba:2", "w_bab:3", "w_baba:4", "w_babab:5"}, join(r));
    });
    b.add("roots.coset_reps_B", "W^B = W", [&] {
        auto r = reps(Parabolic::B);
        return verdict(r.size() == 12, std::to_string(r.size()) + " elements");
    });
    b.add("roots.coset_reps_Pbeta", "W^Pbeta = 1, w_a, w_ab, w_aba, w_abab, w_ababa", [&] {
        auto r = reps(Parabolic::Pbeta);
        return verdict(r == std::vector<std::string>{"1:0", "w_a:1", "w_ab:2", "w_aba:3", "w_abab:4", "w_ababa:5"}, join(r));
    });
    b.add("roots.critical_w_beta_residue", "slope minus lambda_0 plus w_beta*lambda_0 = s_p(2alpha+3beta)", [] {
        for (int k = 4; k <= 40; k += 2)
            for (int s2 = 0; s2 <= k - 1; ++s2) {
                Rat sp = rat(s2, 2), kk = k;
                Weight res = critical_slope(sp) - lambda0(kk) + dot_act(WeylElement::from_word("b"), lambda0(kk));
                if (res != Weight::from_fund(sp, 0)) return verdict(false, "k = " + std::to_string(k));
            }
        return verdict(true, "even k <= 40, 2 s_p in 0..k-1");
    });
    b.add("roots.critical_exactly_w_beta", "critical set is {w_beta} when k > 4 s_p + 4", [] {
        std::size_t cases = 0;
        for (int k = 4; k <= 40; ++k)
            for (int s2 = 0; s2 <= k - 1; ++s2) {
                Rat sp = rat(s2, 2);
                auto cs = critical_set(critical_slope(sp), lambda0(Rat(k)));
                bool has = std::any_of(cs.begin(), cs.end(), [](auto& w) { return w.word() == "b"; });
                if (!has) return verdict(false, "w_beta missing at k = " + std::to_string(k));
                if (Rat(k) > 4 * sp + 4) {
                    ++cases;
                    if (cs.size() != 1)
                        return verdict(false, "k = " + std::to_string(k) + ", s_p = " + rat_str(sp) + ": " + std::to_string(cs.size()));
                }
            }
        return verdict(true, std::to_string(cases) + " cases with k > 4 s_p + 4, k <= 40");
    });
    return b.rep;
}

SuiteReport kostant_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "kostant";
    b.add("kostant.weyl_dim_std", "alpha + 2beta gives the 7-dimensional representation", [] {
        Rat d = weyl_dim(Weight(1, 2));
        return verdict(d == 7, "dim = " + rat_str(d));
    });
    b.add("kostant.levi_embed_rho2", "middle 3x3 block of the beta Levi is rho_2", [] {
        auto s = ShapedElement::symbolic();
        SymMatrix blk = levi_embed(roots::beta(), s.rho3()).block(2, 2, 3, 3);
        return verdict(blk == s.rho2(), blk.str());
    });
    b.add("kostant.borel_degrees", "property", [] {
        auto pieces = kostant_pieces(Parabolic::B, Weight(2, 3));
        std::vector<int> m(7, 0);
        for (auto& p : pieces) m[p.degree]++;
        return verdict(pieces.size() == 12 && m == std::vector<int>{1, 2, 2, 2, 2, 2, 1}, std::to_string(pieces.size()) + " pieces");
    });
    b.add("kostant.degree_cases", "(4, 2c1+c2+4, (c2+1)/10), (5, c1+c2+3, (3c1+c2+4)/10), (6, c1+2, (3c1+2c2+5)/10)", [] {
        MPoly c1 = MPoly::var("c1"), c2 = MPoly::var("c2");
        auto cs = degree_cases_alpha();
        std::vector<std::tuple<int, MPoly, MPoly>> want = {
            {4, c1.scaled(2) + c2 + MPoly(4), (c2 + MPoly(1)).scaled(rat(1, 10))},
            {5, c1 + c2 + MPoly(3), (c1.scaled(3) + c2 + MPoly(4)).scaled(rat(1, 10))},
            {6, c1 + MPoly(2), (c1.scaled(3) + c2.scaled(2) + MPoly(5)).scaled(rat(1, 10))}};
        if (cs.size() != 3) return verdict(false, std::to_string(cs.size()) + " cases");
        std::string d;
        for (std::size_t i = 0; i < 3; ++i) {
            auto& [wi, wk, ws] = want[i];
            d += (i ? "; " : "") + std::to_string(cs[i].i) + ", " + cs[i].k.str() + ", " + cs[i].s.str();
            if (cs[i].i != wi || cs[i].k != wk || cs[i].s != ws) return verdict(false, d);
        }
        return verdict(true, d);
    });
    b.add("kostant.degree_case_middle", "c1 = (k-4)/2, c2 = 0 gives degree 4, weight k, s = 1/10", [] {
        auto cs = degree_cases_alpha();
        MPoly k = MPoly::var("k");
        MPoly kk = cs[0].k.subst("c1", (k - MPoly(4)).scaled(rat(1, 2))).subst("c2", MPoly(0));
        MPoly ss = cs[0].s.subst("c1", (k - MPoly(4)).scaled(rat(1, 2))).subst("c2", MPoly(0));
        return verdict(cs[0].i == 4 && kk == k && ss == MPoly(rat(1, 10)), kk.str() + ", " + ss.str());
    });
    b.add("kostant.hodge_tate_pairing", "property", [&] {
        std::mt19937_64 rng(o.seed + 2);
        for (int t = 0; t < 20; ++t) {
            long c1 = draw(rng, 0, 30), c2 = draw(rng, 0, 30);
            auto p = hodge_tate_by_pairing(c1, c2);
            auto h = hodge_tate_weights(c1, c2);
            for (std::size_t i = 0; i < 7; ++i)
                if (p[i] != h[i]) return verdict(false, "(" + std::to_string(c1) + "," + std::to_string(c2) + ")");
        }
        return verdict(true, "20 seeded (c1, c2)");
    });
    return b.rep;
}

SuiteReport triform_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "triform";
    RFrac a = v("a"), x = v("x");
    b.add("triform.generic_form_display", "generic form e147 + e156 + e237 - e245 + a e345", [] {
        AltTriForm f = generic_form(RFrac(1));
        bool has245 = !f.at(1, 3, 4).is_zero();
        AltTriForm t = generic_form(RFrac(1)).pullback(torus_elem(v("t1"), v("t2")));
        bool e246_invariant = t.at(1, 3, 5) == f.at(1, 3, 5);
        return verdict(has245, std::string("e245 is not torus-invariant; e246 ") + (e246_invariant ? "is" : "is not") +
                                   " and carries the -1: " + f.str());
    });
    b.add("triform.genericity_recipe", "relabel (2635)(47) and rescale onto the generic form", [&] {
        auto w = genericity_witness(literal_scaling(a), a);
        return verdict(w.exact, w.exact ? "exact" : "literal scaling: " + join(w.mismatches, "; "));
    });
    b.add("triform.genericity_cube_root", "property", [] {
        RFrac bb = v("b");
        auto w = genericity_witness(cube_root_scaling(bb), bb.pow(3));
        return verdict(w.exact, "scaling (1,1,b,-b,-b,1/b,1/b) reaches a = b^3");
    });
    b.add("triform.subgroups_stabilize", "each g(gamma, x) preserves the generic form", [&] {
        AltTriForm f = generic_form(a);
        std::vector<std::string> bad;
        for (auto& g : subgroup_roots())
            if (!(f.pullback(root_subgroup(g, x, a)) == f)) bad.push_back(g.str());
        return verdict(bad.empty(), bad.empty() ? "7 subgroups x 35 coefficients" : join(bad));
    });
    b.add("triform.torus_stabilizes", "the torus preserves the form", [&] {
        AltTriForm f = generic_form(a);
        return verdict(f.pullback(torus_elem(v("t1"), v("t2"))) == f, "35 coefficients");
    });
    b.add("triform.conj_alpha", "alpha([t1,t2]) = t1^-1 t2^2", [] {
        RFrac c = torus_character(roots::alpha(), v("t1"), v("t2"));
        return verdict(conj_relation(roots::alpha()) && c == v("t2").pow(2) / v("t1"), c.str());
    });
    b.add("triform.conj_minus_beta", "g(-beta) conjugates by beta^-1", [] {
        return verdict(conj_relation(-roots::beta()), "symbolic in t1, t2, x, a");
    });
    for (auto [w, cyc] : std::vector<std::pair<std::string, std::string>>{{"ab", "(125763)"}, {"bab", "(15)(37)"}, {"ababab", "(17)(26)(35)"}}) {
        b.add("triform.s7_" + w, "s_" + w + " = " + cyc, [w = w, cyc = cyc] {
            std::string got = cycle_string(weyl_word_to_s7(w));
            return verdict(got == cycle_string(parse_cycles(cyc)), got);
        });
    }
    b.add("triform.s7_displayed", "the nine displayed images in S7", [] {
        std::vector<std::string> bad;
        for (auto& c : compare_s7_images())
            if (!c.match) bad.push_back(c.word + ": displayed " + c.displayed + ", computed " + c.computed);
        return verdict(bad.empty(), bad.empty() ? "all match" : join(bad, "; "));
    });
    b.add("triform.s7_homomorphism", "property", [] {
        std::size_t f = s7_homomorphism_failures();
        return verdict(f == 0 && s7_injective(), std::to_string(f) + " failures over 144 pairs");
    });
    b.add("triform.generators_in_P232", "T_a lies in P_232", [] {
        auto r = bruhat_disjointness_check();
        return verdict(r.generators_in_P232, "W_232 meets the image in " + join(r.intersection));
    });
    b.add("triform.unipotent_relations", "the unipotent product satisfies the relations", [&] {
        SymMatrix u = unipotent_product(a);
        RFrac x1 = v("x1"), x2 = v("x2"), x3 = v("x3"), x4 = v("x4");
        bool rows = u(0, 0) == RFrac(1) && u(0, 1).is_zero() && u(0, 2) == x2 && u(0, 3) == RFrac(2) * x3 && u(0, 4) == x4 &&
                    u(1, 0).is_zero() && u(1, 1) == RFrac(1) && u(1, 2) == x1 && u(1, 3) == RFrac(2) * x2 && u(1, 4) == -x3;
        return verdict(coeff_relations(u) && rows, rows ? "upper rows as displayed" : "upper rows differ: " + u.block(0, 0, 2, 5).str());
    });
    b.add("triform.word_relations", "the relations hold on products of P_beta generators", [&] {
        auto r = relation_word_search(o.word_length);
        return verdict(r.failures == 0, std::to_string(r.words) + " words up to length " + std::to_string(o.word_length) +
                                            (r.failures ? ", first failure " + r.first_failure : ""));
    });
    b.add("triform.bracket_closure", "the 14 matrices span a Lie algebra", [&] {
        auto g = lie_basis(a);
        std::size_t c = bracket_closure_failures(g), d = derivation_failures(g);
        return verdict(c == 0 && d == 0, std::to_string(c) + " bracket failures, " + std::to_string(d) + " derivation failures");
    });
    LieG2 g1 = lie_basis(RFrac(1));
    for (auto [name, dim] : std::vector<std::pair<std::string, std::size_t>>{{"O_0", 14}, {"O_l", 8}, {"O_s", 6}, {"O_sr", 4}, {"O_r", 2}}) {
        b.add("triform.centralizer_" + name, "centralizer of the " + name + " representative", [&g1, name = name, dim = dim] {
            std::size_t c = centralizer_dim(g1, orbit_representative(g1, name), {});
            return verdict(c == dim, std::to_string(c));
        });
    }
    b.add("triform.sl2_subregular", "the subregular sl2 has trivial common centralizer", [&] {
        Assignment at{{"a", Rat(1)}};
        auto g = lie_basis(a);
        auto t = complete_sl2(g, subregular_e(g), at);
        std::size_t c = sl2_centralizer_dim(g, t.e, t.f, at);
        return verdict(c == 0, std::to_string(c));
    });
    b.add("triform.zeta_witness", "beta^vee(zeta) and w_beta centralize the subregular triple", [&] {
        auto w = zeta_witness(lie_basis(a));
        return verdict(w.centralizes_e && w.centralizes_f && w.order_three && w.w_beta_centralizes, "over Q[zeta]");
    });
    return b.rep;
}

SuiteReport lattice_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "lattice";
    auto s = ShapedElement::symbolic();
    b.add("lattice.first_columns", "first five columns of wedge^2 E", [&] {
        auto r = first_columns_report(s);
        return verdict(r.match, r.match ? "matches" : join(r.mismatches, "; "));
    });
    b.add("lattice.sym3_block", "lower right block is Sym^3(rho_1 d)", [&] {
        return verdict(sym3_block_matches(s, true), "basis (v6^3, v6^2 v7, -v6 v7^2, -v7^3)");
    });
    b.add("lattice.c4", "c4 = -g77 g'15 - g67 g'25", [&] {
        auto c = c_functions(s);
        MPoly want = -(MPoly::var("g77") * MPoly::var("p15")) - MPoly::var("g67") * MPoly::var("p25");
        return verdict(c[3] == want, c[3].str());
    });
    b.add("lattice.relation_det", "determinant of the eliminated matrix is -9 d^3", [] {
        auto r = relation_elimination();
        return verdict(r.eliminated_det == r.expected, "eliminated " + r.eliminated_det.str() + ", literal system " +
                                                           r.literal_det.str() + ", transform " + r.transform_det.str());
    });
    b.add("lattice.eliminated_blocks", "the three 2x2 blocks of the eliminated matrix", [] {
        auto r = relation_elimination();
        std::string d = r.system_row_mismatches.empty() ? "" : "; displayed system rows: " + join(r.system_row_mismatches, "; ");
        return verdict(r.eliminated_matches_display, "row operations reach the displayed form" + d);
    });
    b.add("lattice.four_dim_star", "* = (g67 g26 + g77 g16)/d", [] {
        auto r = four_dim_wedge_report();
        auto sw = four_dim_wedge_report(WedgeBasis::four_dim_swapped());
        return verdict(r.star_matches, "star " + r.star.str() + "; with the 2nd and 4th basis vectors exchanged, ratio " +
                                           sw.ratio_on_relation.str() + " on the relation");
    });
    b.add("lattice.four_dim_leading", "g(v2^v1) = (1/d) v2^v1", [] {
        auto r = four_dim_wedge_report();
        RFrac d = ShapedElement::symbolic().d();
        return verdict(r.columns(0, 0) == d.inv(), r.columns(0, 0).str());
    });
    auto probe = [&](ProbeGenerators gens) {
        return [&, gens] {
            auto r = form_constraint_probe(o.probe_length, gens);
            std::string d = std::to_string(r.words) + " words up to length " + std::to_string(r.max_length) + "; failures";
            for (int i = 0; i < 3; ++i)
                d += " F" + std::to_string(i + 1) + "=" + std::to_string(r.failures[i]) +
                     (r.failures[i] ? " (" + r.first_failure[i] + ")" : "");
            return Outcome{CheckStatus::Finding, d};
        };
    };
    b.add("lattice.probe_pbeta", "open question: constraint families on P_beta", probe(ProbeGenerators::Pbeta));
    b.add("lattice.probe_levi_highest", "open question: constraint families on the Levi and highest root", probe(ProbeGenerators::LeviAndHighest));
    return b.rep;
}

SuiteReport phin_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "phin";
    b.add("phin.dst_endpoints", "D_st endpoints coincide", [] {
        auto m = d_st(4, 1);
        return verdict(admissibility(m).endpoints_equal,
                       "Newton " + newton_polygon(m).str() + ", Hodge " + hodge_polygon(m).str());
    });
    b.add("phin.dst_grid", "D_st admissible for k <= 20, 0 <= s_p <= (k-1)/2", [] {
        std::size_t n = 0;
        for (int k = 2; k <= 20; ++k)
            for (int s4 = 0; s4 <= 2 * (k - 1); ++s4) {
                ++n;
                if (!is_admissible(d_st(k, rat(s4, 4))))
                    return verdict(false, "k = " + std::to_string(k) + ", s_p = " + rat_str(rat(s4, 4)));
            }
        return verdict(true, std::to_string(n) + " cases, s_p in quarter steps");
    });
    b.add("phin.ebc_admissible", "extensions of admissible modules are admissible", [] {
        auto m = build_EBc(SymMatrix(2, 2), RFrac(0), 4, 1);
        auto r = admissibility(m);
        return verdict(r.admissible, "B = 0, c = 0, k = 4: " + std::to_string(r.stable_subspaces) + " stable subspaces");
    });
    b.add("phin.ebc_fil2", "Fil^2 = span(v1, c v2 + v3)", [] {
        RFrac c = v("c");
        auto m = build_EBc(SymMatrix(2, 2), c, 6, 1);
        SymMatrix want{{1, 0}, {0, c}, {0, 1}, {0, 0}};
        for (auto& st : m.fil)
            if (st.from == 2) return verdict(st.basis == want, st.basis.str());
        return verdict(false, "no step at 2");
    });
    b.add("phin.ebc_relation_symbolic", "phi^-1 N phi = p N for E(B,c)", [] {
        SymMatrix bm{{v("b11"), v("b12")}, {v("b21"), v("b22")}};
        auto m = build_EBc(bm, v("c"), 4, 1);
        std::size_t dim = ebc_relation_solution_dim(4);
        return verdict(m.phi_n_relation(), "holds iff AB = BA; commutant has dimension " + std::to_string(dim));
    });
    b.add("phin.ebc_relation_random", "phi relation on random (B,c)", [&] {
        std::mt19937_64 rng(o.seed + 3);
        std::size_t holds = 0;
        for (int t = 0; t < 10; ++t) {
            SymMatrix bm{{Rat(draw(rng, -5, 5)), Rat(draw(rng, -5, 5))}, {Rat(draw(rng, -5, 5)), Rat(draw(rng, -5, 5))}};
            if (build_EBc(bm, Rat(draw(rng, -5, 5)), 4, 1).phi_n_relation()) ++holds;
        }
        return verdict(holds == 10, std::to_string(holds) + " of 10 seeded (B,c)");
    });
    b.add("phin.ebc_00_01", "(0,0) and (0,1) are distinguished", [] {
        auto r = ebc_compare({SymMatrix(2, 2), RFrac(0)}, {SymMatrix(2, 2), RFrac(1)}, 4);
        return verdict(r.distinguished, join(r.stages, " | "));
    });
    b.add("phin.ebc_b_differs", "N-equivariance separates B", [] {
        SymMatrix b1{{1, 0}, {0, 1}}, b2{{2, 0}, {0, 1}};
        auto r = ebc_compare({b1, RFrac(3)}, {b2, RFrac(3)}, 4);
        return verdict(r.distinguished, join(r.stages, " | "));
    });
    b.add("phin.ebc_injective_random", "the parametrization by (B,c) is injective", [&] {
        std::mt19937_64 rng(o.seed + 4);
        std::set<std::vector<long>> seen;
        std::size_t n = 0;
        while (n < 50) {
            std::vector<long> x(10);
            for (auto& e : x) e = draw(rng, -3, 3);
            std::vector<long> l(x.begin(), x.begin() + 5), r(x.begin() + 5, x.end());
            if (l == r) continue;
            auto mk = [](const std::vector<long>& q) {
                return EbcPair{SymMatrix{{Rat(q[0]), Rat(q[1])}, {Rat(q[2]), Rat(q[3])}}, RFrac(Rat(q[4]))};
            };
            if (!ebc_distinguish(mk(l), mk(r), 4)) return verdict(false, "pair " + std::to_string(n) + " not separated");
            ++n;
        }
        return verdict(true, "50 seeded distinct pairs separated");
    });
    b.add("phin.obstruction_e2prime", "the four constraints for E''", [] {
        std::vector<std::string> got;
        for (int k : {4, 6, 10}) {
            auto r = monodromy_obstruction(e2prime_eigenvalues(k), {0});
            if (r.equations != e2prime_displayed_constraints(k)) return verdict(false, "k = " + std::to_string(k) + ": " + join(r.equations));
            if (k == 4) got = r.equations;
        }
        return verdict(true, "k = 4: " + join(got, "; "));
    });
    b.add("phin.sym2_b0", "b = 0 forces a nontrivial intersection", [] {
        return verdict(!sym2_fil0_test(v("a"), RFrac(0)), "b = 0");
    });
    b.add("phin.sym2_generic", "generic b gives a trivial intersection", [] {
        return verdict(sym2_fil0_test(v("a"), v("b")), "a, b symbols");
    });
    b.add("phin.distinctness", "ahat differs from p^(k-1) ahat^-1 and p^k ahat^-1", [] {
        std::vector<std::string> d;
        bool ok = true;
        for (auto& q : distinctness_check(4)) {
            d.push_back(q.lhs + " vs " + q.rhs + ": " + q.justification);
            if (q.justification.empty()) ok = false;
        }
        return verdict(ok, join(d, "; "));
    });
    return b.rep;
}

SuiteReport arthur_suite(const SuiteOptions& o) {
    SuiteBuilder b;
    b.rep.name = "arthur";
    b.add("arthur.orbit_table", "orbit dimensions 0, 6, 8, 10, 12", [] {
        std::string d;
        bool ok = true;
        for (auto& r : orbit_table()) {
            d += (d.empty() ? "" : ", ") + r.name + " " + std::to_string(r.dim) + " " + r.component_group;
            ok = ok && r.dim_verified;
        }
        return verdict(ok, d);
    });
    b.add("arthur.component_groups", "O_sr has S3, O_r is trivial", [] {
        auto t = orbit_table();
        return verdict(t[3].component_group == "S3" && t[4].component_group == "trivial", "stored data");
    });
    b.add("arthur.packet_degrees", "cohomology in degrees 3 and 5, and 4", [] {
        auto [p, m] = packet_psi_k(8);
        return verdict(p.cohomology_degrees == std::vector<int>{3, 5} && m.cohomology_degrees == std::vector<int>{4}, "k = 8");
    });
    b.add("arthur.packet_hc", "quaternionic discrete series parameter lambda_k + rho", [] {
        auto hc4 = packet_psi_k(4).second.harish_chandra_param, hc12 = packet_psi_k(12).second.harish_chandra_param;
        return verdict(hc4 == Weight(3, 5) && hc12 == Weight(11, 17), "k = 4: " + hc4.str() + ", k = 12: " + hc12.str());
    });
    b.add("arthur.packet_k2", "psi_2 has irregular infinitesimal character", [] {
        try {
            packet_psi_k(2);
        } catch (const std::invalid_argument& e) {
            return verdict(true, e.what());
        }
        return verdict(false, "k = 2 accepted");
    });
    b.add("arthur.lift_coweight", "(3c1+2c2+5) alpha^vee + (2c1+c2+3) beta^vee and k1, k2, k3", [] {
        auto l = lift_inf_char(1, 1);
        bool ok = l.coweight.a == 10 && l.coweight.b == 6 && l.k == std::array<long, 3>{13, 9, 5} && lift_inf_char(1, 2).k[0] == 15;
        return verdict(ok, "(1,1): " + l.coweight.str());
    });
    b.add("arthur.lift_pairing", "property", [&] {
        std::mt19937_64 rng(o.seed + 5);
        for (int t = 0; t < 20; ++t) {
            long c1 = draw(rng, 1, 40), c2 = draw(rng, 1, 40);
            if (!lift_inf_char(c1, c2).matches_hodge_tate)
                return verdict(false, "(" + std::to_string(c1) + "," + std::to_string(c2) + ")");
        }
        return verdict(true, "20 seeded (c1, c2)");
    });
    b.add("arthur.sign_infinity", "a single -1 at infinity with eps = -1 gives multiplicity 1", [] {
        int m = multiplicity_sign({{"inf", -1}}, -1);
        return verdict(m == 1 && multiplicity_sign({{"inf", 1}}, 1) == 1 && multiplicity_sign({{"inf", -1}, {"v", -1}}, -1) == 0,
                       "m = " + std::to_string(m));
    });
    b.add("arthur.sign_flip", "property", [&] {
        std::mt19937_64 rng(o.seed + 6);
        for (int t = 0; t < 20; ++t) {
            std::map<std::string, int> c;
            for (int i = 0; i < 5; ++i) c["v" + std::to_string(i)] = draw(rng, 0, 1) ? 1 : -1;
            int eps = draw(rng, 0, 1) ? 1 : -1;
            int before = multiplicity_sign(c, eps);
            c["v0"] = -c["v0"];
            c["v3"] = -c["v3"];
            if (multiplicity_sign(c, eps) != before) return verdict(false, "trial " + std::to_string(t));
        }
        return verdict(true, "flipping two choices preserves the output");
    });
    b.add("arthur.ledger", "the lemma outcomes give m^dag_0(Pi) >= 2", [] {
        auto l = multiplicity_ledger(12, 1, default_rules(1));
        std::string d = l.conclusion + "; m^dag_0(Pi) = " + form_str(l.reduced);
        if (!l.discrepancies.empty()) d += "; " + join(l.discrepancies, "; ");
        return verdict(l.bound_derived && l.lower_bound >= 2, d);
    });
    int i = 0;
    for (auto& id : dot_identities()) {
        b.add("arthur.dot_" + std::to_string(++i), id.name, [id] {
            return verdict(id.matches, "computed " + id.computed.str() + (id.matches ? "" : ", displayed " + id.displayed.str()));
        });
    }
    return b.rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"core", "roots", "kostant", "triform", "lattice", "phin", "arthur"};
    return n;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "core") return core_suite(opts);
    if (name == "roots") return roots_suite(opts);
    if (name == "kostant") return kostant_suite(opts);
    if (name == "triform") return triform_suite(opts);
    if (name == "lattice") return lattice_suite(opts);
    if (name == "phin") return phin_suite(opts);
    if (name == "arthur") return arthur_suite(opts);
    throw std::invalid_argument("unknown suite " + name);
}

VerificationReport run_verify(const SuiteOptions& opts, const std::vector<std::string>& names) {
    VerificationReport r;
    r.version = kVersion;
    r.seed = opts.seed;
    for (auto& n : names) r.suites.push_back(run_suite(n, opts));
    return r;
}

const std::vector<ManifestEntry>& coverage_manifest() {
    static const std::vector<ManifestEntry> m = {
        {"core", "core.det_eliminated_display"},
        {"core", "core.rank_regular_orbit"},
        {"roots", "roots.longest_negates"},
        {"roots", "roots.dot_w_beta_lambda0"},
        {"roots", "roots.neg_w_bab"},
        {"roots", "roots.coset_reps_Palpha"},
        {"roots", "roots.coset_reps_B"},
        {"roots", "roots.coset_reps_Pbeta"},
        {"roots", "roots.critical_w_beta_residue"},
        {"roots", "roots.critical_exactly_w_beta"},
        {"kostant", "kostant.weyl_dim_std"},
        {"kostant", "kostant.levi_embed_rho2"},
        {"kostant", "kostant.degree_cases"},
        {"kostant", "kostant.degree_case_middle"},
        {"triform", "triform.generic_form_display"},
        {"triform", "triform.genericity_recipe"},
        {"triform", "triform.subgroups_stabilize"},
        {"triform", "triform.torus_stabilizes"},
        {"triform", "triform.conj_alpha"},
        {"triform", "triform.conj_minus_beta"},
        {"triform", "triform.s7_ab"},
        {"triform", "triform.s7_bab"},
        {"triform", "triform.s7_ababab"},
        {"triform", "triform.s7_displayed"},
        {"triform", "triform.generators_in_P232"},
        {"triform", "triform.unipotent_relations"},
        {"triform", "triform.word_relations"},
        {"triform", "triform.bracket_closure"},
        {"triform", "triform.centralizer_O_0"},
        {"triform", "triform.centralizer_O_l"},
        {"triform", "triform.centralizer_O_s"},
        {"triform", "triform.centralizer_O_sr"},
        {"triform", "triform.centralizer_O_r"},
        {"triform", "triform.sl2_subregular"},
        {"triform", "triform.zeta_witness"},
        {"lattice", "lattice.first_columns"},
        {"lattice", "lattice.sym3_block"},
        {"lattice", "lattice.c4"},
        {"lattice", "lattice.relation_det"},
        {"lattice", "lattice.eliminated_blocks"},
        {"lattice", "lattice.four_dim_star"},
        {"lattice", "lattice.four_dim_leading"},
        {"lattice", "lattice.probe_pbeta"},
        {"lattice", "lattice.probe_levi_highest"},
        {"phin", "phin.dst_endpoints"},
        {"phin", "phin.dst_grid"},
        {"phin", "phin.ebc_admissible"},
        {"phin", "phin.ebc_fil2"},
        {"phin", "phin.ebc_relation_symbolic"},
        {"phin", "phin.ebc_relation_random"},
        {"phin", "phin.ebc_00_01"},
        {"phin", "phin.ebc_b_differs"},
        {"phin", "phin.ebc_injective_random"},
        {"phin", "phin.obstruction_e2prime"},
        {"phin", "phin.sym2_b0"},
        {"phin", "phin.sym2_generic"},
        {"phin", "phin.distinctness"},
        {"arthur", "arthur.orbit_table"},
        {"arthur", "arthur.component_groups"},
        {"arthur", "arthur.packet_degrees"},
        {"arthur", "arthur.packet_hc"},
        {"arthur", "arthur.packet_k2"},
        {"arthur", "arthur.lift_coweight"},
        {"arthur", "arthur.sign_infinity"},
        {"arthur", "arthur.ledger"},
        {"arthur", "arthur.dot_1"},
        {"arthur", "arthur.dot_2"},
        {"arthur", "arthur.dot_3"},
        {"arthur", "arthur.dot_4"},
        {"arthur", "arthur.dot_5"},
        {"arthur", "arthur.dot_6"},
        {"arthur", "arthur.dot_7"},
        {"arthur", "arthur.dot_8"},
        {"arthur", "arthur.dot_9"},
        {"arthur", "arthur.dot_10"},
    };
    return m;
}

std::vector<std::string> coverage_problems(const VerificationReport& r) {
    std::map<std::string, int> seen;
    std::map<std::string, std::string> suite_of;
    for (auto& s : r.suites)
        for (auto& c : s.checks) {
            seen[c.id]++;
            suite_of[c.id] = s.name;
        }
    std::vector<std::string> out;
    std::set<std::string> listed;
    for (auto& e : coverage_manifest()) {
        listed.insert(e.id);
        bool suite_ran = std::any_of(r.suites.begin(), r.suites.end(), [&](auto& s) { return s.name == e.suite; });
        if (!suite_ran) continue;
        if (!seen.count(e.id))
            out.push_back("missing: " + e.id);
        else if (suite_of[e.id] != e.suite)
            out.push_back("wrong suite: " + e.id);
    }
    for (auto& [id, n] : seen) {
        if (n > 1) out.push_back("duplicate: " + id);
        if (!listed.count(id)) {
            bool property = false;
            for (auto& s : r.suites)
                for (auto& c : s.checks)
                    if (c.id == id && c.anchor == "property") property = true;
            if (!property) out.push_back("unlisted: " + id);
        }
    }
    return out;
}

}  // namespace g2forge
