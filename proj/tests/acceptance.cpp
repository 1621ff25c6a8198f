// One PASS/FAIL line per acceptance criterion. Each clause is checked as stated;
// a failing clause fails its criterion.

#include "g2forge/arthur.hpp"
#include "g2forge/kostant.hpp"
#include "g2forge/lattice.hpp"
#include "g2forge/phin.hpp"
#include "g2forge/suites.hpp"

#include <CLI11.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

using namespace g2forge;

namespace {

struct Result {
    bool pass = true;
    std::vector<std::string> notes;

    void clause(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back(std::string(ok ? "ok" : "FAILED") + ": " + what);
    }
};

RFrac v(const char* s) { return RFrac::var(s); }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

// 1. seven one-parameter subgroups and the torus stabilize the generic form
Result criterion1(int) {
    Result r;
    RFrac a = v("a"), x = v("x");
    AltTriForm f = generic_form(a);
    std::size_t nonzero = 0, identities = 0;
    std::vector<SymMatrix> gens;
    for (auto& g : subgroup_roots()) gens.push_back(root_subgroup(g, x, a));
    gens.push_back(torus_elem(v("t1"), v("t2")));
    for (auto& g : gens) {
        AltTriForm diff = f.pullback(g) - f;
        identities += AltTriForm::kTriples;
        nonzero += diff.nonzero_count();
    }
    r.clause(gens.size() == 8 && identities == 280 && nonzero == 0,
             std::to_string(identities) + " coefficient identities, " + std::to_string(nonzero) + " nonzero");
    return r;
}

// 2. the nine displayed S7 images and the homomorphism property
Result criterion2(int) {
    Result r;
    std::vector<std::string> bad;
    std::size_t n = 0;
    for (auto& c : compare_s7_images()) {
        if (c.word.size() < 2) continue;  // s_alpha and s_beta define the map
        ++n;
        if (!c.match) bad.push_back("s_" + c.word + " displayed " + c.displayed + ", computed " + c.computed);
    }
    r.clause(n == 9 && bad.empty(), std::to_string(n) + " displayed images" + (bad.empty() ? "" : "; " + join(bad, "; ")));
    std::size_t f = s7_homomorphism_failures();
    r.clause(f == 0, "homomorphism on 144 pairs, " + std::to_string(f) + " failures");
    return r;
}

// 3. coefficient relations on P_beta words up to length L
Result criterion3(int word_length) {
    Result r;
    auto w = relation_word_search(word_length);
    r.clause(w.failures == 0, std::to_string(w.words) + " words up to length " + std::to_string(word_length) +
                                  (w.failures ? ", first failure " + w.first_failure : ", no failures"));
    return r;
}

// 4. the three degree cases and -w_bab(L + rho)
Result criterion4(int) {
    Result r;
    MPoly c1 = MPoly::var("c1"), c2 = MPoly::var("c2");
    auto cs = degree_cases_alpha();
    std::vector<std::tuple<int, MPoly, MPoly>> want = {
        {4, c1.scaled(2) + c2 + MPoly(4), (c2 + MPoly(1)).scaled(rat(1, 10))},
        {5, c1 + c2 + MPoly(3), (c1.scaled(3) + c2 + MPoly(4)).scaled(rat(1, 10))},
        {6, c1 + MPoly(2), (c1.scaled(3) + c2.scaled(2) + MPoly(5)).scaled(rat(1, 10))}};
    bool ok = cs.size() == 3;
    for (std::size_t i = 0; ok && i < 3; ++i) {
        auto& [wi, wk, ws] = want[i];
        ok = cs[i].i == wi && cs[i].k == wk && cs[i].s == ws;
    }
    r.clause(ok, "(i, k, s) triples for degrees 4, 5, 6");
    // -w_bab(L + rho) = -((2c1 + c2 + 3)/2) alpha + ((c2 + 1)/2)(alpha + 2beta)
    MPoly ca = (c1.scaled(2) + c2 + MPoly(3)).scaled(rat(-1, 2)), cb = (c2 + MPoly(1)).scaled(rat(1, 2));
    PWeight shown = PWeight(ca, MPoly(0)) + PWeight(cb, cb.scaled(2));
    bool f = !cs.empty() && cs[0].w.name() == "w_bab" && cs[0].neg_inf_char == shown;
    r.clause(f, "-w_bab(L + rho) = " + (cs.empty() ? std::string("?") : cs[0].neg_inf_char.str()));
    return r;
}

// 5. dot-action regressions and the criticality set
Result criterion5(int) {
    Result r;
    MPoly k = MPoly::var("k");
    PWeight l0 = PWeight::from_fund((k - MPoly(4)).scaled(rat(1, 2)), MPoly(0));
    PWeight wb = dot_act(WeylElement::from_word("b"), l0);
    r.clause(wb == l0 - PWeight(roots::beta()), "w_beta*lambda_0 = lambda_0 - beta: " + wb.str());
    PWeight lhs = dot_act(WeylElement::from_word("ab"), l0) + PWeight(two_rho(Parabolic::Pbeta));
    MPoly cb = (k.scaled(3) - MPoly(4)).scaled(rat(1, 4)), cl = (k + MPoly(4)).scaled(rat(1, 4));
    PWeight rhs = PWeight(MPoly(0), cb) + PWeight::from_fund(cl, MPoly(0));
    r.clause(lhs == rhs, "w_ab*lambda_0 + 2rho_Pbeta = ((3k-4)/4)beta + ((k+4)/4)(2alpha+3beta): " + lhs.str());
    std::size_t cases = 0;
    std::string bad;
    for (int kk = 4; kk <= 40; ++kk)
        for (int s2 = 0; s2 <= kk - 1; ++s2) {
            Rat sp = rat(s2, 2);
            if (!(Rat(kk) > 4 * sp + 4)) continue;
            ++cases;
            auto cs = critical_set(critical_slope(sp), lambda0(kk));
            if ((cs.size() != 1 || cs[0].name() != "w_b") && bad.empty())
                bad = "k = " + std::to_string(kk) + ", s_p = " + rat_str(sp);
        }
    r.clause(bad.empty(), "critical set is {w_beta} on " + std::to_string(cases) + " cases" + (bad.empty() ? "" : ", fails at " + bad));
    return r;
}

// 6. lattice calculus
Result criterion6(int) {
    Result r;
    auto s = ShapedElement::symbolic();
    auto fc = first_columns_report(s);
    r.clause(fc.match, "first five columns of wedge^2 E" + (fc.match ? std::string() : ": " + join(fc.mismatches, "; ")));
    r.clause(sym3_block_matches(s), "bottom-right block is Sym^3(rho_1 d)");
    auto e = relation_elimination();
    r.clause(e.eliminated_det == e.expected, "elimination determinant " + e.eliminated_det.str() + ", expected " + e.expected.str());
    auto f = four_dim_wedge_report();
    r.clause(f.star_matches, "star " + f.star.str() + ", expected " + f.displayed_star.str());
    return r;
}

// 7. (phi,N) suite
Result criterion7(int) {
    Result r;
    SymMatrix bm{{v("b11"), v("b12")}, {v("b21"), v("b22")}};
    bool rel = build_EBc(bm, v("c"), 4, 1).phi_n_relation();
    r.clause(rel, "phi^-1 N phi = p N for symbolic (B, c)" +
                      (rel ? std::string() : "; holds only when AB = BA, commutant dimension " + std::to_string(ebc_relation_solution_dim(4))));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    std::set<std::vector<long>> pairs;
    std::size_t separated = 0;
    while (pairs.size() < 50) {
        std::vector<long> q(10);
        for (auto& e : q) e = d(rng);
        if (std::equal(q.begin(), q.begin() + 5, q.begin() + 5) || !pairs.insert(q).second) continue;
        auto mk = [&](std::size_t o) {
            return EbcPair{SymMatrix{{Rat(q[o]), Rat(q[o + 1])}, {Rat(q[o + 2]), Rat(q[o + 3])}}, RFrac(Rat(q[o + 4]))};
        };
        if (ebc_distinguish(mk(0), mk(5), 4)) ++separated;
    }
    r.clause(separated == 50, std::to_string(separated) + " of 50 random distinct (B, c) pairs separated");
    std::size_t grid = 0;
    std::string bad;
    for (int k = 2; k <= 20; ++k)
        for (int s2 = 0; s2 <= k - 1; ++s2) {
            ++grid;
            if (!is_admissible(d_st(k, rat(s2, 2))) && bad.empty()) bad = std::to_string(k) + ", " + rat_str(rat(s2, 2));
        }
    r.clause(bad.empty(), "D_st admissible on " + std::to_string(grid) + " (k, s_p)" + (bad.empty() ? "" : ", fails at " + bad));
    bool obs = true;
    for (int k : {4, 6, 8, 10, 20})
        obs = obs && monodromy_obstruction(e2prime_eigenvalues(k), {0}).equations == e2prime_displayed_constraints(k);
    r.clause(obs, "E'' obstruction: " + join(monodromy_obstruction(e2prime_eigenvalues(4), {0}).equations, "; "));
    return r;
}

// 8. Lie algebra and orbits
Result criterion8(int) {
    Result r;
    auto g = lie_basis(v("a"));
    std::size_t c = bracket_closure_failures(g);
    r.clause(c == 0, "bracket closure symbolic in a, " + std::to_string(c) + " failures");
    auto g1 = lie_basis(RFrac(1));
    std::vector<std::size_t> dims;
    for (const char* n : {"O_0", "O_l", "O_s", "O_sr", "O_r"}) dims.push_back(centralizer_dim(g1, orbit_representative(g1, n), {}));
    std::vector<std::string> ds;
    for (auto x : dims) ds.push_back(std::to_string(x));
    r.clause(dims == std::vector<std::size_t>{14, 8, 6, 4, 2}, "centralizer dims " + join(ds));
    Assignment at{{"a", Rat(1)}};
    auto t = complete_sl2(g, subregular_e(g), at);
    std::size_t z = sl2_centralizer_dim(g, t.e, t.f, at);
    r.clause(z == 0, "subregular sl2 centralizer dim " + std::to_string(z));
    auto w = zeta_witness(g);
    r.clause(w.centralizes_e && w.centralizes_f && w.order_three && w.w_beta_centralizes, "zeta witness over Q[zeta]");
    return r;
}

// 9. packets, lifts and the multiplicity ledger
Result criterion9(int) {
    Result r;
    bool pk = true;
    for (int k = 4; k <= 30; k += 2) {
        auto [a, b] = packet_psi_k(k);
        pk = pk && a.cohomology_degrees == std::vector<int>{3, 5} && b.cohomology_degrees == std::vector<int>{4} &&
             a.harish_chandra_param == lambda_k(k) + roots::rho() && b.harish_chandra_param == lambda_k(k) + roots::rho();
    }
    r.clause(pk, "packet degrees {3,5}/{4}, HC parameter lambda_k + rho for k = 4..30");
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(1, 40);
    std::size_t ok = 0;
    for (int i = 0; i < 20; ++i) {
        long c1 = d(rng), c2 = d(rng);
        auto l = lift_inf_char(c1, c2);
        auto h = hodge_tate_weights(c1, c2);
        bool m = true;
        for (std::size_t j = 0; j < 7; ++j) m = m && l.pairings[j] == h[j];
        if (m) ++ok;
    }
    r.clause(ok == 20, "coweight pairing equals Hodge-Tate weights on " + std::to_string(ok) + " of 20 random (c1, c2)");
    auto led = multiplicity_ledger(8, rat(1, 2), default_rules(rat(1, 2)));
    r.clause(led.bound_derived && led.lower_bound >= 2,
             "ledger: " + led.conclusion + (led.discrepancies.empty() ? "" : "; " + join(led.discrepancies, "; ")));
    return r;
}

int run_cli(const std::string& args, std::string& out) {
    std::string cmd = "'" G2FORGE_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return -1;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = ::pclose(p);
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

// 10. determinism and coverage
Result criterion10(int) {
    Result r;
    std::string a, b;
    int ra = run_cli("verify --seed 7 --format json", a), rb = run_cli("verify --seed 7 --format json", b);
    r.clause(!a.empty() && a == b && ra == rb && ra >= 0,
             "two CLI runs, " + std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different"));
    auto rep = run_verify(SuiteOptions{});
    auto probs = coverage_problems(rep);
    r.clause(probs.empty(), std::to_string(coverage_manifest().size()) + " manifest entries" +
                                (probs.empty() ? ", each exactly once" : ": " + join(probs, "; ")));
    return r;
}

struct Criterion {
    std::function<Result(int)> run;
    double limit_ms;  // 0: no limit
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0, word_length = 4;
    app.add_option("--criterion", only, "run one criterion (1-10)")->check(CLI::Range(1, 10));
    app.add_option("--word-length", word_length, "word length for criterion 3")->check(CLI::Range(1, 6));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> all = {
        {criterion1, 1000},  {criterion2, 1000},  {criterion3, 30000}, {criterion4, 1000}, {criterion5, 5000},
        {criterion6, 10000}, {criterion7, 10000}, {criterion8, 30000}, {criterion9, 1000}, {criterion10, 0},
    };
    bool all_pass = true;
    for (int n = 1; n <= 10; ++n) {
        if (only && n != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = all[n - 1].run(word_length);
        } catch (const std::exception& e) {
            r.clause(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        double limit = all[n - 1].limit_ms;
        if (limit > 0) r.clause(ms < limit, "runtime under " + std::to_string(static_cast<int>(limit)) + " ms");
        char head[96];
        std::snprintf(head, sizeof head, "criterion %d: %s (%.1f ms)", n, r.pass ? "PASS" : "FAIL", ms);
        std::cout << head << "\n";
        for (auto& note : r.notes) std::cout << "  " << note << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
