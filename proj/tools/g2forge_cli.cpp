#include "g2forge/arthur.hpp"
#include "g2forge/kostant.hpp"
#include "g2forge/lattice.hpp"
#include "g2forge/phin.hpp"
#include "g2forge/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace g2forge;
using json = nlohmann::ordered_json;

namespace {

struct Config {
    int word_length = 4;
    int probe_length = 3;
    std::uint64_t seed = 7;
    std::string output_dir;
};

// key = value lines; '#' starts a comment
Config read_config(const std::string& path) {
    Config c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(n) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "word_length")
            c.word_length = std::stoi(val);
        else if (key == "probe_length")
            c.probe_length = std::stoi(val);
        else if (key == "seed")
            c.seed = std::stoull(val);
        else if (key == "output_dir")
            c.output_dir = val;
        else
            throw std::invalid_argument(path + ":" + std::to_string(n) + ": unknown key " + key);
    }
    return c;
}

std::string text_of(const json& j, const std::string& indent = "") {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = j.is_object() ? it.key() + ":" : "-";
        if (it->is_structured() && !it->empty())
            s += indent + key + "\n" + text_of(*it, indent + "  ");
        else
            s += indent + key + " " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
    }
    return s;
}

json weight_json(const Weight& w) { return json{{"alpha", rat_str(w.a)}, {"beta", rat_str(w.b)}}; }

json roots_report() {
    json j;
    for (Parabolic p : {Parabolic::B, Parabolic::Palpha, Parabolic::Pbeta}) {
        json jp;
        json reps = json::array();
        for (auto& w : minimal_coset_reps(p)) reps.push_back(json{{"w", w.name()}, {"length", w.length()}});
        jp["minimal_coset_reps"] = reps;
        jp["two_rho"] = weight_json(two_rho(p));
        json eis = json::array();
        for (auto& w : eis_set(p)) eis.push_back(w.name());
        jp["eisenstein_set"] = eis;
        j[parabolic_name(p)] = jp;
    }
    return j;
}

json kostant_report(long c1, long c2) {
    json j;
    j["c1"] = c1;
    j["c2"] = c2;
    json cases = json::array();
    for (auto& c : degree_cases_alpha(c1, c2))
        cases.push_back(json{{"degree", c.i}, {"w", c.w.name()}, {"k", c.k.str()}, {"s", c.s.str()}});
    j["degree_cases"] = cases;
    j["hodge_tate_weights"] = hodge_tate_weights(c1, c2);
    j["lift_weights"] = lift_weights(c1, c2);
    return j;
}

json triform_report(const std::string& a_text, bool& ok) {
    RFrac a = a_text == "a" ? RFrac::var("a") : RFrac(parse_rat(a_text));
    RFrac x = RFrac::var("x");
    AltTriForm f = generic_form(a);
    json j;
    j["a"] = a_text;
    j["form"] = f.str();
    json gens = json::array();
    ok = true;
    auto push = [&](const std::string& name, const SymMatrix& g) {
        std::size_t nz = (f.pullback(g) - f).nonzero_count();
        ok = ok && nz == 0;
        gens.push_back(json{{"generator", name}, {"preserves", nz == 0}, {"nonzero_coefficients", nz}});
    };
    for (auto& g : subgroup_roots()) push("g(" + g.str() + ", x)", root_subgroup(g, x, a));
    push("torus", torus_elem(RFrac::var("t1"), RFrac::var("t2")));
    push("w_alpha", weyl_rep('a', a));
    push("w_beta", weyl_rep('b', a));
    j["generators"] = gens;
    return j;
}

json wedge2_report(int probe) {
    auto s = ShapedElement::symbolic();
    json j;
    auto fc = first_columns_report(s);
    j["first_columns"] = json{{"match", fc.match}, {"mismatches", fc.mismatches}};
    j["sym3_block"] = sym3_block_matches(s, true);
    auto c = c_functions(s);
    j["c"] = json::array({c[0].str(), c[1].str(), c[2].str(), c[3].str()});
    auto e = relation_elimination();
    j["elimination"] = json{{"literal_det", e.literal_det.str()},
                            {"transform_det", e.transform_det.str()},
                            {"eliminated_det", e.eliminated_det.str()},
                            {"expected", e.expected.str()},
                            {"eliminated_matches_display", e.eliminated_matches_display},
                            {"displayed_system_rows", e.system_row_mismatches}};
    for (auto [name, basis] : std::vector<std::pair<std::string, WedgeBasis>>{{"four_dim", WedgeBasis::four_dim()},
                                                                              {"four_dim_swapped", WedgeBasis::four_dim_swapped()}}) {
        auto r = four_dim_wedge_report(basis);
        j[name] = json{{"shape_ok", r.shape_ok},
                       {"shape_mismatches", r.shape_mismatches},
                       {"star", r.star.str()},
                       {"star_matches", r.star_matches},
                       {"star_on_relation", r.star_on_relation.str()},
                       {"ratio_on_relation", r.ratio_on_relation.str()}};
    }
    if (probe > 0) {
        for (auto [name, g] : std::vector<std::pair<std::string, ProbeGenerators>>{{"probe_pbeta", ProbeGenerators::Pbeta},
                                                                                   {"probe_levi_highest", ProbeGenerators::LeviAndHighest}}) {
            auto r = form_constraint_probe(probe, g);
            j[name] = json{{"max_length", r.max_length}, {"words", r.words}, {"failures", r.failures}, {"first_failure", r.first_failure}};
        }
    }
    return j;
}

json phin_report(int k, const Rat& sp, const std::string& mode) {
    json j;
    j["k"] = k;
    j["s_p"] = rat_str(sp);
    j["mode"] = mode;
    if (mode == "polygons") {
        auto m = d_st(k, sp);
        auto r = admissibility(m);
        j["newton"] = newton_polygon(m).flipped().str();
        j["hodge"] = hodge_polygon(m).flipped().str();
        j["admissible"] = r.admissible;
        j["endpoints_equal"] = r.endpoints_equal;
        if (!r.first_violation.empty()) j["first_violation"] = r.first_violation;
    } else if (mode == "ebc") {
        j["relation_solution_dim"] = ebc_relation_solution_dim(k);
        SymMatrix b{{RFrac::var("b11"), RFrac::var("b12")}, {RFrac::var("b21"), RFrac::var("b22")}};
        j["generic_relation_holds"] = build_EBc(b, RFrac::var("c"), k, sp).phi_n_relation();
        j["commutator"] = ebc_commutator(b, k).str();
        auto cmp = ebc_compare({SymMatrix(2, 2), RFrac(0)}, {SymMatrix(2, 2), RFrac(1)}, k);
        j["compare_00_01"] = json{{"distinguished", cmp.distinguished}, {"stages", cmp.stages}};
    } else if (mode == "obstruction") {
        auto r = monodromy_obstruction(e2prime_eigenvalues(k), {0});
        j["constraints"] = r.equations;
        j["unconditional"] = r.unconditional;
        json ev = json::array();
        for (auto& e : e2prime_eigenvalues(k)) ev.push_back(e.str());
        j["eigenvalues"] = ev;
    } else if (mode == "distinct") {
        json a = json::array();
        for (auto& q : distinctness_check(k))
            a.push_back(json{{"lhs", q.lhs}, {"rhs", q.rhs}, {"equation", q.equation}, {"justification", q.justification}});
        j["inequations"] = a;
    } else {
        throw CLI::ValidationError("--mode", "unknown mode " + mode);
    }
    return j;
}

json ledger_json(const MultiplicityLedger& l) {
    json terms = json::array();
    for (auto& t : l.terms)
        terms.push_back(json{{"parabolic", parabolic_name(t.p)}, {"w", t.w.name()}, {"dim_N", t.radical_dim}, {"sign", t.sign}});
    return json{{"k", l.k},
                {"s_p", rat_str(l.s_p)},
                {"terms", terms},
                {"raw", form_str(l.raw)},
                {"reduced", form_str(l.reduced)},
                {"displayed", form_str(l.displayed)},
                {"bound_derived", l.bound_derived},
                {"conclusion", l.conclusion},
                {"discrepancies", l.discrepancies}};
}

void emit(const std::string& out, const std::string& name, const std::string& ext, const Config& cfg) {
    std::cout << out;
    std::string dir = cfg.output_dir;
    if (const char* env = std::getenv("G2FORGE_OUT_DIR")) dir = env;
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    std::ofstream(std::filesystem::path(dir) / (name + "." + ext)) << out;
}

// compare against or rewrite a golden file; true when the output is accepted
bool golden(const std::string& path, const std::string& out, bool bless) {
    if (path.empty()) return true;
    if (bless) {
        std::ofstream(path) << out;
        std::cerr << "blessed " << path << "\n";
        return true;
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "golden file missing: " << path << " (rerun with --bless)\n";
        return false;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str() != out) {
        std::cerr << "output differs from " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2forge: exact verification of G2 computations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json", config_path, golden_path;
    std::uint64_t seed = 0;
    bool bless = false;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "seed for randomized instances");
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--golden", golden_path, "compare output against this file");
    app.add_flag("--bless", bless, "rewrite the --golden file instead of comparing");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    bool coverage = false, timings = false;
    verify->add_option("--suite", suites, "restrict to these suites")->check(CLI::IsMember(suite_names()));
    verify->add_flag("--coverage", coverage, "also check the coverage manifest");
    verify->add_flag("--timings", timings, "include per-check timings in text output");
    auto* roots_cmd = app.add_subcommand("roots", "coset representatives and Eisenstein sets");
    auto* kostant_cmd = app.add_subcommand("kostant", "degree cases and Hodge-Tate weights");
    long c1 = 0, c2 = 0;
    kostant_cmd->add_option("--c1", c1)->check(CLI::NonNegativeNumber);
    kostant_cmd->add_option("--c2", c2)->check(CLI::NonNegativeNumber);
    auto* triform_cmd = app.add_subcommand("triform", "per-generator preservation of the generic form");
    std::string a_text = "a";
    triform_cmd->add_option("--a", a_text, "rational value of a, or the symbol a");
    auto* wedge_cmd = app.add_subcommand("wedge2", "exterior square computations");
    int probe = 0;
    wedge_cmd->add_option("--probe", probe, "constraint-family probe word length (0 skips)");
    auto* phin_cmd = app.add_subcommand("phin", "filtered (phi,N)-modules");
    int k = 4;
    std::string sp_text = "1", mode = "polygons";
    phin_cmd->add_option("--k", k);
    phin_cmd->add_option("--sp", sp_text);
    phin_cmd->add_option("--mode", mode)->check(CLI::IsMember({"polygons", "ebc", "obstruction", "distinct"}));
    auto* arthur_cmd = app.add_subcommand("arthur", "orbits, packets, lifts and the multiplicity ledger");
    bool orbits = false;
    int packet = 0;
    std::vector<long> lift;
    std::vector<std::string> ledger;
    arthur_cmd->add_flag("--orbits", orbits);
    arthur_cmd->add_option("--packet", packet);
    arthur_cmd->add_option("--lift", lift)->expected(2);
    arthur_cmd->add_option("--ledger", ledger)->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Config cfg = read_config(config_path);
        if (app.count("--seed")) cfg.seed = seed;
        std::string name = app.get_subcommands().front()->get_name();
        std::string out;
        int rc = 0;
        auto render = [&](const json& j) { return format == "json" ? j.dump(2) + "\n" : text_of(j); };

        if (verify->parsed()) {
            SuiteOptions opts{cfg.seed, cfg.word_length, cfg.probe_length};
            auto rep = run_verify(opts, suites.empty() ? suite_names() : suites);
            out = format == "json" ? rep.json() : rep.text(timings);
            if (rep.any_fail()) {
                rc = 1;
                for (auto& id : rep.failing_ids()) std::cerr << "failed: " << id << "\n";
            }
            if (coverage) {
                auto probs = coverage_problems(rep);
                for (auto& p : probs) std::cerr << "coverage " << p << "\n";
                if (!probs.empty()) rc = 1;
            }
        } else if (roots_cmd->parsed()) {
            out = render(roots_report());
        } else if (kostant_cmd->parsed()) {
            out = render(kostant_report(c1, c2));
        } else if (triform_cmd->parsed()) {
            bool ok = true;
            out = render(triform_report(a_text, ok));
            if (!ok) {
                rc = 1;
                std::cerr << "failed: triform.preservation\n";
            }
        } else if (wedge_cmd->parsed()) {
            out = render(wedge2_report(probe));
        } else if (phin_cmd->parsed()) {
            out = render(phin_report(k, parse_rat(sp_text), mode));
        } else if (arthur_cmd->parsed()) {
            json j;
            if (orbits) {
                json a = json::array();
                for (auto& r : orbit_table())
                    a.push_back(json{{"name", r.name}, {"dim", r.dim}, {"representative", r.representative},
                                     {"component_group", r.component_group}, {"centralizer_dim", r.centralizer},
                                     {"dim_verified", r.dim_verified}});
                j["orbits"] = a;
            }
            if (packet) {
                auto [p, m] = packet_psi_k(packet);
                auto mj = [](const PacketMember& x) {
                    return json{{"kind", x.kind == PacketKind::LanglandsQuotient ? "langlands_quotient" : "quaternionic_ds"},
                                {"harish_chandra_param", weight_json(x.harish_chandra_param)},
                                {"cohomology_degrees", x.cohomology_degrees},
                                {"cohomological_weight", weight_json(x.cohomological_weight)}};
                };
                j["packet"] = json{{"k", packet}, {"plus", mj(p)}, {"minus", mj(m)}};
            }
            if (!lift.empty()) {
                auto l = lift_inf_char(lift[0], lift[1]);
                std::vector<std::string> pr;
                for (auto& q : l.pairings) pr.push_back(rat_str(q));
                j["lift"] = json{{"c1", lift[0]}, {"c2", lift[1]}, {"coweight", l.coweight.str()}, {"k", l.k},
                                 {"pairings", pr}, {"matches_hodge_tate", l.matches_hodge_tate}};
            }
            if (!ledger.empty()) {
                int lk = std::stoi(ledger[0]);
                Rat lsp = parse_rat(ledger[1]);
                j["ledger"] = ledger_json(multiplicity_ledger(lk, lsp, default_rules(lsp)));
            }
            if (j.is_null()) throw CLI::ValidationError("arthur", "one of --orbits, --packet, --lift, --ledger is required");
            out = render(j);
        }
        emit(out, name, format == "json" ? "json" : "txt", cfg);
        if (!golden(golden_path, out, bless)) rc = 1;
        return rc;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
