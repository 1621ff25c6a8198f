#include "g2forge/arthur.hpp"

#include "g2forge/kostant.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2forge {

SymMatrix orbit_representative(const LieG2& g, const std::string& name) {
    using namespace roots;
    if (name == "O_0") return SymMatrix(7, 7);
    if (name == "O_l") return g.e(alpha());
    if (name == "O_s") return g.e(beta());
    if (name == "O_sr") return subregular_e(g);
    if (name == "O_r") return g.e(alpha()) + g.e(beta());
    throw std::invalid_argument("unknown orbit " + name);
}

std::vector<OrbitRecord> orbit_table() {
    std::vector<OrbitRecord> out = {
        {"O_0", 0, "0", "1"},
        {"O_l", 6, "E_alpha", "Z/2"},
        {"O_s", 8, "E_beta", "Z/2"},
        {"O_sr", 10, "E_alpha + E_alpha+3beta", "S3"},
        {"O_r", 12, "E_alpha + E_beta", "trivial"},
    };
    LieG2 g = lie_basis(RFrac(1));
    for (auto& r : out) {
        r.centralizer = centralizer_dim(g, orbit_representative(g, r.name), {});
        r.dim_verified = r.dim + r.centralizer == g.basis.size();
    }
    return out;
}

Weight lambda_k(int k) { return lambda0(Rat(k)); }

std::pair<PacketMember, PacketMember> packet_psi_k(int k) {
    if (k == 2)
        throw std::invalid_argument("k = 2: the packets for psi_2 have irregular infinitesimal character");
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("packet_psi_k needs even k >= 4");
    Weight lk = lambda_k(k);
    Weight hc = lk + roots::rho();
    PacketMember plus{PacketKind::LanglandsQuotient, hc, {3, 5}, lk};
    PacketMember minus{PacketKind::QuaternionicDS, hc, {4}, lk};
    return {plus, minus};
}

Rat Coweight::pair(const Weight& w) const { return a * w.pair(roots::alpha()) + b * w.pair(roots::beta()); }

std::string Coweight::str() const { return rat_str(a) + " alpha^vee + " + rat_str(b) + " beta^vee"; }

LiftData lift_inf_char(long c1, long c2) {
    if (c1 <= 0 || c2 <= 0) throw std::invalid_argument("lift_inf_char needs c1, c2 > 0");
    LiftData out;
    out.coweight = {Rat(3 * c1 + 2 * c2 + 5), Rat(2 * c1 + c2 + 3)};
    out.k = {2 * (2 * c1 + c2 + 3) + 1, 2 * (c1 + c2 + 2) + 1, 2 * (c1 + 1) + 1};
    std::vector<Rat> vals;
    for (auto& mu : r7_basis()) vals.push_back(out.coweight.pair(mu));
    std::sort(vals.begin(), vals.end(), [](const Rat& x, const Rat& y) { return x > y; });
    std::copy(vals.begin(), vals.end(), out.pairings.begin());
    auto ht = hodge_tate_weights(c1, c2);
    out.matches_hodge_tate = true;
    for (std::size_t i = 0; i < 7; ++i)
        if (out.pairings[i] != ht[i]) out.matches_hodge_tate = false;
    return out;
}

int multiplicity_sign(const std::map<std::string, int>& eps_choices, int global_eps) {
    if (global_eps != 1 && global_eps != -1) throw std::invalid_argument("global sign must be +-1");
    int prod = 1;
    for (auto& [place, e] : eps_choices) {
        if (e != 1 && e != -1) throw std::invalid_argument("choice at " + place + " must be +-1");
        prod *= e;
    }
    return prod == global_eps ? 1 : 0;
}

std::string MultSymbol::str() const {
    if (kind == "cl") return "m^cl(" + rep + ")";
    if (kind == "dag") return "m^dag(" + rep + ")";
    if (kind == "dag0") return "m^dag_0(" + rep + ")";
    return "m^dag_{" + kind.substr(4) + "}(" + rep + ")";
}

MultSymbol mult_cl(const std::string& rep) { return {"cl", rep}; }
MultSymbol mult_dag(const std::string& rep) { return {"dag", rep}; }
MultSymbol mult_cusp(const std::string& rep) { return {"dag0", rep}; }

MultSymbol mult_eis(Parabolic p, const WeylElement& w, const std::string& rep) {
    std::string m = p == Parabolic::Palpha ? "M_alpha" : p == Parabolic::Pbeta ? "M_beta" : "T";
    return {"dag," + m + "," + w.name(), rep};
}

std::string form_str(const LinearForm& f) {
    std::string s;
    for (auto& [x, c] : f) {
        if (c == 0) continue;
        std::string mag = abs(c) == 1 ? "" : rat_str(abs(c)) + "*";
        if (s.empty())
            s = (c < 0 ? "-" : "") + mag + x.str();
        else
            s += (c < 0 ? " - " : " + ") + mag + x.str();
    }
    return s.empty() ? "0" : s;
}

namespace {

void add(LinearForm& f, const MultSymbol& x, const Rat& c) {
    Rat& slot = f[x];
    slot += c;
    if (slot == 0) f.erase(x);
}

LinearForm combine(const LinearForm& f, const LinearForm& g, const Rat& c) {
    LinearForm out = f;
    for (auto& [x, v] : g) add(out, x, c * v);
    return out;
}

// m^dag(rep) = m^dag_0(rep) + sum of signed Eisenstein terms
LinearForm cuspidal_decomposition(const std::string& rep, const std::vector<LedgerTerm>& terms) {
    LinearForm f;
    add(f, mult_cusp(rep), 1);
    for (auto& t : terms) add(f, mult_eis(t.p, t.w, rep), t.sign);
    return f;
}

}  // namespace

std::vector<VanishingRule> default_rules(const Rat& s_p) {
    using VR = VanishingRule;
    auto w = [](const char* word) { return WeylElement::from_word(word); };
    auto A = Parabolic::Palpha, Bt = Parabolic::Pbeta, T = Parabolic::B;
    std::vector<VR> r;
    r.push_back({VR::LowerBound, mult_cl("Pi"), {}, 2, "classical: Eisenstein part >= 1 and cuspidal part >= 1"});
    r.push_back({VR::Zero, mult_eis(T, w(""), "Pi"), {}, 0, "T-multiplicities are classical and differ from Pi"});
    r.push_back({VR::Zero, mult_eis(T, w(""), "Piw"), {}, 0, "T-multiplicities are classical and differ from Piw"});
    r.push_back({VR::Equal, mult_eis(Bt, w(""), "Pi"), mult_eis(Bt, w(""), "Piw"), 0,
                 "M_beta, w = 1: the two multiplicities cancel"});
    for (const char* x : {"a", "ab"})
        for (const char* rep : {"Pi", "Piw"})
            r.push_back({VR::Zero, mult_eis(Bt, w(x), rep), {}, 0, "M_beta slope is not a multiple of w^-1 beta"});
    for (const char* x : {"", "b", "ba"})
        r.push_back({VR::Zero, mult_eis(A, w(x), "Pi"), {}, 0, "slope of Pi is not a multiple of a long root"});
    std::string why = s_p == 0 ? "s_p = 0: a weight below k would force F = F'"
                               : "s_p != 0: slope of Piw is not a multiple of w^-1 alpha";
    for (const char* x : {"", "b"}) r.push_back({VR::Zero, mult_eis(A, w(x), "Piw"), {}, 0, why});
    return r;
}

MultiplicityLedger multiplicity_ledger(int k, const Rat& s_p, const std::vector<VanishingRule>& rules) {
    if (!(Rat(k) > 4 * s_p + 4)) throw std::invalid_argument("multiplicity_ledger needs k > 4 s_p + 4");
    MultiplicityLedger out;
    out.k = k;
    out.s_p = s_p;
    for (Parabolic p : {Parabolic::Palpha, Parabolic::Pbeta, Parabolic::B})
        for (auto& w : eis_set(p)) {
            std::size_t n = radical_dim(p);
            int sign = (n - w.length()) % 2 == 0 ? 1 : -1;
            out.terms.push_back({p, w, n, sign});
        }

    // the twisted representation enters with weight w_beta*lambda_0, which the second
    // decomposition writes as lambda_0 - beta
    Weight l0 = lambda0(Rat(k));
    if (dot_act(WeylElement::from_word("b"), l0) != l0 - roots::beta())
        throw AlgebraError("w_beta*lambda_0 != lambda_0 - beta; the decompositions do not chain");

    // m^cl(Pi) = m^dag(Pi) - m^dag(Piw), then expand both m^dag and solve for m^dag_0(Pi)
    LinearForm cl_eq;  // 0 = -m^cl(Pi) + m^dag(Pi) - m^dag(Piw)
    add(cl_eq, mult_cl("Pi"), -1);
    cl_eq = combine(cl_eq, cuspidal_decomposition("Pi", out.terms), 1);
    cl_eq = combine(cl_eq, cuspidal_decomposition("Piw", out.terms), -1);
    // 0 = m^dag_0(Pi) + rest, so m^dag_0(Pi) = -rest
    for (auto& [x, c] : cl_eq)
        if (!(x == mult_cusp("Pi"))) add(out.raw, x, -c);

    // rules
    std::map<MultSymbol, MultSymbol> alias;
    std::set<MultSymbol> zero;
    std::map<MultSymbol, Rat> bound;
    auto known = [&](const MultSymbol& x) { return out.raw.count(x) > 0; };
    auto resolve = [&](MultSymbol x) {
        for (std::size_t i = 0; i <= alias.size() && alias.count(x); ++i) x = alias.at(x);
        return x;
    };
    for (auto& r : rules) {
        if (!known(r.x) || (r.kind == VanishingRule::Equal && !known(r.y)))
            throw AlgebraError("rule on a symbol absent from the ledger: " + r.x.str());
        if (r.kind == VanishingRule::Zero) zero.insert(r.x);
        if (r.kind == VanishingRule::Equal) {
            if (resolve(r.y) == resolve(r.x)) continue;
            alias[resolve(r.x)] = resolve(r.y);
        }
        if (r.kind == VanishingRule::LowerBound) bound[r.x] = std::max(bound.count(r.x) ? bound[r.x] : r.bound, r.bound);
    }
    for (auto z : std::set<MultSymbol>(zero)) zero.insert(resolve(z));
    for (auto& [x, b] : bound)
        if (b > 0 && (zero.count(x) || zero.count(resolve(x))))
            throw AlgebraError("inconsistent rules: " + x.str() + " is zero and >= " + rat_str(b));
    for (auto& [x, c] : out.raw) {
        if (zero.count(x)) continue;
        MultSymbol y = resolve(x);
        if (zero.count(y)) continue;
        add(out.reduced, y, c);
    }

    // every multiplicity except m^cl(Pi) is nonnegative; m^cl(Pi) only has its rule bound
    std::vector<std::string> negative;
    Rat lb = 0;
    for (auto& [x, c] : out.reduced) {
        Rat b = bound.count(x) ? bound[x] : Rat(0);
        bool has_lower = x.kind != "cl" || bound.count(x);
        if (c > 0 && has_lower)
            lb += c * b;
        else
            negative.push_back(form_str({{x, c}}));
    }
    if (negative.empty()) {
        out.bound_derived = true;
        out.lower_bound = lb;
        out.conclusion = "m^dag_0(Pi) >= " + rat_str(lb);
    } else {
        std::string s;
        for (auto& n : negative) s += (s.empty() ? "" : ", ") + n;
        out.conclusion = "no lower bound derivable: unbounded terms " + s;
    }

    add(out.displayed, mult_cl("Pi"), 1);
    add(out.displayed, mult_cusp("Piw"), 1);
    add(out.displayed, mult_eis(Parabolic::Palpha, WeylElement::from_word("ba"), "Piw"), 1);
    std::set<MultSymbol> all;
    for (auto& [x, c] : out.reduced) all.insert(x);
    for (auto& [x, c] : out.displayed) all.insert(x);
    for (auto& x : all) {
        Rat got = out.reduced.count(x) ? out.reduced.at(x) : Rat(0);
        Rat shown = out.displayed.count(x) ? out.displayed.at(x) : Rat(0);
        if (got != shown)
            out.discrepancies.push_back(x.str() + ": derived coefficient " + rat_str(got) + ", displayed " + rat_str(shown));
    }
    return out;
}

PWeight levi_dot_act(Parabolic p, const WeylElement& w, const PWeight& l) {
    PWeight r = rho_levi(p);
    return weyl_act(w, l + r) - r;
}

std::vector<DotIdentity> dot_identities() {
    using roots::alpha;
    using roots::beta;
    MPoly k = MPoly::var("k");
    auto lin = [&](long c, long d, long den) { return (k.scaled(c) + MPoly(Rat(d))).scaled(rat(1, den)); };
    PWeight hl(Weight(2, 3)), a2b(Weight(1, 2)), al(alpha()), be(beta());
    auto mul = [](const MPoly& s, const PWeight& w) { return PWeight(s * w.a, s * w.b); };
    PWeight l0 = mul(lin(1, -4, 2), hl);
    auto w = [](const char* x) { return WeylElement::from_word(x); };
    PWeight two_rho_a = two_rho(Parabolic::Palpha), two_rho_b = two_rho(Parabolic::Pbeta);

    std::vector<DotIdentity> out;
    auto push = [&](const std::string& name, const PWeight& c, const PWeight& d) { out.push_back({name, c, d, c == d}); };

    // lambda_0 solved from the slope relation with v_p(chi(p)) = s_p - (k-1)/2
    MPoly sp = MPoly::var("s_p");
    PWeight slope = mul(sp, hl) + be;
    PWeight solved = slope - mul(sp - lin(1, -1, 2), hl) - PWeight(Weight(3, rat(11, 2)));
    push("lambda_0 from the slope of Pi", solved, mul(lin(1, -4, 2), PWeight(Weight(2, -3))));
    push("w_beta*lambda_0", dot_act(w("b"), l0), l0 - be);
    PWeight wab = dot_act(w("ab"), l0) + two_rho_b;
    push("w_ab*lambda_0 + 2rho_Pbeta", wab, mul(lin(3, -4, 4), be) + mul(lin(1, 4, 4), hl));
    push("w_ab*lambda_0 + 2rho_Pbeta, expanded", wab,
         mul(lin(1, -4, 2), PWeight(Weight(1, 3))) - PWeight(Weight(2, 1)) + hl.scaled(3));
    PWeight crit = PWeight(Weight(2, 4)) - wab + levi_dot_act(Parabolic::Pbeta, w("b"), wab);
    push("M_beta criticality of 2(alpha+2beta) at w_ab*lambda_0 + 2rho_Pbeta", crit, hl - mul(lin(3, -4, 2), be));
    PWeight shifted = l0 - be + two_rho_b;
    push("w_beta acting on lambda_0 - beta + 2rho_Pbeta", levi_dot_act(Parabolic::Pbeta, w("b"), shifted), l0 + two_rho_b);
    push("lambda_0 - w_beta*lambda_0", l0 - dot_act(w("b"), l0), be);
    push("shift of lambda_0 - beta + 2rho_Pbeta under w_beta", shifted - levi_dot_act(Parabolic::Pbeta, w("b"), shifted), be);
    push("lambda_0 - beta + 2rho_Palpha", l0 - be + two_rho_a, mul(lin(1, -2, 4), al) + mul(lin(3, 16, 4), a2b));
    push("w_beta*(lambda_0 - beta) + 2rho_Palpha", dot_act(w("b"), l0 - be) + two_rho_a,
         mul(lin(1, -4, 4), al) + mul(lin(3, 18, 4), a2b));
    return out;
}

}  // namespace g2forge
