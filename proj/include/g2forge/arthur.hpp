#pragma once

#include "g2forge/lie.hpp"
#include "g2forge/roots.hpp"

#include <map>
#include <tuple>

namespace g2forge {

struct OrbitRecord {
    std::string name;             // O_0, O_l, O_s, O_sr, O_r
    std::size_t dim = 0;
    std::string representative;   // "0", "E_alpha", ...
    std::string component_group;  // "1", "Z/2", "S3"
    std::size_t centralizer = 0;  // computed at a = 1
    bool dim_verified = false;    // dim == 14 - centralizer
};
std::vector<OrbitRecord> orbit_table();
// representative of a record in the given Lie algebra
SymMatrix orbit_representative(const LieG2& g, const std::string& name);

enum class PacketKind { LanglandsQuotient, QuaternionicDS };
struct PacketMember {
    PacketKind kind;
    Weight harish_chandra_param;
    std::vector<int> cohomology_degrees;
    Weight cohomological_weight;  // lambda_k
};
// k even >= 4; k = 2 has irregular infinitesimal character
std::pair<PacketMember, PacketMember> packet_psi_k(int k);
// ((k-4)/2)(2alpha+3beta)
Weight lambda_k(int k);

// coefficients of alpha^vee and beta^vee
struct Coweight {
    Rat a, b;
    Rat pair(const Weight& w) const;  // <w, a alpha^vee + b beta^vee>
    std::string str() const;
};
struct LiftData {
    Coweight coweight;
    std::array<long, 3> k;
    std::array<Rat, 7> pairings;  // against r7_basis, descending
    bool matches_hodge_tate = false;
};
// c1, c2 > 0
LiftData lift_inf_char(long c1, long c2);

// 1 iff the product of the choices equals global_eps; entries must be +-1
int multiplicity_sign(const std::map<std::string, int>& eps_choices, int global_eps);

// Formal multiplicity symbols. rep is "Pi" (weight lambda_0) or "Piw" (the w_beta
// twist, weight lambda_0 - beta); kind is "cl", "dag", "dag0" or "dag,M,w".
struct MultSymbol {
    std::string kind, rep;
    std::string str() const;  // "m^dag_{M_alpha,w_ba}(Piw)"
    bool operator<(const MultSymbol& o) const { return std::tie(kind, rep) < std::tie(o.kind, o.rep); }
    bool operator==(const MultSymbol& o) const { return kind == o.kind && rep == o.rep; }
};
MultSymbol mult_cl(const std::string& rep);
MultSymbol mult_dag(const std::string& rep);
MultSymbol mult_cusp(const std::string& rep);
MultSymbol mult_eis(Parabolic p, const WeylElement& w, const std::string& rep);

using LinearForm = std::map<MultSymbol, Rat>;
std::string form_str(const LinearForm& f);

struct VanishingRule {
    enum Kind { Zero, Equal, LowerBound } kind = Zero;
    MultSymbol x, y;  // Equal: x = y
    Rat bound;        // LowerBound: x >= bound
    std::string justification;
};
// the outcomes of the lemmas on T-, beta- and alpha-multiplicities plus classical >= 2
std::vector<VanishingRule> default_rules(const Rat& s_p);

struct LedgerTerm {
    Parabolic p;
    WeylElement w;
    std::size_t radical_dim = 0;
    int sign = 0;  // (-1)^(dim N_P - l(w))
};
struct MultiplicityLedger {
    int k = 0;
    Rat s_p;
    std::vector<LedgerTerm> terms;
    LinearForm raw;         // m^dag_0(Pi) = raw, before the rules
    LinearForm reduced;     // after the rules
    bool bound_derived = false;
    Rat lower_bound;
    std::string conclusion;  // "m^dag_0(Pi) >= 2" or "no lower bound derivable: ..."
    LinearForm displayed;    // the final formula as printed, solved for m^dag_0(Pi)
    std::vector<std::string> discrepancies;
};
// k > 4 s_p + 4; AlgebraError on inconsistent rules
MultiplicityLedger multiplicity_ledger(int k, const Rat& s_p, const std::vector<VanishingRule>& rules);

// dot-action identities of the multiplicity lemmas, exact in k
struct DotIdentity {
    std::string name;
    PWeight computed, displayed;
    bool matches = false;
};
std::vector<DotIdentity> dot_identities();

// M_beta dot action w(l + rho_M) - rho_M
PWeight levi_dot_act(Parabolic p, const WeylElement& w, const PWeight& l);

}  // namespace g2forge
