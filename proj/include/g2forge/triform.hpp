#pragma once

#include "g2forge/matrix.hpp"
#include "g2forge/roots.hpp"

#include <array>

namespace g2forge {

// Alternating trilinear form on k^7 in the dual basis e_i^vee. Indices are
// 0-based throughout; labels in text output are 1-based (e147 etc).
class AltTriForm {
public:
    static constexpr std::size_t kTriples = 35;

    AltTriForm() = default;

    // antisymmetric access; repeated indices give 0
    RFrac at(int i, int j, int k) const;
    void set(int i, int j, int k, const RFrac& v);
    const RFrac& coeff(std::size_t idx) const { return c_[idx]; }
    static std::array<int, 3> triple(std::size_t idx);

    RFrac eval(const std::vector<RFrac>& u, const std::vector<RFrac>& v, const std::vector<RFrac>& w) const;
    // (u,v,w) -> F(gu, gv, gw)
    AltTriForm pullback(const SymMatrix& g) const;
    // (u,v,w) -> F(Xu,v,w) + F(u,Xv,w) + F(u,v,Xw)
    AltTriForm derivation(const SymMatrix& x) const;
    // e_i^vee -> e_{sigma(i)}^vee
    AltTriForm relabel(const std::array<int, 7>& sigma) const;
    AltTriForm subst(const Assignment& at) const;

    AltTriForm operator-(const AltTriForm& o) const;
    bool is_zero() const;
    std::size_t nonzero_count() const;
    bool operator==(const AltTriForm& o) const { return (*this - o).is_zero(); }

    std::string str() const;

private:
    std::array<RFrac, kTriples> c_;
};

// e147 + e156 + e237 - e246 + a e345
AltTriForm generic_form(const RFrac& a);
// e123 + e456 + e147 + e257 + e367
AltTriForm standard_form();

struct GenericityWitness {
    std::vector<RFrac> scaling;
    SymMatrix transform;   // pulling the standard form back along this matrix
    AltTriForm result;
    AltTriForm target;
    bool exact = false;
    std::vector<std::string> mismatches;  // e.g. "e147: a^-2 != 1"
};

// relabel by (2635)(47), then rescale coordinates e_i -> s_i e_i
GenericityWitness genericity_witness(const std::vector<RFrac>& scaling, const RFrac& target_a);
// (1, 1, a, -1/a, -a, 1/a, 1/a)
std::vector<RFrac> literal_scaling(const RFrac& a);
// (1, 1, b, -b, -b, 1/b, 1/b); reaches generic_form(b^3)
std::vector<RFrac> cube_root_scaling(const RFrac& b);

// The matrix model G_{2,a}.
// g(gamma, x) for gamma a positive root or -beta
SymMatrix root_subgroup(const Weight& gamma, const RFrac& x, const RFrac& a);
// the six positive roots followed by -beta
const std::vector<Weight>& subgroup_roots();
// [t1,t2] = diag(t1, t2, t1/t2, 1, t2/t1, 1/t2, 1/t1)
SymMatrix torus_elem(const RFrac& t1, const RFrac& t2);
// gamma([t1,t2]) = t1^(b-a) t2^(2a-b) for gamma = a alpha + b beta
RFrac torus_character(const Weight& gamma, const RFrac& t1, const RFrac& t2);
// [t] g(gamma,x) [t]^-1 == g(gamma, gamma([t]) x), symbolic in t1, t2, x, a
bool conj_relation(const Weight& gamma);

// Weyl representatives w~_alpha ('a') and w~_beta ('b'); words multiply left to right
SymMatrix weyl_rep(char letter, const RFrac& a);
SymMatrix weyl_word_matrix(const std::string& word, const RFrac& a);

// Permutations of {0..6}; p[i] is the image of i.
using Perm7 = std::array<int, 7>;
Perm7 perm_identity();
// p first, then q
Perm7 perm_then(const Perm7& p, const Perm7& q);
int perm_sign(const Perm7& p);
// canonical cycle text, 1-based, each cycle starting at its least element; "()" for 1
std::string cycle_string(const Perm7& p);
// accepts any cycle text such as "(31)(26)(57)"
Perm7 parse_cycles(const std::string& text);
// s(i) = column of the nonzero entry in row i; throws unless M is monomial
Perm7 monomial_perm(const SymMatrix& m);
Perm7 weyl_word_to_s7(const std::string& word);

struct DisplayedImage {
    std::string word;
    std::string cycles;
};
// s_alpha, s_beta and the nine displayed images
const std::vector<DisplayedImage>& displayed_s7_images();

struct S7Comparison {
    std::string word;
    std::string displayed;
    std::string computed;
    bool match = false;
    int displayed_sign = 0;
    int computed_sign = 0;
};
std::vector<S7Comparison> compare_s7_images();
// pairs (w, w') with s(ww') != s(w) then s(w'); 144 pairs checked
std::size_t s7_homomorphism_failures();
bool s7_injective();

// preserves the blocks {1,2}, {3,4,5}, {6,7}
bool in_W232(const Perm7& p);
// block upper triangular for the (2,3,2) partition
bool in_P232(const SymMatrix& m);

struct BruhatReport {
    std::vector<std::string> intersection;  // Weyl elements whose images lie in W232
    bool generators_in_P232 = false;
    std::vector<std::string> reps_in_P232;   // w~ with w~ in P232, must equal the intersection
};
BruhatReport bruhat_disjointness_check();

// the two relations on h, 1-based entries
// 2 h22 h13 - 2 h12 h23 + h21 h14 - h11 h24, h22 h14 - h12 h24 - 2 h21 h15 + 2 h11 h25
std::array<RFrac, 2> relation_values(const SymMatrix& h);
bool coeff_relations(const SymMatrix& h);

// g(alpha,x1) g(alpha+beta,x2) g(alpha+2beta,x3) g(alpha+3beta,x4) g(2alpha+3beta,x5)
SymMatrix unipotent_product(const RFrac& a);

struct WordSearchReport {
    int max_length = 0;
    std::size_t words = 0;
    std::size_t failures = 0;
    std::string first_failure;
};
// all products of P_{beta,a} generators (torus, g(-beta), six positive g) of
// length <= L with fresh symbols in every position, symbolic in a
WordSearchReport relation_word_search(int max_length);

// generator of kind k in position pos with fresh symbols; 0 torus, 1 g(-beta), 2..7 positive roots
SymMatrix pbeta_generator(int kind, int pos, const RFrac& a);
std::string pbeta_generator_name(int kind);
constexpr int kPbetaGeneratorKinds = 8;

}  // namespace g2forge
