#pragma once

#include "g2forge/matrix.hpp"
#include "g2forge/roots.hpp"

#include <array>

namespace g2forge {

// (-alpha-2beta, -alpha-beta, -beta, 0, beta, alpha+beta, alpha+2beta)
const std::vector<Weight>& r7_basis();

bool is_dominant(const Weight& l);
bool is_levi_dominant(Parabolic p, const Weight& l);
// prod over positive roots of <l+rho, g^vee>/<rho, g^vee>; throws unless l is dominant integral
Rat weyl_dim(const Weight& l);

// Block form of R7 restricted to the Levi with simple root g in {alpha, beta}.
// std^vee is written as J (A^-1)^T J with J the 2x2 antidiagonal, and Ad as
// Sym^2(A)/det(A) in the basis (v6^2, 2 v6 v7, -v7^2).
SymMatrix levi_embed(const Weight& g, const SymMatrix& a);
SymMatrix std_dual(const SymMatrix& a);
SymMatrix adjoint_block(const SymMatrix& a);

enum class KostantSign { Dot, Negated };

struct KostantPiece {
    WeylElement w;
    std::size_t degree;
    Weight levi_highest_weight;  // w(l+rho)-rho
    Weight reported;              // as above, or -w(l+rho) under the negated convention
};

std::vector<KostantPiece> kostant_pieces(Parabolic p, const Weight& l, KostantSign sign = KostantSign::Dot);

struct DegreeCase {
    int i;        // cohomological degree
    WeylElement w;
    MPoly k;      // weight of the cusp form, in c1, c2
    MPoly s;      // induction parameter, in c1, c2
    PWeight neg_inf_char;  // -w(l+rho)
};

// Cases of the P_alpha analysis for l = c1(2a+3b) + c2(a+2b), derived from the
// Weyl action: the a_P part of -w(l+rho) must be 10s(alpha+2beta)/2 with s >= 0
// and the Levi part +-(k-1)alpha/2.
std::vector<DegreeCase> degree_cases_alpha();
std::vector<DegreeCase> degree_cases_alpha(long c1, long c2);

// the two displayed septuples
std::array<long, 7> lift_weights(long c1, long c2);
std::array<long, 7> hodge_tate_weights(long c1, long c2);
// <mu, iota(l+rho)> over the R7 weights in descending order, with iota swapping
// alpha <-> beta^vee and beta <-> alpha^vee
std::array<Rat, 7> hodge_tate_by_pairing(long c1, long c2);

}  // namespace g2forge
