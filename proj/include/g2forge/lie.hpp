#pragma once

#include "g2forge/triform.hpp"

namespace g2forge {

struct NotInSpan : AlgebraError {
    using AlgebraError::AlgebraError;
};

// The Lie algebra of G_{2,a} inside gl_7: H1, H2, then E_gamma for the six
// positive roots and the six negative roots.
struct LieG2 {
    RFrac a;
    std::vector<std::string> labels;
    std::vector<Weight> weights;   // zero for H1, H2
    std::vector<SymMatrix> basis;  // 14 matrices
    std::vector<std::string> provenance;  // how each negative root vector was obtained

    std::size_t index_of(const Weight& gamma) const;  // position of E_gamma
    const SymMatrix& e(const Weight& gamma) const { return basis[index_of(gamma)]; }
};

// E_gamma = d/dx g(gamma,x) at x = 0 for the displayed subgroups; the other
// negative root vectors are Ad(w~)E_delta for the first Weyl word that works.
LieG2 lie_basis(const RFrac& a);

SymMatrix bracket(const SymMatrix& x, const SymMatrix& y);
// coordinates in the basis; NotInSpan when x is not in the span
std::vector<RFrac> lie_coords(const LieG2& g, const SymMatrix& x);
SymMatrix lie_combine(const LieG2& g, const std::vector<RFrac>& c);

// pairs (i<j) whose bracket leaves the span; 91 pairs checked
std::size_t bracket_closure_failures(const LieG2& g);
// basis elements that fail to annihilate generic_form(a) as derivations
std::size_t derivation_failures(const LieG2& g);

// the basis with parameters substituted
LieG2 lie_subst(const LieG2& g, const Assignment& at);

// 14x14 matrix of ad(x) in the basis
SymMatrix ad_matrix(const LieG2& g, const SymMatrix& x);
// dim of the centralizer of x in g2, at the given values of the parameters
std::size_t centralizer_dim(const LieG2& g, const SymMatrix& x, const Assignment& at);

struct Sl2Triple {
    SymMatrix e, h, f;
};
// h from the Cartan with [h,e] = 2e, then f solving [e,f] = h and [h,f] = -2f
// linearly; parameters evaluated at `at`
Sl2Triple complete_sl2(const LieG2& g, const SymMatrix& e, const Assignment& at);
// dim of the common centralizer of e, h = [e,f] and f
std::size_t sl2_centralizer_dim(const LieG2& g, const SymMatrix& e, const SymMatrix& f, const Assignment& at);

// Q(zeta) with zeta^2 + zeta + 1 = 0: Laurent polynomials in z reduced to c0 + c1 z
struct ZetaNumber {
    RFrac c0, c1;
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    std::string str() const;
};
ZetaNumber reduce_zeta(const RFrac& f, const std::string& z = "z");

struct ZetaWitness {
    bool centralizes_e = false;
    bool centralizes_f = false;
    bool order_three = false;      // t^3 = 1 and t != 1
    bool w_beta_centralizes = false;
};
// beta^vee(zeta) = [zeta, zeta^-1] and w~_beta against e = E_alpha + E_{alpha+3beta},
// f = E_{-alpha} + E_{-alpha-3beta}
ZetaWitness zeta_witness(const LieG2& g);

// E_alpha + E_{alpha+3beta}
SymMatrix subregular_e(const LieG2& g);
SymMatrix subregular_f(const LieG2& g);

}  // namespace g2forge
