#pragma once

#include "g2forge/matrix.hpp"
#include "g2forge/valued.hpp"

#include <optional>

namespace g2forge {

// Fil^i = span(basis) for from <= i < next step's from. The first step is the
// whole space and the last one is zero.
struct FilStep {
    int from = 0;
    SymMatrix basis;  // columns; 0 columns for the zero space
};

// Filtered (phi,N)-module over Q(p, ahat), geometric Frobenius. phi is
// diagonalized by `eigenvectors` (columns) with `eigenvalues`; ahat has
// valuation s_p.
struct PhiNModule {
    std::size_t dim = 0;
    SymMatrix phi, n_op;
    std::vector<FilStep> fil;
    std::vector<ValuedScalar> eigenvalues;
    SymMatrix eigenvectors;
    Rat s_p;

    // checks shapes, phi P = P diag(eigenvalues), N nilpotent, filtration nested
    void validate() const;
    std::vector<int> fil_jumps() const;  // sorted, with multiplicity
    bool phi_n_relation() const;         // phi^-1 N phi == p N
};

struct Polygon {
    std::vector<std::pair<int, Rat>> vertices;  // starts at (0,0), slopes nondecreasing
    Rat end_y() const { return vertices.back().second; }
    int end_x() const { return vertices.back().first; }
    Polygon flipped() const;  // y -> -y for display
    std::string str() const;
};

// stored on or below the axis: Newton from the valuations, Hodge from -jumps
Polygon newton_polygon(const PhiNModule& m);
Polygon hodge_polygon(const PhiNModule& m);

// t_N = -(sum of valuations), t_H = sum of induced jumps, on span of eigenvectors `subset`
Rat t_newton(const PhiNModule& m, const std::vector<std::size_t>& subset);
Rat t_hodge(const PhiNModule& m, const std::vector<std::size_t>& subset);

struct AdmissibilityReport {
    bool admissible = false;
    bool endpoints_equal = false;
    std::size_t stable_subspaces = 0;
    std::string first_violation;  // e.g. "{v2}: t_N = 1 < t_H = 2"
};
// eigenvalues must be pairwise distinct; AlgebraError otherwise
AdmissibilityReport admissibility(const PhiNModule& m);
bool is_admissible(const PhiNModule& m);

PhiNModule direct_sum(const PhiNModule& x, const PhiNModule& y);
PhiNModule tensor(const PhiNModule& x, const PhiNModule& y);

// D_st(rho_F): eigenvalues ahat^-1 and p^-(k-1) ahat on e1, e2; basis w = e1 + e2,
// w' = e2; Fil^i = span(w) for 1 <= i <= k-1
PhiNModule d_st(int k, const Rat& s_p);
// phi of D_st in the basis (w, w')
SymMatrix dst_phi_matrix(int k, const RFrac& ahat);
// rank-2 module with given valuations of p-powers, trivial unit, jumps {0, k-1} on a generic line
PhiNModule rank_two_module(const Rat& v1, const Rat& v2, int k);
PhiNModule rank_one_module(const Rat& valuation, int jump);

// E(B,c): phi = diag(p^-1 A, A), N = ((0,B),(0,0)), filtration with jumps {0,1,k-1,k}
PhiNModule build_EBc(const SymMatrix& b, const RFrac& c, int k, const Rat& s_p);
// A B - B A for the A of D_st; zero iff E(B,c) satisfies the (phi,N) relation
SymMatrix ebc_commutator(const SymMatrix& b, int k);
// dimension over Q(p, ahat) of {B : A B = B A}
std::size_t ebc_relation_solution_dim(int k);

// det(x I - M) in the symbol x
RFrac char_poly(const SymMatrix& m, const std::string& x = "x");

struct EbcPair {
    SymMatrix b;
    RFrac c;
};
struct EbcComparison {
    bool distinguished = false;
    // after each of Fil, phi, N: the forced values of m11 m12 m21 m22 or "inconsistent"
    std::vector<std::string> stages;
};
// psi(v1) = v1', psi(v2) = v2', psi(v3) = m11 v1' + m12 v2' + v3', psi(v4) = m21 v1' + m22 v2' + v4'.
// With ahat given (a function of p), the four Frobenius inverses must be distinct;
// AlgebraError naming the violated equation otherwise.
EbcComparison ebc_compare(const EbcPair& x, const EbcPair& y, int k, const std::optional<RFrac>& ahat = std::nullopt);
bool ebc_distinguish(const EbcPair& x, const EbcPair& y, int k, const std::optional<RFrac>& ahat = std::nullopt);

// lambda_i = p lambda_j in normal form
struct PairConstraint {
    std::size_t i = 0, j = 0;
    enum Kind { Always, Never, Equation } kind = Equation;
    int n = 0;   // ahat^n = p^m with n > 0
    Rat m;
    std::string str() const;  // "ahat^3 = p^(5/2)", "always", "p = 1"
};
struct ObstructionReport {
    std::vector<PairConstraint> pairs;
    std::vector<std::string> equations;  // distinct conditional equations, sorted
    bool unconditional = false;          // some pair holds for every ahat
};
// every ordered pair (i,j), i != j
ObstructionReport monodromy_obstruction(const std::vector<ValuedScalar>& eigenvalues);
// pairs (quotient i, sub j) of an extension 0 -> sub -> E -> quotient -> 0
ObstructionReport monodromy_obstruction(const std::vector<ValuedScalar>& eigenvalues,
                                        const std::vector<std::size_t>& sub);
// ahat^n = p^m is impossible for a Weil number of weight (k-1)/2 unless m = n (k-1)/2
bool weil_excluded(const PairConstraint& c, int k);

// the Frobenius eigenvalues of E'' and of the seven-term list, for even k
std::vector<ValuedScalar> e2prime_eigenvalues(int k);
std::vector<ValuedScalar> b_list_eigenvalues(int k);
// the four displayed constraints for E''
std::vector<std::string> e2prime_displayed_constraints(int k);

// span of a^2 w11 + 2ab w12 + b^2 w22 meets span(w11, w12) only in 0
bool sym2_fil0_test(const RFrac& a, const RFrac& b);

struct Inequation {
    std::string lhs, rhs;
    std::string equation;       // the excluded equality in ahat^n = p^m form
    std::string justification;  // "trivial", "assumption" or "valuation bound"
};
// the six pairs among ahat, p^(k-1) ahat^-1, p ahat, p^k ahat^-1
std::vector<Inequation> distinctness_check(int k);

}  // namespace g2forge
