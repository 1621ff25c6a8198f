#pragma once

#include "g2forge/matrix.hpp"

#include <array>

namespace g2forge {

// Symbols: g66 g67 g76 g77 for the rho_3 block, p13..p25 for g'_ij = d(g) g_ij,
// g16 g17 g26 g27 for *_2 and g36..g57 for *_1.
struct ShapedElement {
    RFrac g66, g67, g76, g77;
    std::array<std::array<RFrac, 3>, 2> p;      // g'_{1j}, g'_{2j} for j = 3,4,5
    std::array<std::array<RFrac, 2>, 2> star2;  // g16 g17 / g26 g27
    std::array<std::array<RFrac, 2>, 3> star1;  // g36 g37 / g46 g47 / g56 g57

    static ShapedElement symbolic(const std::string& suffix = "");
    RFrac d() const { return g66 * g77 - g67 * g76; }
    SymMatrix rho1() const;  // (1/d) [[g66, -g67], [-g76, g77]]
    SymMatrix rho2() const;  // the displayed 3x3 block over d
    SymMatrix rho3() const;  // [[g66, g67], [g76, g77]]
    SymMatrix matrix() const;    // 7x7 block upper triangular
    SymMatrix e_block() const;   // upper left 5x5
};

// A basis of wedge^2 of an n-space, each element a combination of v_i ^ v_j.
struct WedgeTerm {
    int coeff;
    int i, j;  // 0-based positions in the underlying basis; i > j allowed
};
struct WedgeBasis {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<WedgeTerm>> elements;

    // standard pairs (i<j) in lex order
    static WedgeBasis standard(std::size_t n, const std::vector<std::string>& names);
    // (v12, v13, v23-v14, v24+v15, v25, 2v23+v14, v24-2v15, v34, v35, v45)
    static WedgeBasis five_dim();
    // on (v1, v2, v6, v7): (v2^v1, v7^v1+v2^v6, v6^v1, v7^v1-v2^v6, v7^v2, v7^v6)
    static WedgeBasis four_dim();
    // four_dim with the second and fourth elements exchanged
    static WedgeBasis four_dim_swapped();

    // columns are the elements in standard coordinates; throws NotABasis
    RatMatrix change_matrix() const;
};

struct NotABasis : AlgebraError {
    using AlgebraError::AlgebraError;
};

// matrix of wedge^2 M in the basis; M is n x n
SymMatrix wedge2_action(const SymMatrix& m, const WedgeBasis& basis);

// the four displayed functions
std::array<MPoly, 4> c_functions(const ShapedElement& s);

struct BlockComparison {
    bool match = false;
    std::vector<std::string> mismatches;  // "(5,4): displayed ... computed ..."
    SymMatrix computed;                   // d^2 times the first five columns
};
// d^2 times the displayed first five columns of wedge^2 E (10 x 5)
SymMatrix displayed_first_columns(const ShapedElement& s);
BlockComparison first_columns_report(const ShapedElement& s);

// Sym^3 of a 2x2 matrix in the basis (v6^3, v6^2 v7, -v6 v7^2, -v7^3), realized on
// symmetric tensors; signed = false drops the two minus signs
SymMatrix sym3(const SymMatrix& r, bool signed_basis = true);
// d^2 times the lower right 4x4 of the first five columns against Sym^3(rho_1 d)
bool sym3_block_matches(const ShapedElement& s, bool signed_basis = true);

struct EliminationReport {
    SymMatrix literal;             // rows c1, c2, rel1, c3, rel2, c4 over (p13, p23, p14, p24, p15, p25)
    SymMatrix transform;           // rational row operations
    SymMatrix eliminated;          // transform * literal
    SymMatrix displayed_system;    // the system as printed
    SymMatrix displayed_eliminated;
    RFrac literal_det, transform_det, eliminated_det, displayed_system_det, displayed_eliminated_det;
    RFrac expected;                // -9 d^3
    bool eliminated_matches_display = false;
    std::vector<std::string> system_row_mismatches;  // displayed rows not equal to +-literal rows
};
EliminationReport relation_elimination();

struct FourDimReport {
    SymMatrix columns;        // first two columns in the basis
    RFrac star;               // entry (1,2)
    RFrac displayed_star;     // (g67 g26 + g77 g16)/d
    bool shape_ok = false;    // columns are ((1/d, *), (0, 1), 0...)
    bool star_matches = false;
    std::vector<std::string> shape_mismatches;
    // star after imposing g77 g16 + g76 g17 + g67 g26 + g66 g27 = 0, and its ratio to displayed_star
    RFrac star_on_relation, ratio_on_relation;
};
FourDimReport four_dim_wedge_report(const WedgeBasis& basis);
FourDimReport four_dim_wedge_report();

// the three families on a matrix (1-based entries)
// g77 g17 + g67 g27, g77 g16 + g76 g17 + g67 g26 + g66 g27, g76 g16 + g66 g26
std::array<RFrac, 3> constraint_families(const SymMatrix& g);

enum class ProbeGenerators { Pbeta, LeviAndHighest };
struct ProbeReport {
    int max_length = 0;
    ProbeGenerators generators = ProbeGenerators::Pbeta;
    std::size_t words = 0;
    std::array<std::size_t, 3> failures{};
    std::array<std::string, 3> first_failure;
};
// words in the generators up to length L, fresh symbols per position, symbolic in a;
// LeviAndHighest uses torus, g(beta), g(-beta), g(2alpha+3beta), the elements with
// g13 = ... = g25 = 0
ProbeReport form_constraint_probe(int max_length, ProbeGenerators gens = ProbeGenerators::Pbeta);

}  // namespace g2forge
