#include "g2forge/lattice.hpp"

#include "g2forge/triform.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace g2forge {

namespace {

RFrac v(const std::string& name) { return RFrac::var(name); }

std::size_t pair_index(std::size_t n, int i, int j) {
    // position of (i,j), i<j, among the lex ordered pairs
    std::size_t k = 0;
    for (int a = 0; a < i; ++a) k += n - 1 - static_cast<std::size_t>(a);
    return k + static_cast<std::size_t>(j - i - 1);
}

SymMatrix from_rat(const RatMatrix& m) {
    SymMatrix s(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) s(i, j) = RFrac(m[i][j]);
    return s;
}

std::string row_str(const SymMatrix& m, std::size_t i) {
    std::string s = "(";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
    return s + ")";
}

// the three families on the entries g16 g17 g26 g27 g66 g67 g76 g77
std::array<RFrac, 3> families(const RFrac& g16, const RFrac& g17, const RFrac& g26, const RFrac& g27,
                              const RFrac& g66, const RFrac& g67, const RFrac& g76, const RFrac& g77) {
    return {g77 * g17 + g67 * g27, g77 * g16 + g76 * g17 + g67 * g26 + g66 * g27, g76 * g16 + g66 * g26};
}

}  // namespace

ShapedElement ShapedElement::symbolic(const std::string& suffix) {
    ShapedElement s;
    s.g66 = v("g66" + suffix), s.g67 = v("g67" + suffix), s.g76 = v("g76" + suffix), s.g77 = v("g77" + suffix);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) s.p[i][j] = v("p" + std::to_string(i + 1) + std::to_string(j + 3) + suffix);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s.star2[i][j] = v("g" + std::to_string(i + 1) + std::to_string(j + 6) + suffix);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) s.star1[i][j] = v("g" + std::to_string(i + 3) + std::to_string(j + 6) + suffix);
    return s;
}

SymMatrix ShapedElement::rho1() const {
    RFrac di = d().inv();
    return SymMatrix{{g66 * di, -g67 * di}, {-g76 * di, g77 * di}};
}

SymMatrix ShapedElement::rho2() const {
    RFrac di = d().inv();
    SymMatrix m{{g66 * g66, RFrac(2) * g66 * g67, -g67 * g67},
                {g66 * g76, g66 * g77 + g67 * g76, -g67 * g77},
                {-g76 * g76, RFrac(-2) * g76 * g77, g77 * g77}};
    return m.scaled(di);
}

SymMatrix ShapedElement::rho3() const { return SymMatrix{{g66, g67}, {g76, g77}}; }

SymMatrix ShapedElement::matrix() const {
    SymMatrix m(7, 7);
    SymMatrix r1 = rho1(), r2 = rho2(), r3 = rho3();
    RFrac di = d().inv();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = r1(i, j), m(5 + i, 5 + j) = r3(i, j), m(i, 5 + j) = star2[i][j];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m(i, 2 + j) = p[i][j] * di;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m(2 + i, 2 + j) = r2(i, j);
        for (int j = 0; j < 2; ++j) m(2 + i, 5 + j) = star1[i][j];
    }
    return m;
}

SymMatrix ShapedElement::e_block() const { return matrix().block(0, 0, 5, 5); }

WedgeBasis WedgeBasis::standard(std::size_t n, const std::vector<std::string>& names) {
    if (names.size() != n) throw std::invalid_argument("one name per basis vector");
    WedgeBasis b;
    b.n = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            b.labels.push_back(names[i] + "^" + names[j]);
            b.elements.push_back({{1, static_cast<int>(i), static_cast<int>(j)}});
        }
    return b;
}

WedgeBasis WedgeBasis::five_dim() {
    WedgeBasis b;
    b.n = 5;
    b.labels = {"v12", "v13", "v23-v14", "v24+v15", "v25", "2v23+v14", "v24-2v15", "v34", "v35", "v45"};
    b.elements = {{{1, 0, 1}},
                  {{1, 0, 2}},
                  {{1, 1, 2}, {-1, 0, 3}},
                  {{1, 1, 3}, {1, 0, 4}},
                  {{1, 1, 4}},
                  {{2, 1, 2}, {1, 0, 3}},
                  {{1, 1, 3}, {-2, 0, 4}},
                  {{1, 2, 3}},
                  {{1, 2, 4}},
                  {{1, 3, 4}}};
    return b;
}

WedgeBasis WedgeBasis::four_dim() {
    // underlying order v1, v2, v6, v7
    WedgeBasis b;
    b.n = 4;
    b.labels = {"v2^v1", "v7^v1+v2^v6", "v6^v1", "v7^v1-v2^v6", "v7^v2", "v7^v6"};
    b.elements = {{{1, 1, 0}},
                  {{1, 3, 0}, {1, 1, 2}},
                  {{1, 2, 0}},
                  {{1, 3, 0}, {-1, 1, 2}},
                  {{1, 3, 1}},
                  {{1, 3, 2}}};
    return b;
}

WedgeBasis WedgeBasis::four_dim_swapped() {
    WedgeBasis b = four_dim();
    std::swap(b.labels[1], b.labels[3]);
    std::swap(b.elements[1], b.elements[3]);
    return b;
}

RatMatrix WedgeBasis::change_matrix() const {
    std::size_t big = n * (n - 1) / 2;
    if (elements.size() != big)
        throw NotABasis("wedge^2 of a " + std::to_string(n) + "-space needs " + std::to_string(big) + " elements, got " +
                        std::to_string(elements.size()));
    RatMatrix c(big, std::vector<Rat>(big));
    for (std::size_t k = 0; k < big; ++k)
        for (auto& t : elements[k]) {
            if (t.i == t.j || t.i < 0 || t.j < 0 || t.i >= static_cast<int>(n) || t.j >= static_cast<int>(n))
                throw NotABasis("bad wedge term in element " + std::to_string(k + 1));
            if (t.i < t.j)
                c[pair_index(n, t.i, t.j)][k] += t.coeff;
            else
                c[pair_index(n, t.j, t.i)][k] -= t.coeff;
        }
    if (mat_rank(c) < big) {
        auto ker = mat_kernel(c);
        std::string comb;
        for (std::size_t k = 0; k < big; ++k) {
            const Rat& q = ker.front()[k];
            if (q == 0) continue;
            std::string lab = k < labels.size() ? labels[k] : "b" + std::to_string(k + 1);
            comb += (comb.empty() ? "" : " + ") + std::string("(") + rat_str(q) + ")*[" + lab + "]";
        }
        throw NotABasis("elements are dependent: " + comb + " = 0");
    }
    return c;
}

SymMatrix wedge2_action(const SymMatrix& m, const WedgeBasis& basis) {
    std::size_t n = basis.n;
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix size differs from the wedge basis dimension");
    std::size_t big = n * (n - 1) / 2;
    SymMatrix w(big, big);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    w(pair_index(n, static_cast<int>(i), static_cast<int>(j)),
                      pair_index(n, static_cast<int>(k), static_cast<int>(l))) = m(i, k) * m(j, l) - m(j, k) * m(i, l);
    SymMatrix c = from_rat(basis.change_matrix());
    return mat_inverse(c) * w * c;
}

std::array<MPoly, 4> c_functions(const ShapedElement& s) {
    auto P = [](const RFrac& f) { return f.as_poly(); };
    MPoly g66 = P(s.g66), g67 = P(s.g67), g76 = P(s.g76), g77 = P(s.g77);
    MPoly p13 = P(s.p[0][0]), p14 = P(s.p[0][1]), p15 = P(s.p[0][2]);
    MPoly p23 = P(s.p[1][0]), p24 = P(s.p[1][1]), p25 = P(s.p[1][2]);
    return {g76 * p13 + g66 * p23, -(g77 * p13) - g67 * p23 - g76 * p14 - g66 * p24,
            -(g77 * p14) - g67 * p24 + g76 * p15 + g66 * p25, -(g77 * p15) - g67 * p25};
}

SymMatrix displayed_first_columns(const ShapedElement& s) {
    auto c = c_functions(s);
    const RFrac &a = s.g66, &b = s.g67, &x = s.g76, &y = s.g77;  // g66 g67 g76 g77
    RFrac two(2), three(3);
    SymMatrix m(10, 5);
    m(0, 0) = s.d();
    for (int j = 0; j < 4; ++j) m(0, 1 + j) = RFrac(c[j]);
    // rows as printed, including the (5,4) entry -3 g77 g76^2
    std::array<std::array<RFrac, 4>, 4> rows{{
        {a * a * a, -three * a * a * b, -three * a * b * b, b * b * b},
        {-(a * a * x), a * a * b + two * a * b * x, b * b * x + two * a * y * b, -(y * b * b)},
        {-(a * x * x), b * x * x + two * a * y * x, a * y * y + two * y * b * x, -(y * y * b)},
        {x * x * x, -three * y * x * x, -three * y * x * x, y * y * y},
    }};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(1 + i, 1 + j) = rows[i][j];
    return m;
}

BlockComparison first_columns_report(const ShapedElement& s) {
    BlockComparison r;
    SymMatrix w = wedge2_action(s.e_block(), WedgeBasis::five_dim());
    RFrac d2 = s.d() * s.d();
    r.computed = w.block(0, 0, 10, 5).scaled(d2);
    SymMatrix shown = displayed_first_columns(s);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (r.computed(i, j) != shown(i, j))
                r.mismatches.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): displayed " +
                                       shown(i, j).str() + ", computed " + r.computed(i, j).str());
    r.match = r.mismatches.empty();
    return r;
}

SymMatrix sym3(const SymMatrix& r, bool signed_basis) {
    if (r.rows() != 2 || r.cols() != 2) throw DimensionMismatch("sym3 takes a 2x2 matrix");
    RFrac sg = signed_basis ? RFrac(-1) : RFrac(1);
    // symmetric tensors in (k^2)^{x3}, index 4i+2j+k
    std::array<std::vector<RFrac>, 4> basis;
    for (auto& b : basis) b.assign(8, RFrac());
    for (int t = 0; t < 8; ++t) {
        int ones = (t & 1) + ((t >> 1) & 1) + ((t >> 2) & 1);
        basis[ones][t] = ones >= 2 ? sg : RFrac(1);
    }
    const std::array<int, 4> lead{0, 1, 3, 7};
    SymMatrix out(4, 4);
    for (int c = 0; c < 4; ++c) {
        std::vector<RFrac> img(8);
        for (int t = 0; t < 8; ++t)
            for (int u = 0; u < 8; ++u) {
                if (basis[c][u].is_zero()) continue;
                RFrac k = r((t >> 2) & 1, (u >> 2) & 1) * r((t >> 1) & 1, (u >> 1) & 1) * r(t & 1, u & 1);
                img[t] += k * basis[c][u];
            }
        std::vector<RFrac> rest = img;
        for (int k = 0; k < 4; ++k) {
            out(k, c) = img[lead[k]] / basis[k][lead[k]];
            for (int t = 0; t < 8; ++t) rest[t] -= out(k, c) * basis[k][t];
        }
        for (auto& e : rest)
            if (!e.is_zero()) throw std::logic_error("sym3 image left the symmetric tensors");
    }
    return out;
}

bool sym3_block_matches(const ShapedElement& s, bool signed_basis) {
    SymMatrix w = wedge2_action(s.e_block(), WedgeBasis::five_dim());
    RFrac d2 = s.d() * s.d();
    SymMatrix block = w.block(1, 1, 4, 4).scaled(d2);
    SymMatrix r{{s.g66, -s.g67}, {-s.g76, s.g77}};
    return block == sym3(r, signed_basis);
}

EliminationReport relation_elimination() {
    ShapedElement s = ShapedElement::symbolic();
    EliminationReport rep;
    RFrac d = s.d(), d2 = d * d;
    const std::array<RFrac, 6> unknowns{s.p[0][0], s.p[1][0], s.p[0][1], s.p[1][1], s.p[0][2], s.p[1][2]};
    SymMatrix w = wedge2_action(s.e_block(), WedgeBasis::five_dim());
    auto rel = relation_values(s.matrix());
    // c1 c2 rel1 c3 rel2 c4, each cleared of 1/d^2
    std::array<RFrac, 6> eqs{w(0, 1) * d2, w(0, 2) * d2, rel[0] * d2, w(0, 3) * d2, rel[1] * d2, w(0, 4) * d2};
    rep.literal = SymMatrix(6, 6);
    for (int i = 0; i < 6; ++i) {
        MPoly f = eqs[i].as_poly(), rest = f;
        for (int j = 0; j < 6; ++j) {
            std::string name = unknowns[j].num().variables().front();
            MPoly coeff = f.diff(name);
            rep.literal(i, j) = RFrac(coeff);
            rest -= coeff * unknowns[j].as_poly();
        }
        if (!rest.is_zero()) throw std::logic_error("relation " + std::to_string(i + 1) + " is not linear in g'");
    }
    RatMatrix t(6, std::vector<Rat>(6));
    t[0][0] = 1;
    t[1][1] = rat(-1, 3), t[1][2] = rat(1, 3);
    t[2][1] = 2, t[2][2] = 1;
    t[3][3] = rat(-2, 3), t[3][4] = rat(1, 3);
    t[4][3] = 1, t[4][4] = 1;
    t[5][5] = -1;
    rep.transform = from_rat(t);
    rep.eliminated = rep.transform * rep.literal;

    const RFrac &a = s.g66, &b = s.g67, &x = s.g76, &y = s.g77;
    RFrac z, two(2), three(3);
    rep.displayed_system = SymMatrix{{x, a, z, z, z, z},
                                     {y, b, x, a, z, z},
                                     {two * y, two * b, -x, -a, z, z},
                                     {z, z, y, b, -x, -a},
                                     {z, z, y, b, two * x, two * a},
                                     {z, z, z, z, b, y}};
    rep.displayed_eliminated = SymMatrix{{x, a, z, z, z, z},
                                         {y, b, z, z, z, z},
                                         {z, z, -three * x, -three * a, z, z},
                                         {z, z, y, b, z, z},
                                         {z, z, z, z, three * x, three * a},
                                         {z, z, z, z, y, b}};
    rep.literal_det = mat_det(rep.literal);
    rep.transform_det = mat_det(rep.transform);
    rep.eliminated_det = mat_det(rep.eliminated);
    rep.displayed_system_det = mat_det(rep.displayed_system);
    rep.displayed_eliminated_det = mat_det(rep.displayed_eliminated);
    rep.expected = RFrac(-9) * d * d * d;
    rep.eliminated_matches_display = rep.eliminated == rep.displayed_eliminated;
    for (std::size_t i = 0; i < 6; ++i) {
        SymMatrix shown = rep.displayed_system.block(i, 0, 1, 6), lit = rep.literal.block(i, 0, 1, 6);
        if (shown == lit) continue;
        if (shown == lit.scaled(RFrac(-1))) {
            rep.system_row_mismatches.push_back("row " + std::to_string(i + 1) + ": displayed is the negative of " +
                                                row_str(rep.literal, i));
            continue;
        }
        rep.system_row_mismatches.push_back("row " + std::to_string(i + 1) + ": displayed " +
                                            row_str(rep.displayed_system, i) + ", derived " + row_str(rep.literal, i));
    }
    return rep;
}

FourDimReport four_dim_wedge_report(const WedgeBasis& basis) {
    if (basis.n != 4) throw DimensionMismatch("the four dimensional report needs a basis of wedge^2 of a 4-space");
    ShapedElement s = ShapedElement::symbolic();
    SymMatrix r1 = s.rho1(), r3 = s.rho3();
    SymMatrix e4(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e4(i, j) = r1(i, j), e4(2 + i, 2 + j) = r3(i, j), e4(i, 2 + j) = s.star2[i][j];
    SymMatrix w = wedge2_action(e4, basis);
    FourDimReport rep;
    rep.columns = w.block(0, 0, 6, 2);
    rep.star = w(0, 1);
    RFrac d = s.d();
    const RFrac &g16 = s.star2[0][0], &g17 = s.star2[0][1], &g26 = s.star2[1][0], &g27 = s.star2[1][1];
    rep.displayed_star = (s.g67 * g26 + s.g77 * g16) / d;
    for (std::size_t i = 0; i < 6; ++i) {
        RFrac want0 = i == 0 ? d.inv() : RFrac();
        if (w(i, 0) != want0)
            rep.shape_mismatches.push_back("(" + std::to_string(i + 1) + ",1): " + w(i, 0).str() + ", want " + want0.str());
        if (i == 0) continue;
        RFrac want1 = i == 1 ? RFrac(1) : RFrac();
        if (w(i, 1) != want1)
            rep.shape_mismatches.push_back("(" + std::to_string(i + 1) + ",2): " + w(i, 1).str() + ", want " + want1.str());
    }
    rep.shape_ok = rep.shape_mismatches.empty();
    rep.star_matches = rep.star == rep.displayed_star;
    // impose g77 g16 + g76 g17 + g67 g26 + g66 g27 = 0 by solving for g27
    RFrac g27_on = -(s.g77 * g16 + s.g76 * g17 + s.g67 * g26) / s.g66;
    rep.star_on_relation = rep.star.subst(g27.num().variables().front(), g27_on);
    if (!rep.displayed_star.is_zero()) rep.ratio_on_relation = rep.star_on_relation / rep.displayed_star;
    return rep;
}

FourDimReport four_dim_wedge_report() { return four_dim_wedge_report(WedgeBasis::four_dim()); }

std::array<RFrac, 3> constraint_families(const SymMatrix& g) {
    if (g.rows() != 7 || g.cols() != 7) throw DimensionMismatch("constraint families need a 7x7 matrix");
    return families(g(0, 5), g(0, 6), g(1, 5), g(1, 6), g(5, 5), g(5, 6), g(6, 5), g(6, 6));
}

ProbeReport form_constraint_probe(int max_length, ProbeGenerators gens) {
    if (max_length < 1) throw std::invalid_argument("word length must be >= 1");
    ProbeReport rep;
    rep.max_length = max_length;
    rep.generators = gens;
    std::vector<int> kinds;
    if (gens == ProbeGenerators::Pbeta)
        for (int k = 0; k < kPbetaGeneratorKinds; ++k) kinds.push_back(k);
    else
        kinds = {0, 1, 3, 7};  // torus, g(-beta), g(beta), g(2alpha+3beta)
    RFrac a = v("a");
    std::vector<std::vector<SymMatrix>> mats(max_length);
    for (int pos = 0; pos < max_length; ++pos)
        for (int k : kinds) mats[pos].push_back(pbeta_generator(k, pos + 1, a));
    // rows 1, 2, 6, 7 of the prefix product
    SymMatrix start(4, 7);
    start(0, 0) = start(1, 1) = start(2, 5) = start(3, 6) = RFrac(1);
    std::vector<int> word;
    std::function<void(const SymMatrix&)> walk = [&](const SymMatrix& rows) {
        int pos = static_cast<int>(word.size());
        if (pos == max_length) return;
        for (std::size_t k = 0; k < kinds.size(); ++k) {
            SymMatrix next = rows * mats[pos][k];
            word.push_back(kinds[k]);
            ++rep.words;
            auto f = families(next(0, 5), next(0, 6), next(1, 5), next(1, 6), next(2, 5), next(2, 6), next(3, 5),
                              next(3, 6));
            for (int i = 0; i < 3; ++i)
                if (!f[i].is_zero() && rep.failures[i]++ == 0)
                    for (std::size_t j = 0; j < word.size(); ++j)
                        rep.first_failure[i] += (j ? " " : "") + pbeta_generator_name(word[j]);
            walk(next);
            word.pop_back();
        }
    };
    walk(start);
    return rep;
}

}  // namespace g2forge
