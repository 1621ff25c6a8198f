#include "g2forge/kostant.hpp"

#include <stdexcept>

namespace g2forge {

const std::vector<Weight>& r7_basis() {
    static const std::vector<Weight> b{{-1, -2}, {-1, -1}, {0, -1}, {0, 0}, {0, 1}, {1, 1}, {1, 2}};
    return b;
}

bool is_dominant(const Weight& l) {
    return l.pair(roots::alpha()) >= 0 && l.pair(roots::beta()) >= 0;
}

bool is_levi_dominant(Parabolic p, const Weight& l) {
    for (auto& g : levi_positive_roots(p))
        if (l.pair(g) < 0) return false;
    return true;
}

Rat weyl_dim(const Weight& l) {
    Rat pa = l.pair(roots::alpha()), pb = l.pair(roots::beta());
    if (pa < 0 || pb < 0 || pa.get_den() != 1 || pb.get_den() != 1)
        throw std::invalid_argument("weyl_dim needs a dominant integral weight, got " + l.str());
    Rat num = 1, den = 1;
    Weight lr = l + roots::rho();
    for (auto& g : roots::positive()) {
        num *= lr.pair(g);
        den *= roots::rho().pair(g);
    }
    return num / den;
}

SymMatrix std_dual(const SymMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("Levi blocks are 2x2");
    RFrac d = mat_det(a);
    // J (A^-1)^T J
    return SymMatrix{{a(0, 0) / d, -a(0, 1) / d}, {-a(1, 0) / d, a(1, 1) / d}};
}

SymMatrix adjoint_block(const SymMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("Levi blocks are 2x2");
    RFrac d = mat_det(a);
    const RFrac &x = a(0, 0), &y = a(0, 1), &z = a(1, 0), &w = a(1, 1);
    SymMatrix s{{x * x, RFrac(2) * x * y, -(y * y)},
                {x * z, x * w + y * z, -(y * w)},
                {-(z * z), RFrac(-2) * z * w, w * w}};
    return s.scaled(d.inv());
}

SymMatrix levi_embed(const Weight& g, const SymMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2) throw DimensionMismatch("Levi blocks are 2x2");
    SymMatrix m(7, 7);
    auto put = [&](std::size_t at, const SymMatrix& blk) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) m(at + i, at + j) = blk(i, j);
    };
    RFrac d = mat_det(a);
    if (g == roots::alpha()) {
        m(0, 0) = d.inv();
        put(1, std_dual(a));
        m(3, 3) = RFrac(1);
        put(4, a);
        m(6, 6) = d;
    } else if (g == roots::beta()) {
        put(0, std_dual(a));
        put(2, adjoint_block(a));
        put(5, a);
    } else {
        throw std::invalid_argument("levi_embed takes alpha or beta, got " + g.str());
    }
    return m;
}

std::vector<KostantPiece> kostant_pieces(Parabolic p, const Weight& l, KostantSign sign) {
    if (!is_dominant(l) || !l.is_integral()) throw std::invalid_argument("Kostant decomposition needs a dominant integral weight");
    std::vector<KostantPiece> out;
    for (auto& w : minimal_coset_reps(p)) {
        Weight hw = dot_act(w, l);
        if (!is_levi_dominant(p, hw)) throw std::logic_error("Kostant piece is not Levi-dominant for " + w.name());
        Weight rep = sign == KostantSign::Dot ? hw : -w.act(l + roots::rho());
        out.push_back({w, w.length(), hw, rep});
    }
    return out;
}

namespace {
int coefficient_sign(const MPoly& f) {
    bool pos = false, neg = false;
    for (auto& [m, c] : f.terms()) (c > 0 ? pos : neg) = true;
    if (pos && neg) return 0;
    return pos ? 1 : (neg ? -1 : 0);
}
}  // namespace

std::vector<DegreeCase> degree_cases_alpha() {
    MPoly c1 = MPoly::var("c1"), c2 = MPoly::var("c2");
    PWeight lam = PWeight::from_fund(c1, c2);
    PWeight lr = lam + PWeight(roots::rho());
    std::vector<DegreeCase> out;
    for (auto& w : minimal_coset_reps(Parabolic::Palpha)) {
        PWeight v = -weyl_act(w, lr);
        // v = u alpha/2 + t (alpha+2beta)/2, and the a_P part is 10 s (alpha+2beta)/2
        MPoly t = v.b;
        MPoly u = v.a.scaled(2) - v.b;
        if (coefficient_sign(t) <= 0) continue;  // needs Re(s) >= 0 for every c1, c2 >= 0
        int su = coefficient_sign(u);
        if (su == 0) throw std::logic_error("Levi part of " + w.name() + " has no fixed sign");
        MPoly k = (su < 0 ? -u : u) + MPoly(1);
        out.push_back({static_cast<int>(w.length()) + 1, w, k, t.scaled(Rat(1, 10)), v});
    }
    return out;
}

std::vector<DegreeCase> degree_cases_alpha(long c1, long c2) {
    if (c1 < 0 || c2 < 0) throw std::invalid_argument("degree_cases_alpha needs c1, c2 >= 0");
    Assignment at{{"c1", Rat(c1)}, {"c2", Rat(c2)}};
    auto cases = degree_cases_alpha();
    for (auto& c : cases) {
        c.k = MPoly(c.k.eval(at));
        c.s = MPoly(c.s.eval(at));
        c.neg_inf_char = PWeight(c.neg_inf_char.eval(at));
    }
    return cases;
}

std::array<long, 7> lift_weights(long c1, long c2) {
    return {2 * c1 + c2, c1 + c2, c1, 0, -c1, -c1 - c2, -2 * c1 - c2};
}

std::array<long, 7> hodge_tate_weights(long c1, long c2) {
    return {2 * c1 + c2 + 3, c1 + c2 + 2, c1 + 1, 0, -c1 - 1, -c1 - c2 - 2, -2 * c1 - c2 - 3};
}

std::array<Rat, 7> hodge_tate_by_pairing(long c1, long c2) {
    Weight lr = Weight::from_fund(c1, c2) + roots::rho();
    std::array<Rat, 7> out;
    const auto& basis = r7_basis();
    for (std::size_t i = 0; i < 7; ++i) {
        const Weight& mu = basis[6 - i];
        out[i] = lr.a * mu.pair(roots::beta()) + lr.b * mu.pair(roots::alpha());
    }
    return out;
}

}  // namespace g2forge
