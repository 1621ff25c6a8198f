#include "g2forge/lie.hpp"

#include <stdexcept>

namespace g2forge {

namespace {

const std::array<Weight, 7> kDiagWeights{Weight(1, 0), Weight(0, 1), Weight(1, -1), Weight(0, 0),
                                         Weight(-1, 1), Weight(0, -1), Weight(-1, 0)};

// torus exponents (e1, e2) of t1^e1 t2^e2 back to a alpha + b beta
Weight root_of_exponents(const Weight& e) { return {e.a + e.b, 2 * e.a + e.b}; }

// root weight of a matrix all of whose nonzero entries are off-diagonal of one weight
std::optional<Weight> homogeneous_weight(const SymMatrix& x) {
    std::optional<Weight> w;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (x(i, j).is_zero()) continue;
            if (i == j) return std::nullopt;
            Weight here = root_of_exponents(kDiagWeights[i] - kDiagWeights[j]);
            if (w && *w != here) return std::nullopt;
            w = here;
        }
    return w;
}

SymMatrix derivative_at_zero(const SymMatrix& m, const std::string& x) {
    return m.map([&](const RFrac& f) { return f.diff(x).subst(x, RFrac()); });
}

std::vector<Rat> eval_vec(const std::vector<RFrac>& v, const Assignment& at) {
    std::vector<Rat> out;
    for (auto& c : v) out.push_back(c.eval(at));
    return out;
}

}  // namespace

std::size_t LieG2::index_of(const Weight& gamma) const {
    for (std::size_t k = 2; k < weights.size(); ++k)
        if (weights[k] == gamma) return k;
    throw std::invalid_argument("no root vector for " + gamma.str());
}

LieG2 lie_basis(const RFrac& a) {
    if (a.is_zero()) throw std::invalid_argument("lie_basis needs a != 0");
    LieG2 g;
    g.a = a;
    auto push = [&](const std::string& label, const Weight& w, const SymMatrix& m, const std::string& how) {
        g.labels.push_back(label);
        g.weights.push_back(w);
        g.basis.push_back(m);
        g.provenance.push_back(how);
    };
    auto diag = [](std::array<long, 7> d) {
        std::vector<RFrac> v;
        for (long x : d) v.push_back(RFrac(x));
        return SymMatrix::diag(v);
    };
    push("H1", Weight(), diag({1, 0, 1, 0, -1, 0, -1}), "torus direction t1");
    push("H2", Weight(), diag({0, 1, -1, 0, 1, -1, 0}), "torus direction t2");
    RFrac x = RFrac::var("x");
    for (auto& r : roots::positive())
        push("E[" + r.str() + "]", r, derivative_at_zero(root_subgroup(r, x, a), "x"), "d/dx g(" + r.str() + ",x)");
    for (auto& r : roots::positive()) {
        Weight target = -r;
        if (target == -roots::beta()) {
            push("E[" + target.str() + "]", target, derivative_at_zero(root_subgroup(target, x, a), "x"),
                 "d/dx g(-beta,x)");
            continue;
        }
        bool done = false;
        for (auto& w : weyl_group()) {
            if (w.length() == 0) continue;
            SymMatrix wm = weyl_word_matrix(w.word(), a), wi = mat_inverse(wm);
            for (auto& d : roots::positive()) {
                SymMatrix img = wm * g.e(d) * wi;
                auto wt = homogeneous_weight(img);
                if (wt && *wt == target) {
                    push("E[" + target.str() + "]", target, img, "Ad(" + w.name() + ") E[" + d.str() + "]");
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
        if (!done) throw std::logic_error("no Weyl conjugate reaches " + target.str());
    }
    return g;
}

SymMatrix bracket(const SymMatrix& x, const SymMatrix& y) { return x * y - y * x; }

std::vector<RFrac> lie_coords(const LieG2& g, const SymMatrix& x) {
    if (x.rows() != 7 || x.cols() != 7) throw DimensionMismatch("Lie algebra elements are 7x7");
    std::vector<RFrac> c(g.basis.size());
    c[0] = x(0, 0);
    c[1] = x(1, 1);
    for (std::size_t k = 2; k < g.basis.size(); ++k) {
        const SymMatrix& b = g.basis[k];
        for (int i = 0; i < 7 && c[k].is_zero(); ++i)
            for (int j = 0; j < 7; ++j)
                if (!b(i, j).is_zero()) {
                    c[k] = x(i, j) / b(i, j);
                    i = 7;
                    break;
                }
    }
    SymMatrix rest = x - lie_combine(g, c);
    if (!rest.is_zero()) throw NotInSpan("matrix is not in the span of the g2 basis; residue " + rest.str());
    return c;
}

SymMatrix lie_combine(const LieG2& g, const std::vector<RFrac>& c) {
    if (c.size() != g.basis.size()) throw DimensionMismatch("coordinate vector has the wrong length");
    SymMatrix s(7, 7);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) s = s + g.basis[k].scaled(c[k]);
    return s;
}

std::size_t bracket_closure_failures(const LieG2& g) {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < g.basis.size(); ++i)
        for (std::size_t j = i + 1; j < g.basis.size(); ++j) {
            try {
                (void)lie_coords(g, bracket(g.basis[i], g.basis[j]));
            } catch (const NotInSpan&) {
                ++bad;
            }
        }
    return bad;
}

std::size_t derivation_failures(const LieG2& g) {
    AltTriForm f = generic_form(g.a);
    std::size_t bad = 0;
    for (auto& b : g.basis)
        if (!f.derivation(b).is_zero()) ++bad;
    return bad;
}

SymMatrix ad_matrix(const LieG2& g, const SymMatrix& x) {
    std::size_t n = g.basis.size();
    SymMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        auto c = lie_coords(g, bracket(x, g.basis[k]));
        for (std::size_t i = 0; i < n; ++i) m(i, k) = c[i];
    }
    return m;
}

LieG2 lie_subst(const LieG2& g, const Assignment& at) {
    LieG2 out = g;
    out.a = g.a.subst(at);
    for (auto& b : out.basis) b = b.subst(at);
    return out;
}

std::size_t centralizer_dim(const LieG2& g, const SymMatrix& x, const Assignment& at) {
    (void)lie_coords(g, x);
    return g.basis.size() - mat_rank(ad_matrix(g, x), at);
}

Sl2Triple complete_sl2(const LieG2& g0, const SymMatrix& e0, const Assignment& at) {
    // everything below is over Q
    LieG2 g = lie_subst(g0, at);
    SymMatrix e = e0.subst(at);
    std::size_t n = g.basis.size();
    auto ce = eval_vec(lie_coords(g, e), at);
    // [h,e] = 2e with h = u H1 + v H2
    auto c1 = eval_vec(lie_coords(g, bracket(g.basis[0], e)), at);
    auto c2 = eval_vec(lie_coords(g, bracket(g.basis[1], e)), at);
    RatMatrix hs(n, std::vector<Rat>(2));
    std::vector<Rat> rhs(n);
    for (std::size_t i = 0; i < n; ++i) hs[i] = {c1[i], c2[i]}, rhs[i] = 2 * ce[i];
    auto uv = mat_solve(hs, rhs);
    if (!uv) throw AlgebraError("no Cartan element h with [h,e] = 2e");
    std::vector<RFrac> hc(n);
    hc[0] = RFrac((*uv)[0]);
    hc[1] = RFrac((*uv)[1]);
    SymMatrix h = lie_combine(g, hc);
    // [e,f] = h and [h,f] + 2f = 0, linear in the coordinates of f
    RatMatrix ade = mat_eval(ad_matrix(g, e), at), adh = mat_eval(ad_matrix(g, h), at);
    auto chv = eval_vec(lie_coords(g, h), at);
    RatMatrix sys;
    std::vector<Rat> b;
    for (std::size_t i = 0; i < n; ++i) sys.push_back(ade[i]), b.push_back(chv[i]);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = adh[i];
        row[i] += 2;
        sys.push_back(row), b.push_back(0);
    }
    auto fc = mat_solve(sys, b);
    if (!fc) throw AlgebraError("e does not extend to an sl2-triple");
    std::vector<RFrac> fr;
    for (auto& q : *fc) fr.push_back(RFrac(q));
    Sl2Triple t{e, h, lie_combine(g, fr)};
    if (bracket(t.e, t.f) != t.h || bracket(t.h, t.e) != t.e.scaled(RFrac(2)) ||
        bracket(t.h, t.f) != t.f.scaled(RFrac(-2)))
        throw std::logic_error("sl2 completion failed its own check");
    return t;
}

std::size_t sl2_centralizer_dim(const LieG2& g0, const SymMatrix& e0, const SymMatrix& f0, const Assignment& at) {
    LieG2 g = lie_subst(g0, at);
    SymMatrix e = e0.subst(at), f = f0.subst(at), h = bracket(e, f);
    RatMatrix stack;
    for (const SymMatrix* x : std::array<const SymMatrix*, 3>{&e, &h, &f}) {
        auto m = mat_eval(ad_matrix(g, *x), {});
        stack.insert(stack.end(), m.begin(), m.end());
    }
    return g.basis.size() - mat_rank(stack);
}

std::string ZetaNumber::str() const { return "(" + c0.str() + ") + (" + c1.str() + ")*zeta"; }

ZetaNumber reduce_zeta(const RFrac& f, const std::string& z) {
    const MPoly& den = f.den();
    if (!den.is_monomial()) throw AlgebraError("reduce_zeta needs a Laurent polynomial in " + z);
    std::uint32_t id = sym::intern(z);
    Mono dm = den.lead_mono();
    long shift = static_cast<long>(dm.exp(id));
    Mono drest = dm.quot(Mono::var(id, dm.exp(id)));
    MPoly rest_den = MPoly::monomial(drest, den.lead_coeff());
    MPoly c0, c1;
    for (auto& [m, c] : f.num().terms()) {
        unsigned e = m.exp(id);
        MPoly coef = MPoly::monomial(e ? m.quot(Mono::var(id, e)) : m, c);
        long r = ((static_cast<long>(e) - shift) % 3 + 3) % 3;
        if (r == 0)
            c0 += coef;
        else if (r == 1)
            c1 += coef;
        else
            c0 -= coef, c1 -= coef;  // zeta^2 = -zeta - 1
    }
    return {RFrac(c0, rest_den), RFrac(c1, rest_den)};
}

SymMatrix subregular_e(const LieG2& g) { return g.e(Weight(1, 0)) + g.e(Weight(1, 3)); }
SymMatrix subregular_f(const LieG2& g) { return g.e(Weight(-1, 0)) + g.e(Weight(-1, -3)); }

ZetaWitness zeta_witness(const LieG2& g) {
    RFrac z = RFrac::var("z");
    SymMatrix t = torus_elem(z, z.inv()), ti = torus_elem(z.inv(), z);
    auto reduces_to_zero = [](const SymMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!reduce_zeta(m(i, j)).is_zero()) return false;
        return true;
    };
    SymMatrix e = subregular_e(g), f = subregular_f(g);
    ZetaWitness w;
    w.centralizes_e = reduces_to_zero(t * e * ti - e);
    w.centralizes_f = reduces_to_zero(t * f * ti - f);
    SymMatrix id = SymMatrix::identity(7);
    w.order_three = reduces_to_zero(t * t * t - id) && !reduces_to_zero(t - id);
    SymMatrix wb = weyl_rep('b', g.a), wbi = mat_inverse(wb);
    w.w_beta_centralizes = (wb * e * wbi == e) && (wb * f * wbi == f);
    return w;
}

}  // namespace g2forge
