#include "g2forge/phin.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace g2forge {

namespace {

RFrac pvar() { return RFrac::var(kPrimeSymbol); }
RFrac ahat_var() { return RFrac::var(kUnitSymbol); }

SymMatrix hcat(const SymMatrix& a, const SymMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hcat needs equal row counts");
    SymMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}


SymMatrix columns(const SymMatrix& a, const std::vector<std::size_t>& js) {
    SymMatrix m(a.rows(), js.size());
    for (std::size_t k = 0; k < js.size(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, k) = a(i, js[k]);
    return m;
}

// greedy choice of independent columns
SymMatrix independent_columns(const SymMatrix& a) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        auto trial = keep;
        trial.push_back(j);
        if (mat_rank_symbolic(columns(a, trial)) == trial.size()) keep = trial;
    }
    return columns(a, keep);
}

std::size_t rank_of(const SymMatrix& a) { return a.cols() == 0 ? 0 : mat_rank_symbolic(a); }

std::size_t intersection_dim(const SymMatrix& u, const SymMatrix& v) {
    return rank_of(u) + rank_of(v) - rank_of(hcat(u, v));
}

SymMatrix block_diag(const SymMatrix& a, const SymMatrix& b) {
    SymMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
    SymMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return m;
}

// reduced row echelon form; returns pivot columns
std::vector<std::size_t> rref(SymMatrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        RFrac inv = m(r, c).inv();
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            RFrac f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

// rows l with l a = 0
SymMatrix left_annihilator(const SymMatrix& a) {
    SymMatrix t = a.transpose();
    std::size_t n = t.cols();
    if (t.rows() == 0) return SymMatrix::identity(n);
    auto piv = rref(t);
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back(c);
    SymMatrix out(free.size(), n);
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(k, free[k]) = RFrac(1);
        for (std::size_t r = 0; r < piv.size(); ++r) out(k, piv[r]) = -t(r, free[k]);
    }
    return out;
}

// the filtration step in force at level i
const SymMatrix& fil_at(const PhiNModule& m, int i) {
    const SymMatrix* cur = &m.fil.front().basis;
    for (auto& s : m.fil)
        if (s.from <= i) cur = &s.basis;
    return *cur;
}

std::vector<FilStep> compress(std::vector<FilStep> steps) {
    std::vector<FilStep> out;
    for (auto& s : steps)
        if (out.empty() || rank_of(out.back().basis) != rank_of(s.basis)) out.push_back(std::move(s));
    return out;
}

std::string subset_str(const std::vector<std::size_t>& s) {
    std::string o = "{";
    for (std::size_t k = 0; k < s.size(); ++k) o += (k ? "," : "") + std::string("v") + std::to_string(s[k] + 1);
    return o + "}";
}

std::string power(const std::string& base, const Rat& e) {
    if (e == 1) return base;
    std::string es = rat_str(e);
    if (e.get_den() != 1 || e < 0) es = "(" + es + ")";
    return base + "^" + es;
}

// x = y as ahat^n = p^m with n > 0, or Always / Never
PairConstraint equality_constraint(const ValuedScalar& x, const ValuedScalar& y) {
    PairConstraint c;
    ValuedScalar r = x / y;  // p^e u = 1
    int n = r.unit_degree();
    RFrac coeff = r.unit() / RFrac::var_pow(kUnitSymbol, n);
    if (!coeff.is_const()) throw AlgebraError("unit ratio is not c*ahat^n: " + r.unit().str());
    if (n == 0) {
        c.kind = (r.exponent() == 0 && coeff.const_value() == 1) ? PairConstraint::Always : PairConstraint::Never;
        c.m = r.exponent();
        return c;
    }
    if (coeff.const_value() != 1) throw AlgebraError("constraint with a unit constant is not supported: " + r.str());
    c.kind = PairConstraint::Equation;
    // p^e ahat^n = 1
    c.n = n > 0 ? n : -n;
    c.m = n > 0 ? Rat(-r.exponent()) : Rat(r.exponent());
    return c;
}

}  // namespace

void PhiNModule::validate() const {
    if (phi.rows() != dim || phi.cols() != dim || n_op.rows() != dim || n_op.cols() != dim)
        throw DimensionMismatch("phi and N must be dim x dim");
    if (eigenvalues.size() != dim || eigenvectors.rows() != dim || eigenvectors.cols() != dim)
        throw DimensionMismatch("one eigenvector per eigenvalue");
    if (mat_det(phi).is_zero()) throw AlgebraError("phi is not invertible");
    std::vector<RFrac> ev;
    for (auto& e : eigenvalues) ev.push_back(e.as_rfrac());
    if (phi * eigenvectors != eigenvectors * SymMatrix::diag(ev))
        throw AlgebraError("eigen data does not diagonalize phi");
    SymMatrix pw = SymMatrix::identity(dim);
    for (std::size_t k = 0; k < dim; ++k) pw = pw * n_op;
    if (!pw.is_zero()) throw AlgebraError("N is not nilpotent");
    if (fil.size() < 2) throw AlgebraError("filtration needs a first and a last step");
    if (rank_of(fil.front().basis) != dim || fil.back().basis.cols() != 0)
        throw AlgebraError("filtration must run from the whole space to 0");
    for (std::size_t k = 1; k < fil.size(); ++k) {
        if (fil[k].from <= fil[k - 1].from) throw AlgebraError("filtration levels must increase");
        if (fil[k].basis.rows() != dim) throw DimensionMismatch("filtration basis has the wrong length");
        const SymMatrix &big = fil[k - 1].basis, &small = fil[k].basis;
        if (rank_of(hcat(big, small)) != rank_of(big)) throw AlgebraError("filtration is not decreasing");
    }
}

std::vector<int> PhiNModule::fil_jumps() const {
    std::vector<int> j;
    for (std::size_t k = 0; k + 1 < fil.size(); ++k) {
        std::size_t drop = rank_of(fil[k].basis) - rank_of(fil[k + 1].basis);
        for (std::size_t t = 0; t < drop; ++t) j.push_back(fil[k + 1].from - 1);
    }
    std::sort(j.begin(), j.end());
    return j;
}

bool PhiNModule::phi_n_relation() const { return mat_inverse(phi) * n_op * phi == n_op.scaled(pvar()); }

Polygon Polygon::flipped() const {
    Polygon q = *this;
    for (auto& v : q.vertices) v.second = -v.second;
    return q;
}

std::string Polygon::str() const {
    std::string s;
    for (auto& [x, y] : vertices) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(x) + "," + rat_str(y) + ")";
    return s;
}

namespace {
Polygon from_slopes(std::vector<Rat> slopes) {
    std::sort(slopes.begin(), slopes.end());
    Polygon p;
    p.vertices.push_back({0, Rat(0)});
    for (auto& s : slopes) p.vertices.push_back({p.vertices.back().first + 1, p.vertices.back().second + s});
    return p;
}
}  // namespace

Polygon newton_polygon(const PhiNModule& m) {
    std::vector<Rat> s;
    for (auto& e : m.eigenvalues) s.push_back(e.valuation(m.s_p));
    return from_slopes(s);
}

Polygon hodge_polygon(const PhiNModule& m) {
    std::vector<Rat> s;
    for (int j : m.fil_jumps()) s.push_back(Rat(-j));
    return from_slopes(s);
}

Rat t_newton(const PhiNModule& m, const std::vector<std::size_t>& subset) {
    Rat t = 0;
    for (auto i : subset) t -= m.eigenvalues.at(i).valuation(m.s_p);
    return t;
}

Rat t_hodge(const PhiNModule& m, const std::vector<std::size_t>& subset) {
    SymMatrix sub = columns(m.eigenvectors, subset);
    std::vector<std::size_t> d;
    for (auto& s : m.fil) d.push_back(intersection_dim(sub, s.basis));
    Rat t = 0;
    for (std::size_t k = 0; k + 1 < m.fil.size(); ++k)
        t += Rat(static_cast<long>(d[k] - d[k + 1])) * (m.fil[k + 1].from - 1);
    return t;
}

AdmissibilityReport admissibility(const PhiNModule& m) {
    if (m.dim > 6) throw AlgebraError("submodule enumeration is limited to dimension 6");
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = i + 1; j < m.dim; ++j)
            if (m.eigenvalues[i] == m.eigenvalues[j])
                throw AlgebraError("degenerate eigenvalue configuration: eigenvalue " + m.eigenvalues[i].str() +
                                   " repeats; stable subspaces are not enumerable from eigenlines");
    AdmissibilityReport rep;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < m.dim; ++i) all.push_back(i);
    rep.endpoints_equal = t_newton(m, all) == t_hodge(m, all);
    SymMatrix n_eig = mat_inverse(m.eigenvectors) * m.n_op * m.eigenvectors;
    rep.admissible = rep.endpoints_equal;
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << m.dim); ++mask) {
        bool stable = true;
        for (std::size_t c = 0; c < m.dim && stable; ++c) {
            if (!(mask >> c & 1)) continue;
            for (std::size_t r = 0; r < m.dim; ++r)
                if (!(mask >> r & 1) && !n_eig(r, c).is_zero()) stable = false;
        }
        if (!stable) continue;
        ++rep.stable_subspaces;
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m.dim; ++i)
            if (mask >> i & 1) s.push_back(i);
        Rat tn = t_newton(m, s), th = t_hodge(m, s);
        if (tn < th && rep.first_violation.empty()) {
            rep.admissible = false;
            rep.first_violation = subset_str(s) + ": t_N = " + rat_str(tn) + " < t_H = " + rat_str(th);
        }
    }
    if (!rep.endpoints_equal && rep.first_violation.empty())
        rep.first_violation = "endpoints: t_N = " + rat_str(t_newton(m, all)) + ", t_H = " + rat_str(t_hodge(m, all));
    return rep;
}

bool is_admissible(const PhiNModule& m) { return admissibility(m).admissible; }

PhiNModule direct_sum(const PhiNModule& x, const PhiNModule& y) {
    PhiNModule m;
    m.dim = x.dim + y.dim;
    m.phi = block_diag(x.phi, y.phi);
    m.n_op = block_diag(x.n_op, y.n_op);
    m.eigenvectors = block_diag(x.eigenvectors, y.eigenvectors);
    m.eigenvalues = x.eigenvalues;
    m.eigenvalues.insert(m.eigenvalues.end(), y.eigenvalues.begin(), y.eigenvalues.end());
    if (x.s_p != y.s_p) throw AlgebraError("summands use different valuations of ahat");
    m.s_p = x.s_p;
    std::set<int> levels;
    for (auto& s : x.fil) levels.insert(s.from);
    for (auto& s : y.fil) levels.insert(s.from);
    std::vector<FilStep> steps;
    for (int l : levels) steps.push_back({l, block_diag(fil_at(x, l), fil_at(y, l))});
    m.fil = compress(steps);
    return m;
}

PhiNModule tensor(const PhiNModule& x, const PhiNModule& y) {
    if (x.s_p != y.s_p) throw AlgebraError("factors use different valuations of ahat");
    PhiNModule m;
    m.dim = x.dim * y.dim;
    m.s_p = x.s_p;
    m.phi = kron(x.phi, y.phi);
    m.n_op = kron(x.n_op, SymMatrix::identity(y.dim)) + kron(SymMatrix::identity(x.dim), y.n_op);
    m.eigenvectors = kron(x.eigenvectors, y.eigenvectors);
    for (auto& a : x.eigenvalues)
        for (auto& b : y.eigenvalues) m.eigenvalues.push_back(a * b);
    int lo = x.fil.front().from + y.fil.front().from, hi = x.fil.back().from + y.fil.back().from - 1;
    std::vector<FilStep> steps;
    for (int i = lo; i <= hi; ++i) {
        SymMatrix span(m.dim, 0);
        for (int a = x.fil.front().from; a < x.fil.back().from; ++a)
            span = hcat(span, kron(fil_at(x, a), fil_at(y, i - a)));
        steps.push_back({i, independent_columns(span)});
    }
    m.fil = compress(steps);
    return m;
}

SymMatrix dst_phi_matrix(int k, const RFrac& ahat) {
    RFrac lo = RFrac::var_pow(kPrimeSymbol, -(k - 1)) * ahat, ai = ahat.inv();
    return SymMatrix{{ai, RFrac()}, {lo - ai, lo}};
}

PhiNModule d_st(int k, const Rat& s_p) {
    if (k < 2) throw std::invalid_argument("D_st needs k >= 2");
    PhiNModule m;
    m.dim = 2;
    m.s_p = s_p;
    m.phi = dst_phi_matrix(k, ahat_var());
    m.n_op = SymMatrix(2, 2);
    m.eigenvalues = {ValuedScalar::make(0, -1), ValuedScalar::make(-(k - 1), 1)};
    m.eigenvectors = SymMatrix{{RFrac(1), RFrac()}, {RFrac(-1), RFrac(1)}};
    m.fil = {{0, SymMatrix::identity(2)}, {1, SymMatrix{{RFrac(1)}, {RFrac()}}}, {k, SymMatrix(2, 0)}};
    m.validate();
    return m;
}

PhiNModule rank_two_module(const Rat& v1, const Rat& v2, int k) {
    if (k < 2) throw std::invalid_argument("rank_two_module needs k >= 2");
    PhiNModule m;
    m.dim = 2;
    m.eigenvalues = {ValuedScalar(v1, RFrac(1)), ValuedScalar(v2, RFrac(2))};
    m.phi = SymMatrix::diag({m.eigenvalues[0].as_rfrac(), m.eigenvalues[1].as_rfrac()});
    m.n_op = SymMatrix(2, 2);
    m.eigenvectors = SymMatrix::identity(2);
    m.fil = {{0, SymMatrix::identity(2)}, {1, SymMatrix{{RFrac(1)}, {RFrac(1)}}}, {k, SymMatrix(2, 0)}};
    m.validate();
    return m;
}

PhiNModule rank_one_module(const Rat& valuation, int jump) {
    PhiNModule m;
    m.dim = 1;
    m.eigenvalues = {ValuedScalar::p_pow(valuation)};
    m.phi = SymMatrix{{m.eigenvalues[0].as_rfrac()}};
    m.n_op = SymMatrix(1, 1);
    m.eigenvectors = SymMatrix::identity(1);
    m.fil = {{jump, SymMatrix::identity(1)}, {jump + 1, SymMatrix(1, 0)}};
    m.validate();
    return m;
}

PhiNModule build_EBc(const SymMatrix& b, const RFrac& c, int k, const Rat& s_p) {
    if (k < 4 || k % 2) throw std::invalid_argument("E(B,c) needs even k >= 4");
    if (b.rows() != 2 || b.cols() != 2) throw DimensionMismatch("B is 2x2");
    SymMatrix a = dst_phi_matrix(k, ahat_var());
    PhiNModule m;
    m.dim = 4;
    m.s_p = s_p;
    m.phi = block_diag(a.scaled(pvar().inv()), a);
    m.n_op = SymMatrix(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.n_op(i, 2 + j) = b(i, j);
    RFrac o(1), z;
    m.eigenvalues = {ValuedScalar::make(-1, -1), ValuedScalar::make(-k, 1), ValuedScalar::make(0, -1),
                     ValuedScalar::make(-(k - 1), 1)};
    m.eigenvectors = SymMatrix{{o, z, z, z}, {-o, o, z, z}, {z, z, o, z}, {z, z, -o, o}};
    m.fil = {{0, SymMatrix::identity(4)},
             {1, SymMatrix{{o, z, z}, {z, o, z}, {z, z, o}, {z, z, z}}},
             {2, SymMatrix{{o, z}, {z, c}, {z, o}, {z, z}}},
             {k, SymMatrix{{o}, {z}, {z}, {z}}},
             {k + 1, SymMatrix(4, 0)}};
    m.validate();
    return m;
}

SymMatrix ebc_commutator(const SymMatrix& b, int k) {
    SymMatrix a = dst_phi_matrix(k, ahat_var());
    return a * b - b * a;
}

std::size_t ebc_relation_solution_dim(int k) {
    SymMatrix lin(4, 4);
    for (int e = 0; e < 4; ++e) {
        SymMatrix b(2, 2);
        b(e / 2, e % 2) = RFrac(1);
        SymMatrix c = ebc_commutator(b, k);
        for (int r = 0; r < 4; ++r) lin(r, e) = c(r / 2, r % 2);
    }
    return 4 - mat_rank_symbolic(lin);
}

RFrac char_poly(const SymMatrix& m, const std::string& x) {
    if (!m.square()) throw DimensionMismatch("char_poly needs a square matrix");
    return mat_det(SymMatrix::identity(m.rows()).scaled(RFrac::var(x)) - m);
}

EbcComparison ebc_compare(const EbcPair& x, const EbcPair& y, int k, const std::optional<RFrac>& ahat) {
    if (ahat) {
        RFrac p = pvar(), a = *ahat;
        std::array<RFrac, 4> nums{a, RFrac::var_pow(kPrimeSymbol, k - 1) / a, p * a, RFrac::var_pow(kPrimeSymbol, k) / a};
        auto list = distinctness_check(k);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j, ++idx)
                if (nums[i] == nums[j])
                    throw AlgebraError("distinctness violated: " + list[idx].lhs + " = " + list[idx].rhs + " (" +
                                       list[idx].equation + ")");
    }
    auto fix = [&](const SymMatrix& m) { return ahat ? m.subst(kUnitSymbol, *ahat) : m; };
    PhiNModule ex = build_EBc(x.b, x.c, k, 0), ey = build_EBc(y.b, y.c, k, 0);
    SymMatrix phix = fix(ex.phi), phiy = fix(ey.phi);
    // psi = psi0 + sum m_u psi_u with u = m11, m12, m21, m22
    SymMatrix psi0 = SymMatrix::identity(4);
    std::array<SymMatrix, 4> dpsi;
    const std::array<std::pair<int, int>, 4> where{{{0, 2}, {1, 2}, {0, 3}, {1, 3}}};
    for (int u = 0; u < 4; ++u) {
        dpsi[u] = SymMatrix(4, 4);
        dpsi[u](where[u].first, where[u].second) = RFrac(1);
    }
    const std::array<std::string, 4> names{"m11", "m12", "m21", "m22"};
    std::vector<std::array<RFrac, 5>> eqs;  // coefficients and right hand side
    auto add_matrix_eq = [&](const std::function<SymMatrix(const SymMatrix&)>& f) {
        SymMatrix base = f(psi0);
        std::array<SymMatrix, 4> lin;
        for (int u = 0; u < 4; ++u) lin[u] = f(psi0 + dpsi[u]) - base;
        for (std::size_t r = 0; r < base.rows(); ++r)
            for (std::size_t c = 0; c < base.cols(); ++c) {
                std::array<RFrac, 5> e;
                for (int u = 0; u < 4; ++u) e[u] = lin[u](r, c);
                e[4] = -base(r, c);
                eqs.push_back(e);
            }
    };
    EbcComparison out;
    auto settle = [&](const std::string& stage) {
        SymMatrix aug(eqs.size(), 5);
        for (std::size_t i = 0; i < eqs.size(); ++i)
            for (int j = 0; j < 5; ++j) aug(i, j) = eqs[i][j];
        auto piv = rref(aug);
        if (!piv.empty() && piv.back() == 4) {
            out.stages.push_back(stage + ": inconsistent");
            return false;
        }
        std::string forced;
        for (std::size_t r = 0; r < piv.size(); ++r) {
            bool alone = true;
            for (int j = 0; j < 4; ++j)
                if (static_cast<std::size_t>(j) != piv[r] && !aug(r, j).is_zero()) alone = false;
            if (alone) forced += (forced.empty() ? "" : ", ") + names[piv[r]] + " = " + aug(r, 4).str();
        }
        out.stages.push_back(stage + ": " + (forced.empty() ? "nothing forced" : forced));
        return true;
    };
    for (std::size_t s = 1; s + 1 < ex.fil.size(); ++s) {
        SymMatrix ann = left_annihilator(ey.fil[s].basis);
        const SymMatrix& src = ex.fil[s].basis;
        add_matrix_eq([&](const SymMatrix& psi) { return ann * psi * src; });
    }
    if (!settle("Fil")) return out.distinguished = true, out;
    add_matrix_eq([&](const SymMatrix& psi) { return psi * phix - phiy * psi; });
    if (!settle("phi")) return out.distinguished = true, out;
    add_matrix_eq([&](const SymMatrix& psi) { return psi * ex.n_op - ey.n_op * psi; });
    if (!settle("N")) return out.distinguished = true, out;
    return out;
}

bool ebc_distinguish(const EbcPair& x, const EbcPair& y, int k, const std::optional<RFrac>& ahat) {
    return ebc_compare(x, y, k, ahat).distinguished;
}

std::string PairConstraint::str() const {
    switch (kind) {
        case Always: return "always";
        case Never: {
            Rat e = m < 0 ? Rat(-m) : m;
            return power("p", e) + " = 1";
        }
        case Equation: break;
    }
    std::string lhs = power("ahat", Rat(n));
    return lhs + " = " + (m == 0 ? std::string("1") : power("p", m));
}

namespace {
ObstructionReport obstruction_from(const std::vector<ValuedScalar>& ev,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    ObstructionReport rep;
    std::set<std::string> eqs;
    ValuedScalar p = ValuedScalar::p_pow(1);
    for (auto [i, j] : pairs) {
        PairConstraint c = equality_constraint(ev[i], p * ev[j]);
        c.i = i, c.j = j;
        if (c.kind == PairConstraint::Equation) eqs.insert(c.str());
        if (c.kind == PairConstraint::Always) rep.unconditional = true;
        rep.pairs.push_back(c);
    }
    rep.equations.assign(eqs.begin(), eqs.end());
    return rep;
}
}  // namespace

ObstructionReport monodromy_obstruction(const std::vector<ValuedScalar>& eigenvalues) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = 0; j < eigenvalues.size(); ++j)
            if (i != j) pairs.push_back({i, j});
    return obstruction_from(eigenvalues, pairs);
}

ObstructionReport monodromy_obstruction(const std::vector<ValuedScalar>& eigenvalues,
                                        const std::vector<std::size_t>& sub) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto j : sub)
        if (j >= eigenvalues.size()) throw std::out_of_range("sub index out of range");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        if (std::find(sub.begin(), sub.end(), i) != sub.end()) continue;
        for (auto j : sub) pairs.push_back({i, j});
    }
    return obstruction_from(eigenvalues, pairs);
}

bool weil_excluded(const PairConstraint& c, int k) {
    switch (c.kind) {
        case PairConstraint::Always: return false;
        case PairConstraint::Never: return true;
        case PairConstraint::Equation: return c.m != rat(c.n * (k - 1), 2);
    }
    return false;
}

std::vector<ValuedScalar> e2prime_eigenvalues(int k) {
    return {ValuedScalar::make(0, 0), ValuedScalar::make(rat(3 * k - 2, 2), -3), ValuedScalar::make(rat(k, 2), -1),
            ValuedScalar::make(rat(-(k - 2), 2), 1), ValuedScalar::make(rat(-(3 * k - 4), 2), 3)};
}

std::vector<ValuedScalar> b_list_eigenvalues(int k) {
    return {ValuedScalar::make(-(k - 1), 2), ValuedScalar::make(rat(-(k - 2), 2), 1),
            ValuedScalar::make(rat(-k, 2), 1),       ValuedScalar::make(0, 0),
            ValuedScalar::make(rat(k, 2), -1),       ValuedScalar::make(rat(k - 2, 2), -1),
            ValuedScalar::make(k - 1, -2)};
}

std::vector<std::string> e2prime_displayed_constraints(int k) {
    auto eq = [](int n, const Rat& m) {
        PairConstraint c;
        c.kind = PairConstraint::Equation;
        c.n = n;
        c.m = m;
        return c.str();
    };
    std::vector<std::string> out{eq(3, rat(3 * k - 4, 2)), eq(3, rat(3 * k - 2, 2)), eq(1, rat(k - 2, 2)),
                                 eq(1, rat(k, 2))};
    std::sort(out.begin(), out.end());
    return out;
}

bool sym2_fil0_test(const RFrac& a, const RFrac& b) {
    SymMatrix m{{RFrac(1), RFrac(), a * a}, {RFrac(), RFrac(1), RFrac(2) * a * b}, {RFrac(), RFrac(), b * b}};
    if (m(0, 2).is_zero() && m(1, 2).is_zero() && m(2, 2).is_zero())
        throw AlgebraError("a^2 w11 + 2ab w12 + b^2 w22 is zero");
    return mat_rank_symbolic(m) == 3;
}

std::vector<Inequation> distinctness_check(int k) {
    if (k < 2) throw std::invalid_argument("distinctness_check needs k >= 2");
    const std::array<ValuedScalar, 4> nums{ValuedScalar::make(0, 1), ValuedScalar::make(k - 1, -1),
                                           ValuedScalar::make(1, 1), ValuedScalar::make(k, -1)};
    const std::array<std::string, 4> names{"ahat", power("p", Rat(k - 1)) + "*ahat^-1", "p*ahat",
                                           power("p", Rat(k)) + "*ahat^-1"};
    std::vector<Inequation> out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            PairConstraint c = equality_constraint(nums[i], nums[j]);
            Inequation q{names[i], names[j], c.str(), ""};
            if (c.kind == PairConstraint::Never)
                q.justification = "trivial";
            else if (!weil_excluded(c, k))
                q.justification = "assumption";
            else
                q.justification = "valuation bound";
            out.push_back(q);
        }
    return out;
}

}  // namespace g2forge
