#include "g2forge/matrix.hpp"

#include <sstream>

namespace g2forge {

SymMatrix::SymMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<RFrac>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (auto& row : rows) {
        if (row.size() != c_) throw DimensionMismatch("ragged matrix literal");
        e_.insert(e_.end(), row.begin(), row.end());
    }
}

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RFrac(1);
    return m;
}

SymMatrix SymMatrix::diag(const std::vector<RFrac>& d) {
    SymMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sum of incompatible shapes");
    SymMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix difference of incompatible shapes");
    SymMatrix m = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

SymMatrix SymMatrix::operator*(const SymMatrix& o) const {
    if (c_ != o.r_)
        throw DimensionMismatch("cannot multiply " + std::to_string(r_) + "x" + std::to_string(c_) + " by " +
                                std::to_string(o.r_) + "x" + std::to_string(o.c_));
    SymMatrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const RFrac& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const RFrac& b = o(k, j);
                if (b.is_zero()) continue;
                m(i, j) += a * b;
            }
        }
    return m;
}

SymMatrix mat_mul(const SymMatrix& a, const SymMatrix& b) { return a * b; }

SymMatrix SymMatrix::scaled(const RFrac& s) const {
    SymMatrix m = *this;
    for (auto& x : m.e_) x = x * s;
    return m;
}

SymMatrix SymMatrix::transpose() const {
    SymMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

SymMatrix SymMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) throw DimensionMismatch("block out of range");
    SymMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

SymMatrix SymMatrix::map(const std::function<RFrac(const RFrac&)>& f) const {
    SymMatrix m = *this;
    for (auto& x : m.e_) x = f(x);
    return m;
}

SymMatrix SymMatrix::subst(const std::string& v, const RFrac& val) const {
    return map([&](const RFrac& x) { return x.subst(v, val); });
}

SymMatrix SymMatrix::subst(const Assignment& a) const {
    return map([&](const RFrac& x) { return x.subst(a); });
}

bool SymMatrix::is_zero() const {
    for (auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool SymMatrix::operator==(const SymMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

std::string SymMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "") << "[";
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {
MPoly lcm_den(const MPoly& acc, const MPoly& d) {
    if (d.is_const()) return acc;
    if (acc.is_const()) return d;
    if (acc.is_monomial() && d.is_monomial()) return MPoly::monomial(Mono::lcm(acc.lead_mono(), d.lead_mono()), 1);
    if (MPoly::divide_exact(acc, d)) return acc;
    if (MPoly::divide_exact(d, acc)) return d;
    return acc * d;
}
}  // namespace

RFrac mat_det(const SymMatrix& a) {
    if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return RFrac(1);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
    MPoly scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        MPoly L(1);
        for (std::size_t j = 0; j < n; ++j) L = lcm_den(L, a(i, j).den());
        for (std::size_t j = 0; j < n; ++j) {
            auto f = MPoly::divide_exact(L, a(i, j).den());
            if (!f) throw AlgebraError("row denominator clearing failed");
            m[i][j] = a(i, j).num() * *f;
        }
        scale = scale * L;
    }
    int sign = 1;
    MPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return RFrac();
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = MPoly::divide_exact(t, prev);
                if (!q) throw AlgebraError("Bareiss step not exact");
                m[i][j] = *q;
            }
            m[i][k] = MPoly();
        }
        prev = m[k][k];
    }
    MPoly d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return RFrac(d, scale);
}

RFrac mat_det_cofactor(const SymMatrix& a) {
    if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return RFrac(1);
    if (n == 1) return a(0, 0);
    RFrac total;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) continue;
        SymMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(i - 1, cc++) = a(i, c);
        RFrac t = a(0, j) * mat_det_cofactor(minor);
        total = (j % 2) ? total - t : total + t;
    }
    return total;
}

SymMatrix mat_inverse(const SymMatrix& a) {
    if (!a.square()) throw DimensionMismatch("inverse of a non-square matrix");
    std::size_t n = a.rows();
    SymMatrix m = a, inv = SymMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) throw ZeroPivot("matrix is singular: column " + std::to_string(k + 1) + " has no nonzero pivot");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        RFrac piv = m(k, k).inv();
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = m(k, j) * piv;
            inv(k, j) = inv(k, j) * piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            RFrac f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::size_t mat_rank_symbolic(const SymMatrix& a) {
    SymMatrix m = a;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        RFrac piv = m(rank, c).inv();
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            RFrac f = m(i, c) * piv;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(rank, j).is_zero()) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

RatMatrix mat_eval(const SymMatrix& a, const Assignment& at) {
    RatMatrix out(a.rows(), std::vector<Rat>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).eval(at);
    return out;
}

std::size_t mat_rank(const RatMatrix& a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw DimensionMismatch("ragged rational matrix");
        mpz_class L = 1;
        for (auto& x : a[i]) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].get_num() * (L / a[i][j].get_den());
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[i][j] * m[rank][c] - m[i][c] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t mat_rank(const SymMatrix& a, const Assignment& at) { return mat_rank(mat_eval(a, at)); }

namespace {
// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}
}  // namespace

std::vector<std::vector<Rat>> mat_kernel(const RatMatrix& a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    RatMatrix m = a;
    auto piv = rref(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::vector<Rat>> mat_solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("right-hand side length differs from row count");
    if (a.empty()) return std::vector<Rat>{};
    std::size_t cols = a[0].size();
    RatMatrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto piv = rref(m, cols);
    for (std::size_t r = piv.size(); r < m.size(); ++r)
        if (m[r][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][cols];
    return x;
}

}  // namespace g2forge
