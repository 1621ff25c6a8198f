#pragma once

#include "g2forge/rfrac.hpp"

#include <functional>
#include <initializer_list>
#include <vector>

namespace g2forge {

class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(std::size_t rows, std::size_t cols);
    SymMatrix(std::initializer_list<std::initializer_list<RFrac>> rows);

    static SymMatrix identity(std::size_t n);
    static SymMatrix diag(const std::vector<RFrac>& d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    RFrac& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const RFrac& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    SymMatrix operator+(const SymMatrix& o) const;
    SymMatrix operator-(const SymMatrix& o) const;
    SymMatrix operator*(const SymMatrix& o) const;
    SymMatrix scaled(const RFrac& s) const;
    SymMatrix transpose() const;
    SymMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    SymMatrix map(const std::function<RFrac(const RFrac&)>& f) const;
    SymMatrix subst(const std::string& v, const RFrac& val) const;
    SymMatrix subst(const Assignment& a) const;

    bool is_zero() const;
    bool operator==(const SymMatrix& o) const;
    bool operator!=(const SymMatrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<RFrac> e_;
};

SymMatrix mat_mul(const SymMatrix& a, const SymMatrix& b);
// Fraction-free (Bareiss) determinant after clearing row denominators.
RFrac mat_det(const SymMatrix& a);
// Gauss-Jordan inverse; ZeroPivot when singular.
SymMatrix mat_inverse(const SymMatrix& a);
// Rank over the rational function field (exact zero tests).
std::size_t mat_rank_symbolic(const SymMatrix& a);
// Cofactor expansion, used as an independent check of mat_det.
RFrac mat_det_cofactor(const SymMatrix& a);

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix mat_eval(const SymMatrix& a, const Assignment& at);
// Fraction-free integer elimination after scaling rows to integers.
std::size_t mat_rank(const RatMatrix& a);
std::size_t mat_rank(const SymMatrix& a, const Assignment& at);
// Basis of the right kernel over Q.
std::vector<std::vector<Rat>> mat_kernel(const RatMatrix& a);
// One solution of a x = b over Q, or nullopt if inconsistent.
std::optional<std::vector<Rat>> mat_solve(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace g2forge
