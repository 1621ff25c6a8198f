#pragma once

#include "g2forge/poly.hpp"

namespace g2forge {

// Quotient num/den of polynomials. Laurent monomials live here as monomial
// denominators. Normalization is cheap (monomial content, monic denominator,
// exact division when it succeeds) so equality goes by cross-multiplication.
class RFrac {
public:
    RFrac() : den_(1) {}
    RFrac(const MPoly& n);  // NOLINT
    RFrac(const Rat& c) : RFrac(MPoly(c)) {}  // NOLINT
    RFrac(long c) : RFrac(MPoly(c)) {}  // NOLINT
    RFrac(const MPoly& n, const MPoly& d);

    static RFrac var(const std::string& name) { return RFrac(MPoly::var(name)); }
    // Laurent monomial in one variable
    static RFrac var_pow(const std::string& name, int e);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_const() const { return num_.is_const() && den_.is_const(); }
    Rat const_value() const;
    bool is_poly() const { return den_.is_const(); }
    MPoly as_poly() const;  // throws unless the denominator is constant

    RFrac operator-() const;
    RFrac operator+(const RFrac& o) const;
    RFrac operator-(const RFrac& o) const;
    RFrac operator*(const RFrac& o) const;
    RFrac operator/(const RFrac& o) const;
    RFrac& operator+=(const RFrac& o) { return *this = *this + o; }
    RFrac& operator-=(const RFrac& o) { return *this = *this - o; }
    RFrac& operator*=(const RFrac& o) { return *this = *this * o; }
    RFrac inv() const;
    RFrac pow(int n) const;

    bool operator==(const RFrac& o) const;
    bool operator!=(const RFrac& o) const { return !(*this == o); }

    Rat eval(const Assignment& a) const;
    RFrac subst(const std::string& v, const RFrac& val) const;
    RFrac subst(const Assignment& a) const;
    RFrac diff(const std::string& v) const;

    std::string str() const;

private:
    void normalize();
    MPoly num_, den_;
};

}  // namespace g2forge
