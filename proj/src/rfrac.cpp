#include "g2forge/rfrac.hpp"

namespace g2forge {

RFrac::RFrac(const MPoly& n) : num_(n), den_(1) {}

RFrac::RFrac(const MPoly& n, const MPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw AlgebraError("rational function with zero denominator");
    normalize();
}

RFrac RFrac::var_pow(const std::string& name, int e) {
    if (e >= 0) return RFrac(MPoly::var(name, static_cast<unsigned>(e)));
    return RFrac(MPoly(1), MPoly::var(name, static_cast<unsigned>(-e)));
}

void RFrac::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    Mono g = Mono::gcd(num_.mono_content(), den_.mono_content());
    if (!g.is_one()) {
        num_ = num_.div_mono(g);
        den_ = den_.div_mono(g);
    }
    if (!den_.is_monomial()) {
        if (auto q = MPoly::divide_exact(num_, den_)) {
            num_ = *q;
            den_ = MPoly(1);
            return;
        }
        if (auto q = MPoly::divide_exact(den_, num_)) {
            den_ = *q;
            num_ = MPoly(1);
        }
    }
    Rat lc = den_.lead_coeff();
    if (lc != 1) {
        Rat s = 1 / lc;
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }
}

Rat RFrac::const_value() const {
    if (!is_const()) throw AlgebraError("not a constant: " + str());
    return num_.const_value() / den_.const_value();
}

MPoly RFrac::as_poly() const {
    if (!den_.is_const()) throw AlgebraError("not a polynomial: " + str());
    return num_.scaled(1 / den_.const_value());
}

RFrac RFrac::operator-() const {
    RFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {
// Common denominator for a/b + c/d using divisibility before falling back to b*d.
void common(const MPoly& b, const MPoly& d, MPoly& L, MPoly& fb, MPoly& fd) {
    if (b == d) {
        L = b, fb = MPoly(1), fd = MPoly(1);
        return;
    }
    if (b.is_monomial() && d.is_monomial()) {
        Mono l = Mono::lcm(b.lead_mono(), d.lead_mono());
        Rat cb = b.lead_coeff(), cd = d.lead_coeff();
        L = MPoly::monomial(l, cb * cd);
        fb = MPoly::monomial(l.quot(b.lead_mono()), cd);
        fd = MPoly::monomial(l.quot(d.lead_mono()), cb);
        return;
    }
    if (b.is_const()) {
        L = d.scaled(b.const_value()), fb = d, fd = b;
        return;
    }
    if (d.is_const()) {
        L = b.scaled(d.const_value()), fb = d, fd = b;
        return;
    }
    if (auto q = MPoly::divide_exact(d, b)) {
        L = d, fb = *q, fd = MPoly(1);
        return;
    }
    if (auto q = MPoly::divide_exact(b, d)) {
        L = b, fb = MPoly(1), fd = *q;
        return;
    }
    L = b * d, fb = d, fd = b;
}
}  // namespace

RFrac RFrac::operator+(const RFrac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    MPoly L, fb, fd;
    common(den_, o.den_, L, fb, fd);
    return RFrac(num_ * fb + o.num_ * fd, L);
}

RFrac RFrac::operator-(const RFrac& o) const { return *this + (-o); }

RFrac RFrac::operator*(const RFrac& o) const {
    if (is_zero() || o.is_zero()) return RFrac();
    if (den_.is_const() && o.den_.is_const()) {
        RFrac r;
        r.num_ = (num_ * o.num_).scaled(1 / (den_.const_value() * o.den_.const_value()));
        return r;
    }
    // cancel across before multiplying when a denominator divides the other numerator
    MPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_monomial())
        if (auto q = MPoly::divide_exact(n1, d2)) n1 = *q, d2 = MPoly(1);
    if (!d1.is_monomial())
        if (auto q = MPoly::divide_exact(n2, d1)) n2 = *q, d1 = MPoly(1);
    return RFrac(n1 * n2, d1 * d2);
}

RFrac RFrac::inv() const {
    if (is_zero()) throw ZeroPivot("inverse of zero rational function");
    return RFrac(den_, num_);
}

RFrac RFrac::operator/(const RFrac& o) const { return *this * o.inv(); }

RFrac RFrac::pow(int n) const {
    if (n < 0) return inv().pow(-n);
    RFrac r;
    r.num_ = num_.pow(static_cast<unsigned>(n));
    r.den_ = den_.pow(static_cast<unsigned>(n));
    return RFrac(r.num_, r.den_);
}

bool RFrac::operator==(const RFrac& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

Rat RFrac::eval(const Assignment& a) const {
    Rat d = den_.eval(a);
    if (d == 0) throw ZeroPivot("denominator " + den_.str() + " vanishes at the given point");
    return num_.eval(a) / d;
}

namespace {
RFrac subst_poly(const MPoly& p, const std::string& v, const RFrac& val) {
    // Horner in v over the coefficients that do not involve v
    unsigned deg = p.degree_in(v);
    if (deg == 0) return RFrac(p);
    std::vector<MPoly> coeff(deg + 1);
    auto id = sym::intern(v);
    for (auto& [m, c] : p.terms()) {
        unsigned e = m.exp(id);
        coeff[e] += MPoly::monomial(m.quot(Mono::var(id, e)), c);
    }
    RFrac r(coeff[deg]);
    for (unsigned i = deg; i-- > 0;) r = r * val + RFrac(coeff[i]);
    return r;
}
}  // namespace

RFrac RFrac::subst(const std::string& v, const RFrac& val) const {
    return subst_poly(num_, v, val) / subst_poly(den_, v, val);
}

RFrac RFrac::subst(const Assignment& a) const { return RFrac(num_.subst(a), den_.subst(a)); }

RFrac RFrac::diff(const std::string& v) const {
    return RFrac(num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_);
}

std::string RFrac::str() const {
    if (den_.is_const() && den_.const_value() == 1) return num_.str();
    auto wrap = [](const MPoly& p) {
        std::string s = p.str();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace g2forge
