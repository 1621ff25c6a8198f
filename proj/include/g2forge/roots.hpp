#pragma once

#include "g2forge/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2forge {

// a*alpha + b*beta; alpha long, beta short.
struct Weight {
    Rat a, b;

    Weight() : a(0), b(0) {}
    Weight(const Rat& ca, const Rat& cb) : a(ca), b(cb) {}
    // x(2alpha+3beta) + y(alpha+2beta); this is also the fundamental-weight basis
    static Weight from_fund(const Rat& x, const Rat& y) { return {2 * x + y, 3 * x + 2 * y}; }
    std::pair<Rat, Rat> to_fund() const { return {2 * a - b, 2 * b - 3 * a}; }

    Weight operator+(const Weight& o) const { return {a + o.a, b + o.b}; }
    Weight operator-(const Weight& o) const { return {a - o.a, b - o.b}; }
    Weight operator-() const { return {-a, -b}; }
    Weight operator*(const Rat& s) const { return {a * s, b * s}; }
    bool operator==(const Weight& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Weight& o) const { return !(*this == o); }

    // (alpha,alpha)=6, (beta,beta)=2, (alpha,beta)=-3
    Rat inner(const Weight& o) const;
    // <this, g^vee> = 2(this,g)/(g,g)
    Rat pair(const Weight& g) const;
    bool nonneg() const { return a >= 0 && b >= 0; }
    bool is_integral() const { return a.get_den() == 1 && b.get_den() == 1; }

    std::string str() const;
};

namespace roots {
Weight alpha();
Weight beta();
Weight rho();  // 3alpha + 5beta
const std::vector<Weight>& positive();  // alpha, beta, a+b, a+2b, a+3b, 2a+3b
bool is_long(const Weight& g);
}  // namespace roots

using IMat2 = std::array<std::array<long, 2>, 2>;

class WeylElement {
public:
    // word over {'a','b'} read as a product, acting right-to-left; "" is 1
    static WeylElement from_word(const std::string& word);
    static WeylElement longest();  // w_{-1}, stored as -I

    const std::string& word() const { return word_; }
    std::string name() const;  // "1", "w_ba", ...
    std::size_t length() const { return word_.size(); }
    const IMat2& matrix() const { return m_; }

    Weight act(const Weight& l) const;
    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return m_ == o.m_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

private:
    std::string word_;
    IMat2 m_{};
};

// The 12 elements, reduced words, sorted by length then word.
const std::vector<WeylElement>& weyl_group();
WeylElement weyl_from_matrix(const IMat2& m);

Weight weyl_act(const WeylElement& w, const Weight& l);
// w*l = w(l+rho) - rho
Weight dot_act(const WeylElement& w, const Weight& l);
// number of positive roots sent to negative roots
std::size_t inversions(const WeylElement& w);

enum class Parabolic { B, Palpha, Pbeta, G2 };
std::string parabolic_name(Parabolic p);
Parabolic parse_parabolic(const std::string& s);

// positive roots of the Levi (alpha for Palpha, beta for Pbeta)
std::vector<Weight> levi_positive_roots(Parabolic p);
std::vector<Weight> radical_roots(Parabolic p);
std::size_t radical_dim(Parabolic p);
std::vector<WeylElement> minimal_coset_reps(Parabolic p);
Weight two_rho(Parabolic p);
// rho of the Levi
Weight rho_levi(Parabolic p);
// the Eisenstein subsets W_Eis^{M_P}
std::vector<WeylElement> eis_set(Parabolic p);

// {w != 1 : mu - lambda + w*lambda is a nonnegative combination of alpha, beta}
std::vector<WeylElement> critical_set(const Weight& mu, const Weight& lambda);

// ((k-4)/2)(2alpha+3beta)
Weight lambda0(const Rat& k);
// s_p(2alpha+3beta)+beta
Weight critical_slope(const Rat& s_p);

}  // namespace g2forge

namespace g2forge {

// Weight with polynomial coefficients, for statements uniform in parameters.
struct PWeight {
    MPoly a, b;

    PWeight() = default;
    PWeight(const MPoly& ca, const MPoly& cb) : a(ca), b(cb) {}
    PWeight(const Weight& w) : a(w.a), b(w.b) {}  // NOLINT
    static PWeight from_fund(const MPoly& x, const MPoly& y) { return {x.scaled(2) + y, x.scaled(3) + y.scaled(2)}; }

    PWeight operator+(const PWeight& o) const { return {a + o.a, b + o.b}; }
    PWeight operator-(const PWeight& o) const { return {a - o.a, b - o.b}; }
    PWeight operator-() const { return {-a, -b}; }
    PWeight scaled(const Rat& s) const { return {a.scaled(s), b.scaled(s)}; }
    bool operator==(const PWeight& o) const { return a == o.a && b == o.b; }
    Weight eval(const Assignment& at) const { return {a.eval(at), b.eval(at)}; }
    std::string str() const { return "(" + a.str() + ")alpha + (" + b.str() + ")beta"; }
};

PWeight weyl_act(const WeylElement& w, const PWeight& l);
PWeight dot_act(const WeylElement& w, const PWeight& l);

}  // namespace g2forge
