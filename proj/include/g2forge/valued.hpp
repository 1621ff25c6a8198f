#pragma once

#include "g2forge/rfrac.hpp"

namespace g2forge {

inline constexpr const char* kUnitSymbol = "ahat";
inline constexpr const char* kPrimeSymbol = "p";

// p^exponent * unit, where the unit is a rational function in the formal
// unit ahat (valuation s_p) and never involves p itself.
class ValuedScalar {
public:
    ValuedScalar() : exp_(0), unit_(1) {}
    ValuedScalar(const Rat& exponent, const RFrac& unit);

    static ValuedScalar p_pow(const Rat& e) { return ValuedScalar(e, RFrac(1)); }
    static ValuedScalar unit_pow(int n) { return ValuedScalar(0, RFrac::var_pow(kUnitSymbol, n)); }
    // p^e * ahat^n
    static ValuedScalar make(const Rat& e, int n) { return ValuedScalar(e, RFrac::var_pow(kUnitSymbol, n)); }

    const Rat& exponent() const { return exp_; }
    const RFrac& unit() const { return unit_; }
    // Exponent n when the unit is c*ahat^n; throws otherwise.
    int unit_degree() const;
    Rat valuation(const Rat& s_p) const { return exp_ + s_p * unit_degree(); }

    ValuedScalar operator*(const ValuedScalar& o) const { return {exp_ + o.exp_, unit_ * o.unit_}; }
    ValuedScalar operator/(const ValuedScalar& o) const { return {exp_ - o.exp_, unit_ / o.unit_}; }
    ValuedScalar inv() const { return {-exp_, unit_.inv()}; }
    ValuedScalar pow(int n) const { return {exp_ * n, unit_.pow(n)}; }
    bool operator==(const ValuedScalar& o) const { return exp_ == o.exp_ && unit_ == o.unit_; }
    bool operator!=(const ValuedScalar& o) const { return !(*this == o); }

    // As an element of Q(p, ahat); p^e needs e integral.
    RFrac as_rfrac() const;

    std::string str() const;

private:
    Rat exp_;
    RFrac unit_;
};

}  // namespace g2forge
