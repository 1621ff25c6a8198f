#include "g2forge/valued.hpp"

#include <algorithm>

namespace g2forge {

ValuedScalar::ValuedScalar(const Rat& exponent, const RFrac& unit) : exp_(exponent), unit_(unit) {
    if (unit_.is_zero()) throw AlgebraError("valued scalar with zero unit part");
    for (auto* p : {&unit_.num(), &unit_.den()}) {
        auto vars = p->variables();
        if (std::find(vars.begin(), vars.end(), kPrimeSymbol) != vars.end())
            throw AlgebraError("unit part may not involve the uniformizer p: " + unit_.str());
    }
}

int ValuedScalar::unit_degree() const {
    const MPoly& n = unit_.num();
    const MPoly& d = unit_.den();
    if (!n.is_monomial() || !d.is_monomial()) throw AlgebraError("unit part is not a monomial: " + unit_.str());
    auto id = sym::intern(kUnitSymbol);
    if (n.lead_mono().degree() != n.lead_mono().exp(id) || d.lead_mono().degree() != d.lead_mono().exp(id))
        throw AlgebraError("unit part involves symbols other than " + std::string(kUnitSymbol));
    return static_cast<int>(n.lead_mono().exp(id)) - static_cast<int>(d.lead_mono().exp(id));
}

RFrac ValuedScalar::as_rfrac() const {
    if (exp_.get_den() != 1) throw AlgebraError("non-integral power of p has no rational-function form");
    long e = exp_.get_num().get_si();
    return RFrac::var_pow(kPrimeSymbol, static_cast<int>(e)) * unit_;
}

std::string ValuedScalar::str() const {
    std::string s;
    if (exp_ != 0) s = "p^(" + exp_.get_str() + ")";
    if (unit_ != RFrac(1)) {
        std::string u = unit_.str();
        s += s.empty() ? u : "*" + (u.find(' ') != std::string::npos ? "(" + u + ")" : u);
    }
    return s.empty() ? "1" : s;
}

}  // namespace g2forge
