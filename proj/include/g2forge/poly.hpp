#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2forge {

using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& q);

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingVariable : AlgebraError {
    std::string symbol;
    explicit MissingVariable(const std::string& s)
        : AlgebraError("no value assigned to variable '" + s + "'"), symbol(s) {}
};

struct DimensionMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};

struct ZeroPivot : AlgebraError {
    using AlgebraError::AlgebraError;
};

// Symbols are interned process-wide; the id fixes the lex order of storage.
// Printing sorts by name so text output does not depend on interning order.
namespace sym {
std::uint32_t intern(const std::string& name);
const std::string& name(std::uint32_t id);
}  // namespace sym

// Exponent vector indexed by symbol id, trailing zeros trimmed.
class Mono {
public:
    Mono() = default;
    static Mono var(std::uint32_t id, unsigned e = 1);

    unsigned exp(std::uint32_t id) const { return id < e_.size() ? e_[id] : 0; }
    std::size_t width() const { return e_.size(); }
    bool is_one() const { return e_.empty(); }
    unsigned degree() const;

    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
    Mono quot(const Mono& o) const;  // *this / o, requires o.divides(*this)
    static Mono gcd(const Mono& a, const Mono& b);
    static Mono lcm(const Mono& a, const Mono& b);

    bool operator==(const Mono& o) const { return e_ == o.e_; }
    // lex order: larger exponent in an earlier symbol is bigger
    bool operator<(const Mono& o) const;

    std::string str() const;

private:
    void trim();
    std::vector<std::uint16_t> e_;
};

struct MonoDesc {
    bool operator()(const Mono& a, const Mono& b) const { return b < a; }
};

using Assignment = std::map<std::string, Rat>;

class MPoly {
public:
    using Terms = std::map<Mono, Rat, MonoDesc>;

    MPoly() = default;
    MPoly(const Rat& c);  // NOLINT: constants promote implicitly
    MPoly(long c) : MPoly(Rat(c)) {}
    static MPoly var(const std::string& name, unsigned e = 1);
    static MPoly monomial(const Mono& m, const Rat& c);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_const() const;
    Rat const_value() const;  // 0 for the zero polynomial
    bool is_monomial() const { return t_.size() == 1; }
    const Mono& lead_mono() const { return t_.begin()->first; }
    const Rat& lead_coeff() const { return t_.begin()->second; }
    unsigned degree() const;
    unsigned degree_in(const std::string& v) const;
    Mono mono_content() const;  // gcd of all monomials
    std::vector<std::string> variables() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
    MPoly operator-(const MPoly& o) const { MPoly r = *this; r -= o; return r; }
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;
    MPoly mul_mono(const Mono& m) const;
    MPoly div_mono(const Mono& m) const;  // requires m | every term
    MPoly pow(unsigned n) const;
    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Rat eval(const Assignment& a) const;
    MPoly subst(const std::string& v, const MPoly& val) const;
    MPoly subst(const Assignment& a) const;  // partial evaluation
    MPoly diff(const std::string& v) const;

    // Exact quotient f/g, or nullopt when g does not divide f.
    static std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

    std::string str() const;

private:
    void add_term(const Mono& m, const Rat& c);
    Terms t_;
};

MPoly operator*(const Rat& c, const MPoly& p);

}  // namespace g2forge
