#include "g2forge/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace g2forge {

Rat rat(long num, long den) {
    if (den == 0) throw AlgebraError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& text) {
    Rat q;
    if (text.empty() || q.set_str(text, 10) != 0) throw AlgebraError("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw AlgebraError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

namespace sym {
namespace {
struct Table {
    std::mutex mu;
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<std::string> names;
};
Table& table() {
    static Table t;
    return t;
}
}  // namespace

std::uint32_t intern(const std::string& name) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    auto id = static_cast<std::uint32_t>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

const std::string& name(std::uint32_t id) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(id);
}
}  // namespace sym

// ---- Mono

Mono Mono::var(std::uint32_t id, unsigned e) {
    Mono m;
    if (e == 0) return m;
    m.e_.assign(id + 1, 0);
    m.e_[id] = static_cast<std::uint16_t>(e);
    return m;
}

void Mono::trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

unsigned Mono::degree() const {
    unsigned d = 0;
    for (auto x : e_) d += x;
    return d;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.e_.assign(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < r.e_.size(); ++i) {
        unsigned s = exp(static_cast<std::uint32_t>(i)) + o.exp(static_cast<std::uint32_t>(i));
        if (s > 0xffff) throw AlgebraError("exponent overflow");
        r.e_[i] = static_cast<std::uint16_t>(s);
    }
    return r;
}

bool Mono::divides(const Mono& o) const {
    if (e_.size() > o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Mono Mono::quot(const Mono& o) const {
    Mono r = *this;
    for (std::size_t i = 0; i < o.e_.size(); ++i) {
        if (i >= r.e_.size() || r.e_[i] < o.e_[i]) throw AlgebraError("monomial quotient not exact");
        r.e_[i] = static_cast<std::uint16_t>(r.e_[i] - o.e_[i]);
    }
    r.trim();
    return r;
}

Mono Mono::gcd(const Mono& a, const Mono& b) {
    Mono r;
    r.e_.assign(std::min(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.trim();
    return r;
}

Mono Mono::lcm(const Mono& a, const Mono& b) {
    Mono r;
    r.e_.assign(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] = static_cast<std::uint16_t>(
            std::max(a.exp(static_cast<std::uint32_t>(i)), b.exp(static_cast<std::uint32_t>(i))));
    return r;
}

bool Mono::operator<(const Mono& o) const {
    std::size_t n = std::max(e_.size(), o.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned a = exp(static_cast<std::uint32_t>(i)), b = o.exp(static_cast<std::uint32_t>(i));
        if (a != b) return a < b;
    }
    return false;
}

namespace {
// (name, exponent) pairs sorted by name
std::vector<std::pair<std::string, unsigned>> named(const Mono& m) {
    std::vector<std::pair<std::string, unsigned>> v;
    for (std::uint32_t i = 0; i < m.width(); ++i)
        if (m.exp(i)) v.emplace_back(sym::name(i), m.exp(i));
    std::sort(v.begin(), v.end());
    return v;
}
}  // namespace

std::string Mono::str() const {
    std::string s;
    for (auto& [n, e] : named(*this)) {
        if (!s.empty()) s += "*";
        s += n;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

// ---- MPoly

MPoly::MPoly(const Rat& c) {
    if (c != 0) t_.emplace(Mono(), c);
}

MPoly MPoly::var(const std::string& name, unsigned e) { return monomial(Mono::var(sym::intern(name), e), 1); }

MPoly MPoly::monomial(const Mono& m, const Rat& c) {
    MPoly p;
    if (c != 0) p.t_.emplace(m, c);
    return p;
}

bool MPoly::is_const() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

Rat MPoly::const_value() const {
    auto it = t_.find(Mono());
    return it == t_.end() ? Rat(0) : it->second;
}

unsigned MPoly::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

unsigned MPoly::degree_in(const std::string& v) const {
    auto id = sym::intern(v);
    unsigned d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.exp(id));
    return d;
}

Mono MPoly::mono_content() const {
    if (t_.empty()) return Mono();
    Mono g = t_.begin()->first;
    for (auto& [m, c] : t_) g = Mono::gcd(g, m);
    return g;
}

std::vector<std::string> MPoly::variables() const {
    std::vector<std::string> out;
    std::uint32_t w = 0;
    for (auto& [m, c] : t_) w = std::max<std::uint32_t>(w, static_cast<std::uint32_t>(m.width()));
    for (std::uint32_t i = 0; i < w; ++i)
        for (auto& [m, c] : t_)
            if (m.exp(i)) {
                out.push_back(sym::name(i));
                break;
            }
    std::sort(out.begin(), out.end());
    return out;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }

MPoly MPoly::scaled(const Rat& c) const {
    if (c == 0) return MPoly();
    MPoly r = *this;
    for (auto& [m, x] : r.t_) x *= c;
    return r;
}

MPoly MPoly::mul_mono(const Mono& mm) const {
    MPoly r;
    for (auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m * mm, c);
    return r;
}

MPoly MPoly::div_mono(const Mono& mm) const {
    MPoly r;
    for (auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m.quot(mm), c);
    return r;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Rat MPoly::eval(const Assignment& a) const {
    Rat total = 0;
    std::vector<const Rat*> vals;
    for (auto& [m, c] : t_) {
        Rat term = c;
        for (std::uint32_t i = 0; i < m.width(); ++i) {
            unsigned e = m.exp(i);
            if (!e) continue;
            const auto& n = sym::name(i);
            auto it = a.find(n);
            if (it == a.end()) throw MissingVariable(n);
            for (unsigned k = 0; k < e; ++k) term *= it->second;
        }
        total += term;
    }
    return total;
}

MPoly MPoly::subst(const std::string& v, const MPoly& val) const {
    auto id = sym::intern(v);
    MPoly r;
    std::vector<MPoly> powers{MPoly(1)};
    for (auto& [m, c] : t_) {
        unsigned e = m.exp(id);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        while (powers.size() <= e) powers.push_back(powers.back() * val);
        Mono rest = m.quot(Mono::var(id, e));
        r += powers[e].mul_mono(rest).scaled(c);
    }
    return r;
}

MPoly MPoly::subst(const Assignment& a) const {
    MPoly r = *this;
    for (auto& [n, v] : a) r = r.subst(n, MPoly(v));
    return r;
}

MPoly MPoly::diff(const std::string& v) const {
    auto id = sym::intern(v);
    MPoly r;
    for (auto& [m, c] : t_) {
        unsigned e = m.exp(id);
        if (e) r.add_term(m.quot(Mono::var(id, 1)), c * e);
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw AlgebraError("division by zero polynomial");
    if (f.is_zero()) return MPoly();
    if (g.is_monomial()) {
        const Mono& gm = g.lead_mono();
        for (auto& [m, c] : f.t_)
            if (!gm.divides(m)) return std::nullopt;
        return f.div_mono(gm).scaled(1 / g.lead_coeff());
    }
    // Remainders of an exact division never exceed deg f; use that to stop early.
    unsigned bound = f.degree();
    MPoly q, r = f;
    const Mono& lg = g.lead_mono();
    Rat lc = g.lead_coeff();
    while (!r.is_zero()) {
        const Mono& lr = r.lead_mono();
        if (!lg.divides(lr) || r.degree() > bound) return std::nullopt;
        MPoly t = monomial(lr.quot(lg), r.lead_coeff() / lc);
        q += t;
        r -= t * g;
    }
    return q;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    struct Row {
        unsigned deg;
        std::vector<std::pair<std::string, unsigned>> key;
        std::string mono;
        Rat c;
    };
    std::vector<Row> rows;
    for (auto& [m, c] : t_) rows.push_back({m.degree(), named(m), m.str(), c});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.key < b.key;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& r : rows) {
        Rat c = r.c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (r.mono == "1") {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << r.mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace g2forge
