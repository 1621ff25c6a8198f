#include "g2forge/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2forge {

Rat Weight::inner(const Weight& o) const { return 6 * a * o.a + 2 * b * o.b - 3 * (a * o.b + b * o.a); }

Rat Weight::pair(const Weight& g) const {
    Rat gg = g.inner(g);
    if (gg == 0) throw AlgebraError("pairing with the zero weight");
    return 2 * inner(g) / gg;
}

std::string Weight::str() const {
    auto coeff = [](const Rat& c, const char* sym) {
        if (c == 1) return std::string(sym);
        if (c == -1) return "-" + std::string(sym);
        return c.get_str() + std::string(sym);
    };
    if (a == 0 && b == 0) return "0";
    std::string s;
    if (a != 0) s = coeff(a, "alpha");
    if (b != 0) {
        std::string t = coeff(b, "beta");
        if (s.empty())
            s = t;
        else
            s += (b < 0 ? " - " + t.substr(1) : " + " + t);
    }
    return s;
}

namespace roots {
Weight alpha() { return {1, 0}; }
Weight beta() { return {0, 1}; }
Weight rho() { return {3, 5}; }

const std::vector<Weight>& positive() {
    static const std::vector<Weight> r{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    return r;
}

bool is_long(const Weight& g) { return g.inner(g) == 6; }
}  // namespace roots

namespace {
const IMat2 kSa{{{-1, 1}, {0, 1}}};  // columns: alpha -> -alpha, beta -> alpha+beta
const IMat2 kSb{{{1, 0}, {3, -1}}};  // columns: alpha -> alpha+3beta, beta -> -beta
const IMat2 kId{{{1, 0}, {0, 1}}};

IMat2 mul(const IMat2& x, const IMat2& y) {
    IMat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

IMat2 word_matrix(const std::string& w) {
    IMat2 m = kId;
    for (char c : w) {
        if (c == 'a')
            m = mul(m, kSa);
        else if (c == 'b')
            m = mul(m, kSb);
        else
            throw std::invalid_argument(std::string("Weyl word letter must be 'a' or 'b', got '") + c + "'");
    }
    return m;
}

const std::vector<std::string>& reduced_words() {
    static const std::vector<std::string> w{"",     "a",     "b",     "ab",     "ba",
                                            "aba",  "bab",   "abab",  "baba",   "ababa",
                                            "babab", "ababab"};
    return w;
}
}  // namespace

WeylElement WeylElement::from_word(const std::string& word) {
    IMat2 m = word_matrix(word);
    for (auto& r : reduced_words())
        if (word_matrix(r) == m) {
            WeylElement e;
            e.word_ = r;
            e.m_ = m;
            return e;
        }
    throw std::logic_error("Weyl word " + word + " did not reduce");
}

WeylElement WeylElement::longest() {
    WeylElement e;
    e.word_ = "ababab";
    e.m_ = IMat2{{{-1, 0}, {0, -1}}};
    if (word_matrix("ababab") != e.m_ || word_matrix("bababa") != e.m_)
        throw std::logic_error("longest element is not -1");
    return e;
}

std::string WeylElement::name() const { return word_.empty() ? "1" : "w_" + word_; }

Weight WeylElement::act(const Weight& l) const {
    return {m_[0][0] * l.a + m_[0][1] * l.b, m_[1][0] * l.a + m_[1][1] * l.b};
}

WeylElement WeylElement::operator*(const WeylElement& o) const { return weyl_from_matrix(mul(m_, o.m_)); }

WeylElement WeylElement::inverse() const {
    std::string r(word_.rbegin(), word_.rend());
    return from_word(r);
}

const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> g = [] {
        std::vector<WeylElement> v;
        for (auto& w : reduced_words()) v.push_back(WeylElement::from_word(w));
        return v;
    }();
    return g;
}

WeylElement weyl_from_matrix(const IMat2& m) {
    for (auto& w : weyl_group())
        if (w.matrix() == m) return w;
    throw std::logic_error("matrix is not in the Weyl group");
}

Weight weyl_act(const WeylElement& w, const Weight& l) { return w.act(l); }

Weight dot_act(const WeylElement& w, const Weight& l) { return w.act(l + roots::rho()) - roots::rho(); }

std::size_t inversions(const WeylElement& w) {
    std::size_t n = 0;
    for (auto& g : roots::positive())
        if (!w.act(g).nonneg()) ++n;
    return n;
}

std::string parabolic_name(Parabolic p) {
    switch (p) {
        case Parabolic::B: return "B";
        case Parabolic::Palpha: return "Palpha";
        case Parabolic::Pbeta: return "Pbeta";
        case Parabolic::G2: return "G2";
    }
    return "?";
}

Parabolic parse_parabolic(const std::string& s) {
    if (s == "B" || s == "borel") return Parabolic::B;
    if (s == "Palpha" || s == "alpha") return Parabolic::Palpha;
    if (s == "Pbeta" || s == "beta") return Parabolic::Pbeta;
    if (s == "G2") return Parabolic::G2;
    throw std::invalid_argument("unknown parabolic '" + s + "'");
}

std::vector<Weight> levi_positive_roots(Parabolic p) {
    switch (p) {
        case Parabolic::B: return {};
        case Parabolic::Palpha: return {roots::alpha()};
        case Parabolic::Pbeta: return {roots::beta()};
        case Parabolic::G2: return roots::positive();
    }
    return {};
}

std::vector<Weight> radical_roots(Parabolic p) {
    auto levi = levi_positive_roots(p);
    std::vector<Weight> out;
    for (auto& g : roots::positive())
        if (std::find(levi.begin(), levi.end(), g) == levi.end()) out.push_back(g);
    return out;
}

std::size_t radical_dim(Parabolic p) { return radical_roots(p).size(); }

std::vector<WeylElement> minimal_coset_reps(Parabolic p) {
    if (p == Parabolic::G2) throw std::invalid_argument("coset representatives need a proper parabolic");
    auto levi = levi_positive_roots(p);
    std::vector<WeylElement> out;
    for (auto& w : weyl_group()) {
        WeylElement wi = w.inverse();
        bool ok = std::all_of(levi.begin(), levi.end(), [&](const Weight& g) { return wi.act(g).nonneg(); });
        if (ok) out.push_back(w);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const WeylElement& x, const WeylElement& y) { return x.length() < y.length(); });
    return out;
}

Weight two_rho(Parabolic p) {
    if (p == Parabolic::G2) throw std::invalid_argument("2rho_P needs a proper parabolic");
    Weight s;
    for (auto& g : radical_roots(p)) s = s + g;
    return s;
}

Weight rho_levi(Parabolic p) {
    Weight s;
    for (auto& g : levi_positive_roots(p)) s = s + g;
    return s * Rat(1, 2);
}

std::vector<WeylElement> eis_set(Parabolic p) {
    switch (p) {
        case Parabolic::Palpha: return {WeylElement::from_word(""), WeylElement::from_word("b"), WeylElement::from_word("ba")};
        case Parabolic::Pbeta: return {WeylElement::from_word(""), WeylElement::from_word("a"), WeylElement::from_word("ab")};
        case Parabolic::B: return {WeylElement::from_word("")};
        case Parabolic::G2: break;
    }
    throw std::invalid_argument("Eisenstein set needs a proper parabolic");
}

std::vector<WeylElement> critical_set(const Weight& mu, const Weight& lambda) {
    std::vector<WeylElement> out;
    for (auto& w : weyl_group()) {
        if (w.length() == 0) continue;
        if ((mu - lambda + dot_act(w, lambda)).nonneg()) out.push_back(w);
    }
    return out;
}

Weight lambda0(const Rat& k) { return Weight::from_fund((k - 4) / 2, 0); }

Weight critical_slope(const Rat& s_p) { return Weight::from_fund(s_p, 0) + roots::beta(); }

}  // namespace g2forge

namespace g2forge {

PWeight weyl_act(const WeylElement& w, const PWeight& l) {
    const auto& m = w.matrix();
    return {l.a.scaled(m[0][0]) + l.b.scaled(m[0][1]), l.a.scaled(m[1][0]) + l.b.scaled(m[1][1])};
}

PWeight dot_act(const WeylElement& w, const PWeight& l) {
    PWeight r(roots::rho());
    return weyl_act(w, l + r) - r;
}

}  // namespace g2forge
