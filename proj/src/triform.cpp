#include "g2forge/triform.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace g2forge {

namespace {

struct TripleTable {
    std::array<std::array<int, 3>, AltTriForm::kTriples> triples{};
    int index[7][7][7];
    TripleTable() {
        std::size_t n = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                for (int k = 0; k < 7; ++k) index[i][j][k] = -1;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                for (int k = j + 1; k < 7; ++k) {
                    triples[n] = {i, j, k};
                    index[i][j][k] = static_cast<int>(n++);
                }
    }
};

const TripleTable& table() {
    static const TripleTable t;
    return t;
}

// sorts (i,j,k) in place and returns the sign of the sorting permutation, 0 on repeats
int sort3(int& i, int& j, int& k) {
    int s = 1;
    if (i > j) std::swap(i, j), s = -s;
    if (j > k) std::swap(j, k), s = -s;
    if (i > j) std::swap(i, j), s = -s;
    if (i == j || j == k) return 0;
    return s;
}

void check_index(int i) {
    if (i < 0 || i > 6) throw std::out_of_range("form index out of range: " + std::to_string(i));
}

RFrac det3(const RFrac& a, const RFrac& b, const RFrac& c, const RFrac& d, const RFrac& e, const RFrac& f,
           const RFrac& g, const RFrac& h, const RFrac& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

std::string label(const std::array<int, 3>& t) {
    return "e" + std::to_string(t[0] + 1) + std::to_string(t[1] + 1) + std::to_string(t[2] + 1);
}

RFrac svar(const std::string& n) { return RFrac::var(n); }

}  // namespace

std::array<int, 3> AltTriForm::triple(std::size_t idx) { return table().triples.at(idx); }

RFrac AltTriForm::at(int i, int j, int k) const {
    check_index(i), check_index(j), check_index(k);
    int s = sort3(i, j, k);
    if (s == 0) return RFrac();
    const RFrac& c = c_[table().index[i][j][k]];
    return s > 0 ? c : -c;
}

void AltTriForm::set(int i, int j, int k, const RFrac& v) {
    check_index(i), check_index(j), check_index(k);
    int s = sort3(i, j, k);
    if (s == 0) throw std::invalid_argument("alternating form coefficient with a repeated index");
    c_[table().index[i][j][k]] = s > 0 ? v : -v;
}

RFrac AltTriForm::eval(const std::vector<RFrac>& u, const std::vector<RFrac>& v, const std::vector<RFrac>& w) const {
    if (u.size() != 7 || v.size() != 7 || w.size() != 7) throw DimensionMismatch("form arguments must have length 7");
    RFrac s;
    for (std::size_t n = 0; n < kTriples; ++n) {
        if (c_[n].is_zero()) continue;
        auto [p, q, r] = triple(n);
        s += c_[n] * det3(u[p], v[p], w[p], u[q], v[q], w[q], u[r], v[r], w[r]);
    }
    return s;
}

AltTriForm AltTriForm::pullback(const SymMatrix& g) const {
    if (g.rows() != 7 || g.cols() != 7) throw DimensionMismatch("pullback needs a 7x7 matrix");
    AltTriForm out;
    for (std::size_t m = 0; m < kTriples; ++m) {
        auto [i, j, k] = triple(m);
        RFrac s;
        for (std::size_t n = 0; n < kTriples; ++n) {
            if (c_[n].is_zero()) continue;
            auto [p, q, r] = triple(n);
            s += c_[n] * det3(g(p, i), g(p, j), g(p, k), g(q, i), g(q, j), g(q, k), g(r, i), g(r, j), g(r, k));
        }
        out.c_[m] = s;
    }
    return out;
}

AltTriForm AltTriForm::derivation(const SymMatrix& x) const {
    if (x.rows() != 7 || x.cols() != 7) throw DimensionMismatch("derivation needs a 7x7 matrix");
    AltTriForm out;
    for (std::size_t m = 0; m < kTriples; ++m) {
        auto [i, j, k] = triple(m);
        RFrac s;
        for (int l = 0; l < 7; ++l) {
            if (!x(l, i).is_zero()) s += at(l, j, k) * x(l, i);
            if (!x(l, j).is_zero()) s += at(i, l, k) * x(l, j);
            if (!x(l, k).is_zero()) s += at(i, j, l) * x(l, k);
        }
        out.c_[m] = s;
    }
    return out;
}

AltTriForm AltTriForm::relabel(const std::array<int, 7>& sigma) const {
    AltTriForm out;
    for (std::size_t n = 0; n < kTriples; ++n) {
        if (c_[n].is_zero()) continue;
        auto [i, j, k] = triple(n);
        out.set(sigma[i], sigma[j], sigma[k], c_[n]);
    }
    return out;
}

AltTriForm AltTriForm::subst(const Assignment& at) const {
    AltTriForm out;
    for (std::size_t n = 0; n < kTriples; ++n) out.c_[n] = c_[n].subst(at);
    return out;
}

AltTriForm AltTriForm::operator-(const AltTriForm& o) const {
    AltTriForm out;
    for (std::size_t n = 0; n < kTriples; ++n) out.c_[n] = c_[n] - o.c_[n];
    return out;
}

bool AltTriForm::is_zero() const { return nonzero_count() == 0; }

std::size_t AltTriForm::nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const RFrac& c) { return !c.is_zero(); }));
}

std::string AltTriForm::str() const {
    std::string s;
    for (std::size_t n = 0; n < kTriples; ++n) {
        const RFrac& c = c_[n];
        if (c.is_zero()) continue;
        std::string term;
        bool neg = false;
        if (c == RFrac(1))
            term = label(triple(n));
        else if (c == RFrac(-1))
            term = label(triple(n)), neg = true;
        else
            term = "(" + c.str() + ")*" + label(triple(n));
        if (s.empty())
            s = neg ? "-" + term : term;
        else
            s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

AltTriForm generic_form(const RFrac& a) {
    if (a.is_zero()) throw std::invalid_argument("generic_form needs a != 0");
    AltTriForm f;
    f.set(0, 3, 6, RFrac(1));
    f.set(0, 4, 5, RFrac(1));
    f.set(1, 2, 6, RFrac(1));
    f.set(1, 3, 5, RFrac(-1));
    f.set(2, 3, 4, a);
    return f;
}

AltTriForm standard_form() {
    AltTriForm f;
    f.set(0, 1, 2, RFrac(1));
    f.set(3, 4, 5, RFrac(1));
    f.set(0, 3, 6, RFrac(1));
    f.set(1, 4, 6, RFrac(1));
    f.set(2, 5, 6, RFrac(1));
    return f;
}

std::vector<RFrac> literal_scaling(const RFrac& a) {
    RFrac ai = a.inv();
    return {RFrac(1), RFrac(1), a, -ai, -a, ai, ai};
}

std::vector<RFrac> cube_root_scaling(const RFrac& b) {
    RFrac bi = b.inv();
    return {RFrac(1), RFrac(1), b, -b, -b, bi, bi};
}

GenericityWitness genericity_witness(const std::vector<RFrac>& scaling, const RFrac& target_a) {
    if (scaling.size() != 7) throw DimensionMismatch("scaling needs 7 entries");
    Perm7 sigma = parse_cycles("(2635)(47)");
    // F(Qu) relabels e_i^vee to e_sigma(i)^vee when Q(i, sigma(i)) = 1
    SymMatrix q(7, 7);
    for (int i = 0; i < 7; ++i) q(i, sigma[i]) = RFrac(1);
    GenericityWitness w;
    w.scaling = scaling;
    w.transform = q * SymMatrix::diag(scaling);
    w.result = standard_form().pullback(w.transform);
    w.target = generic_form(target_a);
    for (std::size_t n = 0; n < AltTriForm::kTriples; ++n)
        if (w.result.coeff(n) != w.target.coeff(n))
            w.mismatches.push_back(label(AltTriForm::triple(n)) + ": " + w.result.coeff(n).str() +
                                   " != " + w.target.coeff(n).str());
    w.exact = w.mismatches.empty();
    return w;
}

const std::vector<Weight>& subgroup_roots() {
    static const std::vector<Weight> r = [] {
        std::vector<Weight> v = roots::positive();
        v.push_back(-roots::beta());
        return v;
    }();
    return r;
}

SymMatrix root_subgroup(const Weight& g, const RFrac& x, const RFrac& a) {
    if (a.is_zero()) throw std::invalid_argument("root_subgroup needs a != 0");
    SymMatrix m = SymMatrix::identity(7);
    RFrac ai = a.inv();
    if (g == Weight(1, 0)) {
        m(1, 2) = x;
        m(4, 5) = ai * x;
    } else if (g == Weight(0, 1)) {
        m(0, 1) = x;
        m(2, 3) = RFrac(-2) * x;
        m(2, 4) = -(x * x);
        m(3, 4) = x;
        m(5, 6) = -x;
    } else if (g == Weight(1, 1)) {
        m(0, 2) = x;
        m(1, 3) = RFrac(2) * x;
        m(1, 5) = ai * x * x;
        m(3, 5) = ai * x;
        m(4, 6) = ai * x;
    } else if (g == Weight(1, 2)) {
        m(0, 3) = RFrac(2) * x;
        m(0, 6) = ai * x * x;
        m(1, 4) = -x;
        m(2, 5) = -(ai * x);
        m(3, 6) = ai * x;
    } else if (g == Weight(1, 3)) {
        m(0, 4) = x;
        m(2, 6) = ai * x;
    } else if (g == Weight(2, 3)) {
        m(0, 5) = x;
        m(1, 6) = -x;
    } else if (g == Weight(0, -1)) {
        m(1, 0) = x;
        m(3, 2) = -x;
        m(4, 2) = -(x * x);
        m(4, 3) = RFrac(2) * x;
        m(6, 5) = -x;
    } else {
        throw std::invalid_argument("no root subgroup displayed for " + g.str());
    }
    return m;
}

SymMatrix torus_elem(const RFrac& t1, const RFrac& t2) {
    return SymMatrix::diag({t1, t2, t1 / t2, RFrac(1), t2 / t1, t2.inv(), t1.inv()});
}

RFrac torus_character(const Weight& g, const RFrac& t1, const RFrac& t2) {
    if (!g.is_integral()) throw std::invalid_argument("torus character needs an integral weight");
    Rat e1 = g.b - g.a, e2 = 2 * g.a - g.b;
    return t1.pow(static_cast<int>(e1.get_num().get_si())) * t2.pow(static_cast<int>(e2.get_num().get_si()));
}

bool conj_relation(const Weight& g) {
    RFrac t1 = svar("t1"), t2 = svar("t2"), x = svar("x"), a = svar("a");
    SymMatrix lhs = torus_elem(t1, t2) * root_subgroup(g, x, a) * torus_elem(t1.inv(), t2.inv());
    SymMatrix rhs = root_subgroup(g, torus_character(g, t1, t2) * x, a);
    return lhs == rhs;
}

SymMatrix weyl_rep(char letter, const RFrac& a) {
    SymMatrix m(7, 7);
    if (letter == 'a') {
        m(0, 0) = RFrac(1);
        m(1, 2) = RFrac(-1);
        m(2, 1) = RFrac(1);
        m(3, 3) = RFrac(1);
        m(4, 5) = -a.inv();
        m(5, 4) = a;
        m(6, 6) = RFrac(1);
    } else if (letter == 'b') {
        m(0, 1) = RFrac(1);
        m(1, 0) = RFrac(1);
        m(2, 4) = RFrac(1);
        m(3, 3) = RFrac(-1);
        m(4, 2) = RFrac(1);
        m(5, 6) = RFrac(1);
        m(6, 5) = RFrac(1);
    } else {
        throw std::invalid_argument(std::string("Weyl representative letter must be 'a' or 'b', got '") + letter + "'");
    }
    return m;
}

SymMatrix weyl_word_matrix(const std::string& word, const RFrac& a) {
    SymMatrix m = SymMatrix::identity(7);
    for (char c : word) m = m * weyl_rep(c, a);
    return m;
}

Perm7 perm_identity() { return {0, 1, 2, 3, 4, 5, 6}; }

Perm7 perm_then(const Perm7& p, const Perm7& q) {
    Perm7 r{};
    for (int i = 0; i < 7; ++i) r[i] = q[p[i]];
    return r;
}

int perm_sign(const Perm7& p) {
    int s = 1;
    std::array<bool, 7> seen{};
    for (int i = 0; i < 7; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::string cycle_string(const Perm7& p) {
    std::string s;
    std::array<bool, 7> seen{};
    for (int i = 0; i < 7; ++i) {
        if (seen[i] || p[i] == i) {
            seen[i] = true;
            continue;
        }
        s += "(";
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            s += std::to_string(j + 1);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Perm7 parse_cycles(const std::string& text) {
    Perm7 p = perm_identity();
    std::vector<int> cyc;
    bool open = false;
    std::set<int> used;
    auto close = [&] {
        for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
        cyc.clear();
    };
    for (char c : text) {
        if (c == '(') {
            if (open) throw std::invalid_argument("nested cycle in '" + text + "'");
            open = true;
        } else if (c == ')') {
            if (!open) throw std::invalid_argument("unbalanced cycle in '" + text + "'");
            open = false;
            close();
        } else if (c >= '1' && c <= '7') {
            if (!open) throw std::invalid_argument("digit outside a cycle in '" + text + "'");
            int v = c - '1';
            if (!used.insert(v).second) throw std::invalid_argument("repeated letter in '" + text + "'");
            cyc.push_back(v);
        } else if (c != ' ') {
            throw std::invalid_argument("unexpected character in cycle text '" + text + "'");
        }
    }
    if (open) throw std::invalid_argument("unterminated cycle in '" + text + "'");
    return p;
}

Perm7 monomial_perm(const SymMatrix& m) {
    if (m.rows() != 7 || m.cols() != 7) throw DimensionMismatch("monomial_perm needs a 7x7 matrix");
    Perm7 p{};
    std::set<int> cols;
    for (int i = 0; i < 7; ++i) {
        int found = -1;
        for (int j = 0; j < 7; ++j)
            if (!m(i, j).is_zero()) {
                if (found >= 0) throw AlgebraError("matrix is not monomial in row " + std::to_string(i + 1));
                found = j;
            }
        if (found < 0 || !cols.insert(found).second) throw AlgebraError("matrix is not monomial");
        p[i] = found;
    }
    return p;
}

Perm7 weyl_word_to_s7(const std::string& word) { return monomial_perm(weyl_word_matrix(word, svar("a"))); }

const std::vector<DisplayedImage>& displayed_s7_images() {
    static const std::vector<DisplayedImage> d{
        {"a", "(23)(56)"},         {"b", "(12)(35)(67)"},       {"ab", "(125763)"},
        {"ba", "(367521)"},        {"aba", "(31)(26)(57)"},     {"bab", "(15)(37)"},
        {"abab", "(156)(273)"},    {"baba", "(165)(237)"},      {"ababa", "(16)(27)(35)"},
        {"babab", "(17)(25)(36)"}, {"ababab", "(17)(26)(35)"},
    };
    return d;
}

std::vector<S7Comparison> compare_s7_images() {
    std::vector<S7Comparison> out;
    for (auto& d : displayed_s7_images()) {
        Perm7 want = parse_cycles(d.cycles), got = weyl_word_to_s7(d.word);
        out.push_back({d.word, d.cycles, cycle_string(got), want == got, perm_sign(want), perm_sign(got)});
    }
    return out;
}

std::size_t s7_homomorphism_failures() {
    std::size_t bad = 0;
    for (auto& w : weyl_group())
        for (auto& v : weyl_group())
            if (weyl_word_to_s7((w * v).word()) != perm_then(weyl_word_to_s7(w.word()), weyl_word_to_s7(v.word()))) ++bad;
    return bad;
}

bool s7_injective() {
    std::set<Perm7> seen;
    for (auto& w : weyl_group()) seen.insert(weyl_word_to_s7(w.word()));
    return seen.size() == weyl_group().size();
}

namespace {
int block_232(int i) { return i < 2 ? 0 : (i < 5 ? 1 : 2); }
}  // namespace

bool in_W232(const Perm7& p) {
    for (int i = 0; i < 7; ++i)
        if (block_232(p[i]) != block_232(i)) return false;
    return true;
}

bool in_P232(const SymMatrix& m) {
    if (m.rows() != 7 || m.cols() != 7) throw DimensionMismatch("in_P232 needs a 7x7 matrix");
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (block_232(i) > block_232(j) && !m(i, j).is_zero()) return false;
    return true;
}

BruhatReport bruhat_disjointness_check() {
    BruhatReport r;
    RFrac a = svar("a");
    for (auto& w : weyl_group()) {
        if (in_W232(weyl_word_to_s7(w.word()))) r.intersection.push_back(w.name());
        if (in_P232(weyl_word_matrix(w.word(), a))) r.reps_in_P232.push_back(w.name());
    }
    bool gens = in_P232(torus_elem(svar("t1"), svar("t2")));
    for (auto& g : subgroup_roots()) gens = gens && in_P232(root_subgroup(g, svar("x"), a));
    r.generators_in_P232 = gens;
    return r;
}

std::array<RFrac, 2> relation_values(const SymMatrix& h) {
    if (h.rows() < 2 || h.cols() < 5) throw DimensionMismatch("relations read rows 1-2 and columns 1-5");
    auto e = [&](int i, int j) -> const RFrac& { return h(i - 1, j - 1); };
    RFrac r1 = RFrac(2) * e(2, 2) * e(1, 3) - RFrac(2) * e(1, 2) * e(2, 3) + e(2, 1) * e(1, 4) - e(1, 1) * e(2, 4);
    RFrac r2 = e(2, 2) * e(1, 4) - e(1, 2) * e(2, 4) - RFrac(2) * e(2, 1) * e(1, 5) + RFrac(2) * e(1, 1) * e(2, 5);
    return {r1, r2};
}

bool coeff_relations(const SymMatrix& h) {
    auto r = relation_values(h);
    return r[0].is_zero() && r[1].is_zero();
}

SymMatrix unipotent_product(const RFrac& a) {
    SymMatrix h = SymMatrix::identity(7);
    const std::vector<Weight> order{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t i = 0; i < order.size(); ++i) h = h * root_subgroup(order[i], svar("x" + std::to_string(i + 1)), a);
    return h;
}

SymMatrix pbeta_generator(int kind, int pos, const RFrac& a) {
    std::string p = std::to_string(pos);
    if (kind == 0) return torus_elem(svar("t1_" + p), svar("t2_" + p));
    if (kind == 1) return root_subgroup(-roots::beta(), svar("x_" + p), a);
    if (kind >= 2 && kind < kPbetaGeneratorKinds) return root_subgroup(roots::positive()[kind - 2], svar("x_" + p), a);
    throw std::out_of_range("generator kind " + std::to_string(kind));
}

std::string pbeta_generator_name(int kind) {
    if (kind == 0) return "torus";
    if (kind == 1) return "g(-beta)";
    return "g(" + roots::positive().at(kind - 2).str() + ")";
}

WordSearchReport relation_word_search(int max_length) {
    if (max_length < 1) throw std::invalid_argument("word length must be >= 1");
    WordSearchReport rep;
    rep.max_length = max_length;
    RFrac a = svar("a");
    // generators per position are built once; only rows 1-2 of the prefix product matter
    std::vector<std::vector<SymMatrix>> gens(max_length);
    for (int pos = 0; pos < max_length; ++pos)
        for (int k = 0; k < kPbetaGeneratorKinds; ++k) gens[pos].push_back(pbeta_generator(k, pos + 1, a));
    std::vector<int> word;
    std::function<void(const SymMatrix&)> walk = [&](const SymMatrix& rows) {
        int pos = static_cast<int>(word.size());
        if (pos == max_length) return;
        for (int k = 0; k < kPbetaGeneratorKinds; ++k) {
            SymMatrix next = rows * gens[pos][k];
            word.push_back(k);
            ++rep.words;
            if (!coeff_relations(next)) {
                if (rep.failures++ == 0) {
                    for (std::size_t i = 0; i < word.size(); ++i)
                        rep.first_failure += (i ? " " : "") + pbeta_generator_name(word[i]);
                }
            }
            walk(next);
            word.pop_back();
        }
    };
    walk(SymMatrix::identity(7).block(0, 0, 2, 7));
    return rep;
}

}  // namespace g2forge
