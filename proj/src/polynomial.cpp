#include "novikov/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace novikov {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, int exponent) {
    if (exponent < 0) throw malformed_input("negative exponent");
    Monomial m;
    if (exponent > 0) m.exps_[v] = exponent;
    return m;
}

int Monomial::exponent(Var v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

bool Monomial::lambda_only() const {
    for (const auto& [v, e] : exps_)
        if (v.kind != VarKind::Lambda) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (const auto& [v, e] : other.exps_) {
        int& slot = r.exps_[v];
        slot += e;
        if (slot == 0) r.exps_.erase(v);
    }
    return r;
}

std::optional<Monomial> Monomial::divide_by(const Monomial& other) const {
    Monomial r = *this;
    for (const auto& [v, e] : other.exps_) {
        auto it = r.exps_.find(v);
        if (it == r.exps_.end() || it->second < e) return std::nullopt;
        it->second -= e;
        if (it->second == 0) r.exps_.erase(it);
    }
    return r;
}

std::string Monomial::to_string() const {
    if (exps_.empty()) return "1";
    std::string out;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) out += "*";
        first = false;
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::vector<int> gamma(const Monomial& u, int n) {
    std::vector<int> exps;
    exps.reserve(u.exponents().size());
    for (const auto& [v, e] : u.exponents()) exps.push_back(e);
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    if ((int)exps.size() < n) exps.resize(n, 0);
    return exps;
}

std::strong_ordering monomial_cmp(const Monomial& u, const Monomial& v) {
    if (auto c = u.total_degree() <=> v.total_degree(); c != 0) return c;

    // sorted exponent multisets, compared lexicographically (zero padded)
    auto gu = gamma(u, 0);
    auto gv = gamma(v, 0);
    std::size_t gn = std::max(gu.size(), gv.size());
    gu.resize(gn, 0);
    gv.resize(gn, 0);
    for (std::size_t i = 0; i < gn; ++i)
        if (auto c = gu[i] <=> gv[i]; c != 0) return c;

    // raw exponent vectors, smallest variable most significant
    auto iu = u.exponents().begin(), eu = u.exponents().end();
    auto iv = v.exponents().begin(), ev = v.exponents().end();
    while (iu != eu || iv != ev) {
        if (iu == eu) return std::strong_ordering::less;     // v has an extra variable
        if (iv == ev) return std::strong_ordering::greater;  // u has an extra variable
        if (iu->first != iv->first) {
            // the smaller variable is present with positive exponent in one side only
            return iu->first < iv->first ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        }
        if (auto c = iu->second <=> iv->second; c != 0) return c;
        ++iu;
        ++iv;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering order_cmp(const Monomial& u, const Monomial& v) {
    if (!u.lambda_only() || !v.lambda_only())
        throw malformed_input("order_cmp requires monomials over the lambda block");
    return monomial_cmp(u, v);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_[Monomial{}] = constant;
}

Polynomial Polynomial::variable(Var v, int exponent) {
    Polynomial p;
    p.terms_[Monomial::of(v, exponent)] = 1;
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int Polynomial::degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

bool Polynomial::depends_on(Var v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) > 0) return true;
    return false;
}

std::set<Var> Polynomial::variables() const {
    std::set<Var> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) vars.insert(v);
    return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

std::pair<Monomial, Rational> leading_term(const Polynomial& f) {
    if (f.is_zero()) throw empty_input("leading term of the zero polynomial");
    auto it = f.terms().rbegin();
    return {it->first, it->second};
}

Rational evaluate(const Polynomial& f, const std::map<Var, Rational>& point) {
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational v = c;
        for (const auto& [var, e] : m.exponents()) {
            auto it = point.find(var);
            if (it == point.end())
                throw malformed_input("missing variable binding for " + var.name());
            Rational p = 1;
            for (int k = 0; k < e; ++k) p *= it->second;
            v *= p;
        }
        total += v;
    }
    return total;
}

// ---------------------------------------------------- division by one divisor

namespace {

// Graded lex on raw exponent vectors (no gamma stage): a genuine monomial
// order, compatible with multiplication, used only to drive division.
bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        if (ia == ea) return true;
        if (ib == eb) return false;
        if (ia->first != ib->first) return !(ia->first < ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

std::pair<Monomial, Rational> grlex_leading(const Polynomial& f) {
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

}  // namespace

std::optional<Polynomial> divides_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw malformed_input("division by the zero polynomial");
    Polynomial q;
    Polynomial r = f;
    auto [lg, cg] = grlex_leading(g);
    while (!r.is_zero()) {
        auto [lr, cr] = grlex_leading(r);
        auto m = lr.divide_by(lg);
        if (!m) return std::nullopt;  // a stray leading term: g does not divide f
        Rational c = cr / cg;
        Polynomial t;
        t.add_term(*m, c);
        q += t;
        r -= t * g;
    }
    return q;
}

Polynomial derivative(const Polynomial& f, Var v) {
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        auto reduced = m.divide_by(Monomial::of(v));
        r.add_term(*reduced, c * e);
    }
    return r;
}

Polynomial substitute(const Polynomial& f, Var v, const Polynomial& value) {
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        Polynomial term;
        term.add_term(*m.divide_by(Monomial::of(v, e)), c);
        if (e > 0) term *= pow(value, e);
        r += term;
    }
    return r;
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw malformed_input("negative polynomial power");
    Polynomial r(1);
    Polynomial b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// --------------------------------------------------------- content and gcd

Rational rational_content(const Polynomial& f) {
    if (f.is_zero()) throw empty_input("content of the zero polynomial");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    return Rational(num_gcd, den_lcm);
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero()) return f;
    Rational c = rational_content(f);
    if (leading_term(f).second < 0) c = -c;
    return f * (Rational(1) / c);
}

namespace {

// f viewed as a univariate polynomial in v with Polynomial coefficients.
std::vector<Polynomial> coefficients_in(const Polynomial& f, Var v) {
    std::vector<Polynomial> coeffs(f.degree_in(v) + 1);
    for (const auto& [m, c] : f.terms()) {
        int e = m.exponent(v);
        coeffs[e].add_term(*m.divide_by(Monomial::of(v, e)), c);
    }
    return coeffs;
}

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v) {
    Polynomial r;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        r += coeffs[e] * Polynomial::variable(v, (int)e);
    return r;
}

int vec_degree(const std::vector<Polynomial>& coeffs) {
    for (int i = (int)coeffs.size() - 1; i >= 0; --i)
        if (!coeffs[i].is_zero()) return i;
    return -1;
}

// gcd of the v-coefficients of f; the recursive content step of the PRS.
Polynomial content_in(const Polynomial& f, Var v) {
    Polynomial c;
    for (const auto& coeff : coefficients_in(f, v)) {
        if (coeff.is_zero()) continue;
        c = gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

// Pseudo-remainder of a by b in the variable v (b nonzero in v).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, Var v) {
    auto ra = coefficients_in(a, v);
    auto rb = coefficients_in(b, v);
    int db = vec_degree(rb);
    const Polynomial& lb = rb[db];
    int da = vec_degree(ra);
    while (da >= db && da >= 0) {
        Polynomial la = ra[da];
        // ra <- lb*ra - la*v^(da-db)*rb
        for (auto& c : ra) c *= lb;
        for (int j = 0; j <= db; ++j) ra[da - db + j] -= la * rb[j];
        int nd = vec_degree(ra);
        if (nd >= da) throw internal_error("pseudo-division failed to reduce degree");
        da = nd;
    }
    ra.resize(std::max(da + 1, 0));
    return from_coefficients(ra, v);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    // main variable: the greatest variable present in either operand
    Var v = *a.variables().rbegin();
    if (!b.variables().empty()) v = std::max(v, *b.variables().rbegin());

    Polynomial ca = a.depends_on(v) ? content_in(a, v) : a;
    Polynomial cb = b.depends_on(v) ? content_in(b, v) : b;
    if (!a.depends_on(v) || !b.depends_on(v)) {
        // one operand is free of v: gcd lives in the coefficient ring
        return gcd(ca, cb);
    }
    Polynomial cont = gcd(ca, cb);

    Polynomial pa = primitive_part(*divides_exact(a, ca));
    Polynomial pb = primitive_part(*divides_exact(b, cb));
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    // primitive PRS
    while (true) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) break;
        Polynomial cr = content_in(r, v);
        r = primitive_part(*divides_exact(r, cr));
        pa = std::move(pb);
        pb = std::move(r);
        if (pb.degree_in(v) == 0) return primitive_part(cont);
    }
    return primitive_part(cont * pb);
}

Polynomial squarefree_part(const Polynomial& f, Var v) {
    if (f.is_zero() || !f.depends_on(v)) return f;
    Polynomial g = gcd(f, derivative(f, v));
    if (g.is_constant()) return f;
    auto q = divides_exact(f, g);
    if (!q) throw internal_error("gcd does not divide its argument");
    Polynomial s = *q;
    Polynomial cs = content_in(s, v);
    if (!cs.is_constant()) s = *divides_exact(s, cs);
    return primitive_part(s);
}

// ------------------------------------------------------------ rational roots

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& at) {
    Rational v = 0;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i) v = v * at + coeffs[i];
    return v;
}

// Divides out (x - root); assumes the division is exact.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root) {
    std::vector<Rational> q(coeffs.size() - 1);
    Rational carry = 0;
    for (int i = (int)coeffs.size() - 1; i >= 1; --i) {
        carry = coeffs[i] + carry * root;
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw empty_input("rational_roots of the zero polynomial");
    auto vars = p.variables();
    if (vars.size() > 1) throw malformed_input("rational_roots requires a univariate polynomial");
    if (vars.empty()) return {};
    Var v = *vars.begin();

    std::vector<Rational> coeffs(p.degree_in(v) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) coeffs[m.exponent(v)] = c;

    std::vector<Rational> roots;
    while (coeffs.size() > 1 && coeffs[0] == 0) {
        roots.push_back(0);
        coeffs.erase(coeffs.begin());
    }
    if (coeffs.size() <= 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    // primitive integer form for the root candidates
    Int den_lcm = 1;
    for (const auto& c : coeffs) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    Int a0 = numerator(coeffs.front() * den_lcm);
    Int ad = numerator(coeffs.back() * den_lcm);
    Int g = boost::multiprecision::gcd(a0, ad);
    for (const auto& c : coeffs)
        g = boost::multiprecision::gcd(g, numerator(c * den_lcm));
    a0 /= g;
    ad /= g;

    std::vector<Rational> candidates;
    for (const Int& num : positive_divisors(a0))
        for (const Int& den : positive_divisors(ad)) {
            Rational r(num, den);
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& c : candidates) {
        while (coeffs.size() > 1 && eval_univariate(coeffs, c) == 0) {
            roots.push_back(c);
            coeffs = deflate(coeffs, c);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ------------------------------------------------------------------- text io

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    // highest term first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? "-" : "+";
            if (a < 0) a = -a;
        }
        if (m.is_constant()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += m.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_ws();
        Polynomial result;
        bool negative = consume_sign();
        result += parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = text_[pos_];
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            result += parse_term(op == '-');
            skip_ws();
        }
        return result;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool consume_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    bool at_digit() const { return pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]); }

    std::string read_digits() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) throw ParseError("expected digits", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational parse_coefficient() {
        std::string num = read_digits();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string den = read_digits();
            if (Int(den) == 0) throw ParseError("zero denominator", pos_);
            return Rational(Int(num), Int(den));
        }
        return Rational(Int(num));
    }

    std::pair<Var, int> parse_varpow() {
        char c = text_[pos_];
        Var v = Var::x();
        if (c == 'x') {
            ++pos_;
        } else if (c == 'l' || c == 't') {
            ++pos_;
            if (!at_digit()) throw ParseError("expected variable index", pos_);
            int idx = std::stoi(read_digits());
            if (c == 'l') {
                if (idx < 1) throw ParseError("lambda index must be >= 1", pos_);
                v = Var::lambda(idx);
            } else {
                v = Var::jet(idx);
            }
        } else {
            throw ParseError("expected a variable (l<i>, x, t<k>)", pos_);
        }
        skip_ws();
        int e = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            e = std::stoi(read_digits());
        }
        return {v, e};
    }

    Polynomial parse_term(bool negative) {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        Rational coeff = 1;
        Monomial mono;
        bool saw_factor = false;
        if (at_digit()) {
            coeff = parse_coefficient();
            saw_factor = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                saw_factor = false;  // a monomial part must follow
            } else {
                Polynomial p;
                p.add_term(Monomial{}, negative ? -coeff : coeff);
                return p;
            }
        }
        while (true) {
            auto [v, e] = parse_varpow();
            mono = mono * Monomial::of(v, e);
            saw_factor = true;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("empty term", pos_);
        Polynomial p;
        p.add_term(mono, negative ? -coeff : coeff);
        return p;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    if (text.empty()) throw ParseError("empty polynomial text", 0);
    // the canonical zero
    std::size_t i = 0;
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    if (i < text.size() && text[i] == '0') {
        std::size_t j = i + 1;
        while (j < text.size() && std::isspace((unsigned char)text[j])) ++j;
        if (j == text.size()) return Polynomial{};
    }
    return PolyParser(text).parse();
}

}  // namespace novikov
