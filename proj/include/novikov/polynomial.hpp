#ifndef NOVIKOV_POLYNOMIAL_HPP
#define NOVIKOV_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "novikov/rational.hpp"
#include "novikov/variables.hpp"

namespace novikov {

// Commutative monomial over Var; zero exponents are never stored.
class Monomial {
  public:
    Monomial() = default;

    static Monomial of(Var v, int exponent = 1);

    int exponent(Var v) const;
    int total_degree() const;
    bool is_constant() const { return exps_.empty(); }
    bool lambda_only() const;
    const std::map<Var, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    // Exact quotient; nullopt when some exponent would go negative.
    std::optional<Monomial> divide_by(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;  // "l1^2*l2", "1" for the empty monomial

  private:
    std::map<Var, int> exps_;
};

// Exponent multiset sorted non-increasing, zero-padded to length n.
std::vector<int> gamma(const Monomial& u, int n);

// Total order used for canonical term storage: total degree, then the
// sorted exponent multiset lexicographically, then the raw exponent
// vector lexicographically with the smallest variable most significant.
// On lambda-block monomials this is exactly the paper-facing order
// exposed by order_cmp.
std::strong_ordering monomial_cmp(const Monomial& u, const Monomial& v);

// The monomial order on k[l1..ln]; rejects monomials mentioning x or t
// variables with a malformed-input error.
std::strong_ordering order_cmp(const Monomial& u, const Monomial& v);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_cmp(a, b) < 0;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long long constant) : Polynomial(Rational(constant)) {}
    Polynomial(int constant) : Polynomial(Rational(constant)) {}

    static Polynomial variable(Var v, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial{}); }

    int total_degree() const;       // degree of the zero polynomial reported as 0
    int degree_in(Var v) const;
    bool depends_on(Var v) const;
    std::set<Var> variables() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    Polynomial operator*(const Rational& c) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    TermMap terms_;
};

// Highest term of a nonzero polynomial under the canonical order;
// empty-input error on zero.
std::pair<Monomial, Rational> leading_term(const Polynomial& f);

// Exact evaluation; malformed-input error when a variable of f has no binding.
Rational evaluate(const Polynomial& f, const std::map<Var, Rational>& point);

// f/g when g divides f exactly over the rationals, otherwise nullopt.
// malformed-input error when g is zero.
std::optional<Polynomial> divides_exact(const Polynomial& f, const Polynomial& g);

Polynomial derivative(const Polynomial& f, Var v);
Polynomial substitute(const Polynomial& f, Var v, const Polynomial& value);
Polynomial pow(const Polynomial& base, int exponent);

// Positive rational c such that f/c has coprime integer coefficients;
// empty-input error on zero.
Rational rational_content(const Polynomial& f);
// f divided by its signed content: integer coefficients, leading coefficient
// positive under the canonical order.
Polynomial primitive_part(const Polynomial& f);

// Multivariate gcd by primitive pseudo-remainder sequences. Result is
// primitive with positive leading coefficient; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// f with repeated factors involving v collapsed: f / gcd(f, df/dv), then
// freed of its v-content. Returns f unchanged when the gcd is constant.
Polynomial squarefree_part(const Polynomial& f, Var v);

// All rational roots with multiplicity, ascending. Requires a nonzero
// polynomial in at most one variable (empty-input / malformed-input errors).
std::vector<Rational> rational_roots(const Polynomial& p);

// Text form: terms joined by +/-, descending canonical order, no spaces,
// e.g. "l1^2+l1*l2-3/2*l1". parse(print(f)) == f exactly.
std::string to_string(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text);

}  // namespace novikov

#endif
