#ifndef NOVIKOV_FREE_ALGEBRA_HPP
#define NOVIKOV_FREE_ALGEBRA_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "novikov/rational.hpp"
#include "novikov/tableau.hpp"

namespace novikov {

// Commutative product of factors x_i^(order); the free Novikov algebra is
// modeled on the span of such monomials of weight -1, with
// u o v = D(u) * v where D raises one derivative order by the Leibniz rule.
class DiffMonomial {
  public:
    using Factor = std::pair<int, int>;  // (generator, derivative order)

    DiffMonomial() = default;
    explicit DiffMonomial(std::vector<Factor> factors);

    static DiffMonomial generator(int i) { return DiffMonomial({{i, 0}}); }

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return (int)factors_.size(); }
    int weight() const;  // sum(order) - degree
    std::vector<int> multidegree(int n) const;
    int max_generator() const;
    int degree_in(int generator) const;

    DiffMonomial operator*(const DiffMonomial& other) const;
    // Leibniz derivative: list of (monomial, multiplicity).
    std::vector<std::pair<DiffMonomial, int>> derivative() const;

    friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
    friend bool operator<(const DiffMonomial& a, const DiffMonomial& b) {
        return a.factors_ < b.factors_;
    }

    std::string to_string() const;  // "x1^(1)*x2^(0)"

  private:
    std::vector<Factor> factors_;  // sorted
};

// Exact linear combination of weight -1 differential monomials.
class Element {
  public:
    using TermMap = std::map<DiffMonomial, Rational>;

    Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int max_generator() const;

    void add_term(const DiffMonomial& m, const Rational& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator*(const Rational& c) const;

    friend bool operator==(const Element&, const Element&) = default;

    std::string to_string() const;

  private:
    TermMap terms_;
};

// The free generator x_i as an element.
Element inject(int generator);

// u o v = D(u) * v, extended bilinearly.
Element product(const Element& u, const Element& v);

Element expand_word(const Word& w);

// True when every monomial has the same multidegree over x1..xn.
bool is_multihomogeneous(const Element& e);
// Multidegree of a nonzero multihomogeneous element (n = max generator).
std::vector<int> element_multidegree(const Element& e);

// Splits into multihomogeneous components, sorted by multidegree.
std::vector<std::pair<std::vector<int>, Element>> homogeneous_components(const Element& e);

// All weight -1 differential monomials of the given multidegree, sorted.
// Independent of the tableau enumeration; the two counts must agree.
std::vector<DiffMonomial> diff_monomials_of_multidegree(const std::vector<int>& multidegree);

// Coefficients of e over enumerate_tableaux(multidegree), solved exactly.
// Errors when e is not homogeneous of that multidegree or (which would be
// a bug given the basis property) the system is inconsistent.
std::vector<Rational> to_tableau_basis(const Element& e, const std::vector<int>& multidegree);

// Full polarization of a multihomogeneous element. origin[j] is the
// original generator fresh generator j+1 came from; an already multilinear
// input is returned unchanged with the identity origin.
struct Polarization {
    Element element;
    std::vector<int> origin;
};
std::vector<Polarization> multilinearize(const Element& e);

// Expression grammar: expr := ['-'] term {('+'|'-') term};
// term := [rational ['*']] factor; factor := 'x'digits | '(' expr '*' expr ')'.
Element parse_element(std::string_view text);

}  // namespace novikov

#endif
