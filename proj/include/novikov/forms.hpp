#ifndef NOVIKOV_FORMS_HPP
#define NOVIKOV_FORMS_HPP

#include <optional>
#include <vector>

#include "novikov/polynomial.hpp"

namespace novikov {

// Integer affine combination c0 + c1*l1 + ... + cn*ln. Used for the
// exponents g_T and for the exponents of A(lambda) terms. Trailing zero
// coefficients are trimmed, so equal forms compare equal.
struct AffineForm {
    long long constant{0};
    std::vector<long long> lambda;  // lambda[i-1] multiplies l_i

    AffineForm() = default;
    AffineForm(long long c, std::vector<long long> coeffs) : constant(c), lambda(std::move(coeffs)) {
        trim();
    }

    static AffineForm unit(int i) {  // l_i
        std::vector<long long> c(i, 0);
        c[i - 1] = 1;
        return AffineForm(0, std::move(c));
    }

    long long coeff(int i) const {  // 1-based
        return (i >= 1 && i <= (int)lambda.size()) ? lambda[i - 1] : 0;
    }
    int max_index() const { return (int)lambda.size(); }
    long long coeff_sum() const {
        long long s = 0;
        for (long long c : lambda) s += c;
        return s;
    }
    bool is_zero() const { return constant == 0 && lambda.empty(); }

    AffineForm& operator+=(const AffineForm& o) {
        constant += o.constant;
        if (lambda.size() < o.lambda.size()) lambda.resize(o.lambda.size(), 0);
        for (std::size_t i = 0; i < o.lambda.size(); ++i) lambda[i] += o.lambda[i];
        trim();
        return *this;
    }
    friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
    AffineForm& operator+=(long long c) {
        constant += c;
        return *this;
    }

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend bool operator<(const AffineForm& a, const AffineForm& b) {
        if (a.constant != b.constant) return a.constant < b.constant;
        return a.lambda < b.lambda;
    }

    Polynomial to_polynomial() const {
        Polynomial p(Rational(constant));
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (lambda[i] != 0)
                p += Polynomial::variable(Var::lambda((int)i + 1)) * Rational(lambda[i]);
        return p;
    }

    // Exact evaluation at integer lambda values (1-based positions).
    long long evaluate(const std::vector<long long>& values) const {
        long long s = constant;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] == 0) continue;
            if (i >= values.size()) throw malformed_input("specialization too short for exponent form");
            s += lambda[i] * values[i];
        }
        return s;
    }

    // nullopt unless p is affine over the lambda block with integer coefficients.
    static std::optional<AffineForm> from_polynomial(const Polynomial& p);

  private:
    void trim() {
        while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    }
};

// Linear form of the shape t1*l1+...+tn*ln - (t1+...+tn) + 1 with
// nonnegative integer t_i: the linear factors of the coefficient
// polynomials f_T.
struct LinearForm {
    std::vector<long long> t;

    explicit LinearForm(std::vector<long long> tv) : t(std::move(tv)) {
        for (long long c : t)
            if (c < 0) throw malformed_input("linear form requires nonnegative t");
        while (!t.empty() && t.back() == 0) t.pop_back();
    }

    long long alpha() const {
        long long s = 0;
        for (long long c : t) s += c;
        return s;
    }

    AffineForm form() const { return AffineForm(1 - alpha(), t); }
    Polynomial to_polynomial() const { return form().to_polynomial(); }
    Polynomial hat_polynomial() const { return AffineForm(0, t).to_polynomial(); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

}  // namespace novikov

#endif
