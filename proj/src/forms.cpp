#include "novikov/forms.hpp"

#include <limits>

namespace novikov {

std::optional<AffineForm> AffineForm::from_polynomial(const Polynomial& p) {
    AffineForm out;
    for (const auto& [m, c] : p.terms()) {
        if (denominator(c) != 1) return std::nullopt;
        Int num = numerator(c);
        if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min())
            return std::nullopt;
        long long value = (long long)num;
        if (m.is_constant()) {
            out.constant = value;
            continue;
        }
        if (m.total_degree() != 1) return std::nullopt;
        Var v = m.exponents().begin()->first;
        if (v.kind != VarKind::Lambda) return std::nullopt;
        if ((int)out.lambda.size() < v.index) out.lambda.resize(v.index, 0);
        out.lambda[v.index - 1] = value;
    }
    out.trim();
    return out;
}

}  // namespace novikov
