#ifndef NOVIKOV_VARIABLES_HPP
#define NOVIKOV_VARIABLES_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "novikov/errors.hpp"

namespace novikov {

// Variable universe of the polynomial layer: the generic exponents
// l1..ln, the series variable x, and jet variables t0..tk standing for
// derivatives of an unknown series. The ordering Lambda < X < Jet fixes
// the raw exponent-vector ordering with l1 most significant.
enum class VarKind : std::uint8_t { Lambda = 0, X = 1, Jet = 2 };

struct Var {
    VarKind kind{VarKind::X};
    int index{0};  // Lambda: 1-based; Jet: derivative order >= 0; X: unused (0)

    static Var lambda(int i) {
        if (i < 1) throw malformed_input("lambda index must be >= 1");
        return Var{VarKind::Lambda, i};
    }
    static Var x() { return Var{VarKind::X, 0}; }
    static Var jet(int order) {
        if (order < 0) throw malformed_input("jet order must be >= 0");
        return Var{VarKind::Jet, order};
    }

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string name() const {
        switch (kind) {
            case VarKind::Lambda: return "l" + std::to_string(index);
            case VarKind::X: return "x";
            case VarKind::Jet: return "t" + std::to_string(index);
        }
        return "?";
    }
};

}  // namespace novikov

#endif
