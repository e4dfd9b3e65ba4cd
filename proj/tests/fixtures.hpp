#pragma once

// Hand-checked five-variable toy system shared across the tests. The three
// equations force x = (0,1,0,1,0); their square-sum H has spectrum
// toy_spectrum() with its unique zero at state index 10.

#include <vector>

#include "pbred/equation.hpp"
#include "pbred/polynomial.hpp"

namespace fixtures {

using pbred::BinaryEquation;
using pbred::Integer;
using pbred::Monomial;
using pbred::Polynomial;

inline Polynomial x(pbred::var_index v) { return Polynomial::variable(v); }

// x1 + x2 + x3 = 1,  x1 x4 + x2 x5 = x3,  x1 + 2 x2 = x3 + 2 x4.
inline std::vector<BinaryEquation> toy_equations() {
    return {
        {x(1) + x(2) + x(3), Polynomial::constant(1)},
        {x(1) * x(4) + x(2) * x(5), x(3)},
        {x(1) + Polynomial::constant(2) * x(2), x(3) + Polynomial::constant(2) * x(4)},
    };
}

inline Polynomial from_terms(std::vector<Polynomial::Term> terms) {
    return Polynomial::from_terms(std::move(terms));
}

// Square-sum of the toy equations, 13 terms.
inline Polynomial toy_hamiltonian() {
    return from_terms({
        {Monomial{1, 2, 4, 5}, 2},
        {Monomial{1, 3, 4}, -2},
        {Monomial{2, 3, 5}, -2},
        {Monomial{2, 3}, -2},
        {Monomial{1, 2}, 6},
        {Monomial{1, 4}, -3},
        {Monomial{2, 4}, -8},
        {Monomial{2, 5}, 1},
        {Monomial{2}, 3},
        {Monomial{3, 4}, 4},
        {Monomial{3}, 1},
        {Monomial{4}, 4},
        {Monomial{}, 1},
    });
}

// toy_hamiltonian rewritten with the vanishing products x1x2, x1x3, x2x3:
// the quartic leaves +2 x1x2 behind (its coefficient is positive), both
// cubics delete outright, and with the +6 x1x2 term that makes 8 x1x2.
inline Polynomial toy_reduced_quadratic() {
    return from_terms({
        {Monomial{1, 2}, 8},
        {Monomial{2, 3}, -2},
        {Monomial{1, 4}, -3},
        {Monomial{2, 4}, -8},
        {Monomial{2, 5}, 1},
        {Monomial{2}, 3},
        {Monomial{3, 4}, 4},
        {Monomial{3}, 1},
        {Monomial{4}, 4},
        {Monomial{}, 1},
    });
}

// toy_reduced_quadratic after also deleting the negative -2 x2x3 term.
inline Polynomial toy_final() {
    return from_terms({
        {Monomial{1, 2}, 8},
        {Monomial{1, 4}, -3},
        {Monomial{2, 4}, -8},
        {Monomial{2, 5}, 1},
        {Monomial{2}, 3},
        {Monomial{3, 4}, 4},
        {Monomial{3}, 1},
        {Monomial{4}, 4},
        {Monomial{}, 1},
    });
}

// What deleting every term containing a vanishing product (no error terms,
// no care for signs) leaves behind: dips to -3, the motivating failure.
inline Polynomial toy_naive() {
    return from_terms({
        {Monomial{1, 4}, -3},
        {Monomial{2, 4}, -8},
        {Monomial{2, 5}, 1},
        {Monomial{2}, 3},
        {Monomial{3, 4}, 4},
        {Monomial{3}, 1},
        {Monomial{4}, 4},
        {Monomial{}, 1},
    });
}

// Values of toy_hamiltonian over (x1..x5), x1 the most significant bit.
inline std::vector<Integer> toy_spectrum() {
    return {1, 1, 5, 5, 2, 2, 10, 10, 4, 5, 0, 1, 3, 2, 3,  2,
            1, 1, 2, 2, 2, 2, 5, 5, 10, 11, 3, 6, 9, 8, 4, 5};
}

}  // namespace fixtures
