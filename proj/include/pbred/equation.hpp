#pragma once

#include <vector>

#include "pbred/polynomial.hpp"

namespace pbred {

// lhs = rhs with non-negative integer coefficients on both sides.
struct BinaryEquation {
    Polynomial lhs;
    Polynomial rhs;

    Polynomial difference() const { return lhs - rhs; }

    // Rewrites as pos(lhs-rhs) = neg(lhs-rhs): shared terms cancel and both
    // sides stay non-negative. Trivial equations normalize to 0 = 0.
    BinaryEquation normalized() const;

    bool is_trivial() const;

    // (lhs - rhs)^2, the equation's energy penalty.
    Polynomial penalty() const;

    // Holds at the assignment (which must cover both sides).
    bool holds(const Assignment& a) const;

    bool operator==(const BinaryEquation&) const = default;
};

// Interval of possible values of a non-negative-coefficient polynomial under
// a partial assignment, treating unassigned variables independently per term.
struct SideBounds {
    Integer min;
    Integer max;
};

SideBounds side_bounds(const Polynomial& side, const Assignment& partial);

// Sum of squared differences over all equations.
Polynomial hamiltonian_from_equations(const std::vector<BinaryEquation>& equations);

}  // namespace pbred
