#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pbred/equation.hpp"
#include "pbred/polynomial.hpp"

namespace pbred {

enum class DeductionSource { user, simple_judgment, search_pattern };

// An identity f = g that holds at every ground state of the system it was
// derived from (not necessarily elsewhere), with deg(g) < deg(f). The error
// term (f-g)^2 vanishes exactly where the identity holds.
struct Deduction {
    Polynomial f;
    Polynomial g;
    DeductionSource source = DeductionSource::user;

    Polynomial error_term() const {
        Polynomial d = f - g;
        return d * d;
    }

    // True when f is a single coefficient-1 monomial of degree >= 1, the
    // only shape the rewriting machinery can divide by.
    bool f_is_monomial() const {
        return f.terms().size() == 1 && f.terms()[0].second == 1 && f.degree() >= 1;
    }

    // The monomial of f; only meaningful when f_is_monomial().
    const Monomial& f_monomial() const { return f.terms()[0].first; }

    bool operator==(const Deduction&) const = default;
};

// Validates the degree contract: f non-constant, deg(g) < deg(f).
// Throws DegreeViolationError otherwise.
Deduction make_deduction(Polynomial f, Polynomial g,
                         DeductionSource source = DeductionSource::user);

// Convenience for the common "this monomial vanishes" deduction.
Deduction product_zero_deduction(Monomial m, DeductionSource source);

enum class VerificationStatus { holds, counterexample_found, unverifiable };

struct VerificationResult {
    VerificationStatus status = VerificationStatus::unverifiable;
    // First state (in lexicographic order over the sorted variable universe)
    // that satisfies every equation but violates the deduction.
    std::optional<Assignment> counterexample;
    // How many solutions of the equations were tested against f = g.
    std::uint64_t checked_states = 0;
};

// Exhaustively checks f = g at every solution of the equation system. The
// enumeration universe is the union of the supports of f, g and all
// equations; universes beyond `cap` variables are Unverifiable.
VerificationResult verify_deduction(const Deduction& d,
                                    const std::vector<BinaryEquation>& equations,
                                    std::size_t cap = 25);

}  // namespace pbred
