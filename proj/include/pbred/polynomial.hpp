#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pbred/assignment.hpp"
#include "pbred/monomial.hpp"

namespace pbred {

using Integer = boost::multiprecision::cpp_int;

struct DegreeProfile {
    // degree -> number of terms of that degree; degrees with zero terms are absent.
    std::map<std::size_t, std::size_t> terms;
    std::size_t variable_count = 0;

    std::size_t at(std::size_t degree) const {
        auto it = terms.find(degree);
        return it == terms.end() ? 0 : it->second;
    }

    bool operator==(const DegreeProfile&) const = default;
};

// Multilinear polynomial over 0/1 variables with integer coefficients, in
// canonical form: terms sorted by monomial, no zero coefficients. Values are
// immutable; every operation returns a fresh polynomial.
class Polynomial {
public:
    using Term = std::pair<Monomial, Integer>;

    Polynomial() = default;

    static Polynomial constant(Integer c);
    static Polynomial variable(var_index v);
    static Polynomial monomial(Monomial m, Integer c = 1);
    // Canonicalizes: sorts, merges duplicate monomials (idempotent variables
    // are already collapsed by Monomial itself), drops zero coefficients.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }

    Integer constant_term() const;
    Integer coefficient(const Monomial& m) const;

    std::size_t degree() const;
    DegreeProfile degree_profile() const;
    std::vector<var_index> support() const;
    bool mentions(var_index v) const;

    // Sum of absolute coefficient values: a bound on |value| at any state.
    Integer max_abs_bound() const;

    // Throws UncoveredVariableError when the assignment misses a variable.
    Integer evaluate(const Assignment& a) const;

    // Fixes the assigned variables, keeps the rest symbolic.
    Polynomial partial_evaluate(const Assignment& a) const;

    // Replace x_v by an arbitrary polynomial. The result is multilinear again.
    Polynomial substitute(var_index v, const Polynomial& replacement) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Integer& scalar) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Integer& scalar, const Polynomial& p) { return p * scalar; }

// All 2^n values of p over `order`, which must cover p's support. Entry k is
// p at the assignment whose bits are the big-endian expansion of k: order[0]
// is the most significant bit. Throws TooManyVariablesError beyond the cap.
std::vector<Integer> spectrum(const Polynomial& p, const std::vector<var_index>& order,
                              std::size_t cap = 25);

}  // namespace pbred
