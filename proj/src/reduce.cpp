#include "pbred/reduce.hpp"

#include "pbred/errors.hpp"

namespace pbred {

namespace {

const Monomial& applicable_monomial(const Deduction& d) {
    if (!d.f_is_monomial())
        throw InapplicableDeductionError(
            "only deductions with a single coefficient-1 monomial on the left can be applied");
    return d.f_monomial();
}

}  // namespace

DivisionResult divide_by_monomial(const Polynomial& h, const Monomial& m) {
    if (m.is_unit()) throw Error("division by the unit monomial");
    std::vector<Polynomial::Term> quotient, remainder;
    for (const auto& [mono, c] : h.terms()) {
        if (mono.contains(m))
            quotient.emplace_back(mono.divide_out(m), c);
        else
            remainder.emplace_back(mono, c);
    }
    return {Polynomial::from_terms(std::move(quotient)),
            Polynomial::from_terms(std::move(remainder))};
}

std::pair<Polynomial, ReductionStep> deduc_reduc(const Polynomial& h, const Deduction& d,
                                                 std::optional<Integer> lambda) {
    const Monomial& fm = applicable_monomial(d);
    auto [q, r] = divide_by_monomial(h, fm);
    if (q.is_zero())
        throw InapplicableDeductionError("the deduction divides no term of the polynomial");

    const Integer bound = q.max_abs_bound();
    const Integer weight = lambda.value_or(bound);
    if (weight < 0) throw NegativeLambdaError("lambda must be non-negative");
    if (weight < bound) {
        // Below the always-sufficient bound; accept only the g = 0 case where
        // covering the positive part of q is enough.
        Integer positive_part = 0;
        for (const auto& [m, c] : q.terms())
            if (c > 0) positive_part += c;
        if (!(d.g.is_zero() && weight >= positive_part))
            throw NegativeLambdaError("lambda " + weight.str() +
                                      " is below the conservative sufficiency bound " +
                                      bound.str());
    }

    Polynomial reduced = q * d.g + r + d.error_term() * weight;
    ReductionStep step{d,
                       weight == 0 ? ReductionMode::straight : ReductionMode::error_term,
                       weight,
                       Monomial::unit(),
                       q,
                       h.degree_profile(),
                       reduced.degree_profile()};
    return {std::move(reduced), std::move(step)};
}

std::pair<Polynomial, std::vector<ReductionStep>> split_termwise(
    const Polynomial& h, const Deduction& d, std::optional<std::size_t> only_degree) {
    const Monomial& fm = applicable_monomial(d);
    const Polynomial error = d.error_term();
    const std::size_t error_degree = error.degree();

    std::vector<Polynomial::Term> targets;
    for (const auto& term : h.terms()) {
        if (!term.first.properly_contains(fm)) continue;
        if (only_degree && term.first.degree() != *only_degree) continue;
        if (!d.g.is_zero() && error_degree >= term.first.degree()) continue;
        targets.push_back(term);
    }

    Polynomial current = h;
    std::vector<ReductionStep> steps;
    steps.reserve(targets.size());
    for (const auto& [m, c] : targets) {
        const Polynomial quotient = Polynomial::monomial(m.divide_out(fm), c);
        DegreeProfile before = current.degree_profile();
        ReductionMode mode;
        Integer weight;
        if (c < 0 && d.g.is_zero()) {
            // Deleting a negative term can only raise energies off the
            // ground states, and costs nothing on them.
            current = current - Polynomial::monomial(m, c);
            mode = ReductionMode::straight;
            weight = 0;
        } else {
            weight = abs(c);
            current = current - Polynomial::monomial(m, c) + quotient * d.g + error * weight;
            mode = ReductionMode::error_term;
        }
        steps.push_back(
            {d, mode, weight, m, quotient, std::move(before), current.degree_profile()});
    }
    return {std::move(current), std::move(steps)};
}

std::pair<Polynomial, ReductionStep> straight_substitute_nonpositive(const Polynomial& h,
                                                                     const Deduction& d) {
    const Monomial& fm = applicable_monomial(d);
    if (!d.g.is_zero())
        throw InapplicableDeductionError("straight substitution requires g = 0");
    auto [q, r] = divide_by_monomial(h, fm);
    if (q.is_zero())
        throw InapplicableDeductionError("the deduction divides no term of the polynomial");
    for (const auto& [m, c] : q.terms())
        if (c > 0)
            throw PositiveCoefficientError(
                "a term containing the deduction has a positive coefficient");

    ReductionStep step{d,
                       ReductionMode::straight,
                       0,
                       Monomial::unit(),
                       q,
                       h.degree_profile(),
                       r.degree_profile()};
    return {std::move(r), std::move(step)};
}

}  // namespace pbred
