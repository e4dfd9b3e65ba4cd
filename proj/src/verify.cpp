#include "pbred/verify.hpp"

#include <algorithm>

#include "pbred/enumeration.hpp"
#include "pbred/errors.hpp"
#include "pbred/reduce.hpp"

namespace pbred {

namespace {

std::vector<var_index> sorted_union(std::initializer_list<const Polynomial*> polys,
                                    const Substitution& chain) {
    std::vector<var_index> universe;
    for (const Polynomial* p : polys) {
        std::vector<var_index> s = p->support();
        universe.insert(universe.end(), s.begin(), s.end());
    }
    for (const auto& step : chain.steps()) {
        universe.push_back(step.variable);
        std::vector<var_index> s = step.replacement.support();
        universe.insert(universe.end(), s.begin(), s.end());
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    return universe;
}

}  // namespace

EquivalenceVerdict compare_ground_states(const Polynomial& before, const Polynomial& after,
                                         const Substitution& chain, std::size_t cap) {
    std::vector<var_index> universe = sorted_union({&before, &after}, chain);
    EquivalenceVerdict verdict;
    if (universe.size() > cap || universe.size() > 63) return verdict;  // too_large

    const std::size_t n = universe.size();
    DenseEvaluator eval_before(before, universe);
    DenseEvaluator eval_after(after, universe);

    // Each chain step constrains one bit to match its replacement's value.
    struct StepCheck {
        std::uint64_t bit;
        DenseEvaluator value;
    };
    std::vector<StepCheck> checks;
    checks.reserve(chain.steps().size());
    for (const auto& step : chain.steps()) {
        std::size_t pos = std::lower_bound(universe.begin(), universe.end(), step.variable) -
                          universe.begin();
        checks.push_back({std::uint64_t(1) << (n - 1 - pos),
                          DenseEvaluator(step.replacement, universe)});
    }

    std::optional<std::uint64_t> first_negative, first_spurious, first_lost;
    Integer negative_value;
    std::optional<Integer> min_before, min_after;

    const std::uint64_t total = std::uint64_t(1) << n;
    for (std::uint64_t state = 0; state < total; ++state) {
        Integer b = eval_before.eval(state);
        if (!min_before || b < *min_before) min_before = b;

        bool consistent = true;
        for (const StepCheck& c : checks) {
            bool bit = (state & c.bit) != 0;
            if (bit != !c.value.is_zero_at(state)) {
                consistent = false;
                break;
            }
        }
        if (consistent) {
            Integer a = eval_after.eval(state);
            if (!min_after || a < *min_after) min_after = a;
            if (a < 0 && !first_negative) {
                first_negative = state;
                negative_value = a;
            }
            if (a == 0 && b != 0 && !first_spurious) first_spurious = state;
            if (b == 0 && a != 0 && !first_lost) first_lost = state;
        } else if (b == 0 && !first_lost) {
            // The reduction removed a state the original counts as a ground
            // state.
            first_lost = state;
        }
    }

    verdict.checked_states = total;
    verdict.min_before = min_before;
    verdict.min_after = min_after;
    if (first_negative) {
        verdict.status = EquivalenceStatus::negative_energy;
        verdict.witness = assignment_from_state(universe, *first_negative);
        verdict.value = negative_value;
    } else if (first_spurious) {
        verdict.status = EquivalenceStatus::spurious_ground_state;
        verdict.witness = assignment_from_state(universe, *first_spurious);
    } else if (first_lost) {
        verdict.status = EquivalenceStatus::ground_state_lost;
        verdict.witness = assignment_from_state(universe, *first_lost);
    } else {
        verdict.status = EquivalenceStatus::equivalent;
    }
    return verdict;
}

Polynomial naive_substitute(const Polynomial& h, const Deduction& d) {
    if (!d.f_is_monomial())
        throw InapplicableDeductionError(
            "only deductions with a single coefficient-1 monomial on the left can be applied");
    auto [q, r] = divide_by_monomial(h, d.f_monomial());
    if (q.is_zero())
        throw InapplicableDeductionError("the deduction divides no term of the polynomial");
    return q * d.g + r;
}

std::pair<Integer, Integer> decode_factors(const FactorizationInstance& inst,
                                           const Assignment& a) {
    for (const BinaryEquation& eq : inst.equations)
        if (!eq.holds(a))
            throw NotASolutionError("a column equation fails at the given assignment");
    Integer p = inst.p_polynomial().evaluate(a);
    Integer q = inst.q_polynomial().evaluate(a);
    if (p * q != inst.product)
        throw NotASolutionError("factor bits do not multiply to the product");
    return {p, q};
}

Integer brute_force_minimum(const Polynomial& p, std::size_t cap) {
    std::vector<var_index> vars = p.support();
    if (vars.size() > cap || vars.size() > 63)
        throw TooManyVariablesError(vars.size(), std::min<std::size_t>(cap, 63));
    if (vars.empty()) return p.constant_term();

    DenseEvaluator eval(p, vars);
    const std::uint64_t total = std::uint64_t(1) << vars.size();
    if (eval.fits64()) {
        long long best = eval.eval64(0);
        for (std::uint64_t state = 1; state < total; ++state)
            best = std::min(best, eval.eval64(state));
        return Integer(best);
    }
    Integer best = eval.eval_big(0);
    for (std::uint64_t state = 1; state < total; ++state) {
        Integer value = eval.eval_big(state);
        if (value < best) best = std::move(value);
    }
    return best;
}

std::vector<Assignment> enumerate_zeros(const Polynomial& p, std::vector<var_index> order,
                                        std::size_t cap) {
    if (order.empty()) order = p.support();
    if (order.size() > cap || order.size() > 63)
        throw TooManyVariablesError(order.size(), std::min<std::size_t>(cap, 63));

    std::vector<Assignment> zeros;
    if (order.empty()) {
        if (p.is_zero()) zeros.push_back({});
        return zeros;
    }
    DenseEvaluator eval(p, order);
    const std::uint64_t total = std::uint64_t(1) << order.size();
    for (std::uint64_t state = 0; state < total; ++state)
        if (eval.is_zero_at(state)) zeros.push_back(assignment_from_state(order, state));
    return zeros;
}

}  // namespace pbred
