#include "pbred/deduction.hpp"

#include <algorithm>

#include "pbred/enumeration.hpp"
#include "pbred/errors.hpp"

namespace pbred {

Deduction make_deduction(Polynomial f, Polynomial g, DeductionSource source) {
    if (f.is_constant())
        throw DegreeViolationError("deduction left side must be non-constant");
    if (g.degree() >= f.degree())
        throw DegreeViolationError("deduction must lower the degree: deg(g) = " +
                                   std::to_string(g.degree()) + " >= deg(f) = " +
                                   std::to_string(f.degree()));
    return {std::move(f), std::move(g), source};
}

Deduction product_zero_deduction(Monomial m, DeductionSource source) {
    return {Polynomial::monomial(std::move(m)), Polynomial(), source};
}

VerificationResult verify_deduction(const Deduction& d,
                                    const std::vector<BinaryEquation>& equations,
                                    std::size_t cap) {
    std::vector<var_index> universe;
    auto absorb = [&universe](const Polynomial& p) {
        std::vector<var_index> s = p.support();
        universe.insert(universe.end(), s.begin(), s.end());
    };
    absorb(d.f);
    absorb(d.g);
    for (const BinaryEquation& eq : equations) {
        absorb(eq.lhs);
        absorb(eq.rhs);
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    if (universe.size() > cap || universe.size() > 63) return {};

    DenseEvaluator difference(d.f - d.g, universe);
    std::vector<DenseEvaluator> constraints;
    constraints.reserve(equations.size());
    for (const BinaryEquation& eq : equations) constraints.emplace_back(eq.difference(), universe);

    VerificationResult result;
    const std::uint64_t total = std::uint64_t(1) << universe.size();
    for (std::uint64_t state = 0; state < total; ++state) {
        bool solution = true;
        for (const DenseEvaluator& c : constraints)
            if (!c.is_zero_at(state)) {
                solution = false;
                break;
            }
        if (!solution) continue;
        ++result.checked_states;
        if (!difference.is_zero_at(state)) {
            result.status = VerificationStatus::counterexample_found;
            result.counterexample = assignment_from_state(universe, state);
            return result;
        }
    }
    result.status = VerificationStatus::holds;
    return result;
}

}  // namespace pbred
