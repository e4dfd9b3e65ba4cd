#pragma once

#include <map>
#include <vector>

#include "pbred/deduction.hpp"
#include "pbred/equation.hpp"
#include "pbred/substitution.hpp"
#include "pbred/variable.hpp"

namespace pbred {

// Everything the cheap per-equation inferences discovered. Facts are
// recorded in the variable space current at discovery time: the chain in
// `substitution` replays the fixes and equalities in that same order.
struct JudgmentOutcome {
    std::map<var_index, bool> fixed;
    std::vector<VariableEquality> equalities;
    std::vector<Monomial> product_zeros;
    // Surviving equations, normalized, with all fixes/equalities applied.
    std::vector<BinaryEquation> simplified;
    Substitution substitution;

    std::vector<Deduction> product_zero_deductions() const;
};

// Runs the exact single-equation rules to a fixpoint, substituting each
// discovered fact immediately:
//   - interval check: sides whose value ranges cannot meet prove the system
//     infeasible (throws InfeasibleError)
//   - zero side: the other side's degree-1 terms fix to 0, higher terms
//     become vanishing products
//   - saturated side: a constant equal to the other side's maximum forces
//     every variable there to 1
//   - x_a + x_b = 1: complement equality plus a vanishing pair
//   - unit sum: 1 = x_a + x_b + x_c + ... gives pairwise vanishing products
//   - single term: c * x = d fixes x when d/c is 0 or 1, else infeasible
// Only fixes and equalities are substituted; vanishing products are reported
// for the reduction machinery, never applied here.
JudgmentOutcome simple_judgments(std::vector<BinaryEquation> equations);

}  // namespace pbred
