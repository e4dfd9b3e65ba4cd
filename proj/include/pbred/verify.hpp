#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pbred/deduction.hpp"
#include "pbred/encoder.hpp"
#include "pbred/polynomial.hpp"
#include "pbred/substitution.hpp"

namespace pbred {

enum class EquivalenceStatus {
    equivalent,
    negative_energy,      // reduced form dips below zero somewhere
    spurious_ground_state,  // reduced form has a zero the original lacks
    ground_state_lost,    // a zero of the original is gone or nonzero after
    too_large             // enumeration universe exceeds the cap
};

struct EquivalenceVerdict {
    EquivalenceStatus status = EquivalenceStatus::too_large;
    // First offending full-space assignment in lexicographic order, present
    // for every status except equivalent / too_large.
    std::optional<Assignment> witness;
    // Energy of the reduced form at the witness (negative_energy only).
    std::optional<Integer> value;
    std::optional<Integer> min_before;
    std::optional<Integer> min_after;
    std::uint64_t checked_states = 0;
};

// Exhaustively compares ground-state structure. `chain` maps the original
// variable space onto the reduced one; assignments that contradict the chain
// are states the reduction removed, and are only legal to remove when the
// original is nonzero there. Reports the worst anomaly found, in the order
// negative_energy > spurious_ground_state > ground_state_lost, each with its
// lexicographically first witness. The enumeration universe is the union of
// both supports and the chain's variables.
EquivalenceVerdict compare_ground_states(const Polynomial& before, const Polynomial& after,
                                         const Substitution& chain = {}, std::size_t cap = 22);

// Textbook unguarded substitution: replaces every term divisible by f with
// its image under f -> g, no error term. Exists to demonstrate why the
// guarded rewrite is necessary; requires f to be a coefficient-1 monomial.
Polynomial naive_substitute(const Polynomial& h, const Deduction& d);

// Reads the factor bits out of a full-space assignment and returns (p, q).
// Checks every instance equation first and throws NotASolutionError if any
// fails.
std::pair<Integer, Integer> decode_factors(const FactorizationInstance& inst,
                                           const Assignment& a);

// Smallest value of p over all 2^support states (empty support: the
// constant). Enumeration beyond `cap` variables throws
// TooManyVariablesError.
Integer brute_force_minimum(const Polynomial& p, std::size_t cap = 25);

// All zeros of p over its support, as full assignments over `order` when
// given (order must cover the support). Lexicographic order, capped the
// same way.
std::vector<Assignment> enumerate_zeros(const Polynomial& p, std::vector<var_index> order = {},
                                        std::size_t cap = 25);

}  // namespace pbred
