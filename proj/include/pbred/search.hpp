#pragma once

#include <cstdint>
#include <vector>

#include "pbred/equation.hpp"
#include "pbred/monomial.hpp"
#include "pbred/variable.hpp"

namespace pbred {

// Result of the breadth-first enumeration of plausible partial assignments.
// Every surviving state assigns the first `assigned_count` variables of
// `order`; states are lexicographic over that prefix.
struct SearchFrontier {
    std::vector<var_index> order;
    std::size_t assigned_count = 0;
    std::vector<std::vector<std::uint8_t>> states;

    std::vector<var_index> assigned_vars() const {
        return {order.begin(), order.begin() + assigned_count};
    }
};

// Level-synchronous BFS: assigns order[0], order[1], ... one per level,
// keeping only states whose interval bounds still allow every equation to
// balance. Stops after the first completed level whose frontier exceeds
// `budget` (so the frontier never exceeds 2 * budget) or when the order is
// exhausted. Throws NoPlausibleStatesError when a level empties, which
// proves the system infeasible.
SearchFrontier bfs_plausible(const std::vector<BinaryEquation>& equations, std::uint64_t budget,
                             const std::vector<var_index>& order);

// Relations that hold on every state of a frontier.
struct PatternSet {
    std::vector<std::pair<var_index, bool>> constants;
    std::vector<VariableEquality> equalities;
    std::vector<Monomial> zero_products;
};

// Scans the frontier for constants, pairwise equalities/complements and
// vanishing products. degree_cap 2 emits every vanishing pair; degree_cap 3
// adds vanishing triples that have no emitted pair as a subset. Higher caps
// are clamped to 3. All outputs are sorted by variable index.
PatternSet extract_patterns(const SearchFrontier& frontier, std::size_t degree_cap = 2);

}  // namespace pbred
