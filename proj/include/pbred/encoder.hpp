#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pbred/equation.hpp"
#include "pbred/variable.hpp"

namespace pbred {

// Binary multiplication table for product = p * q with fixed factor widths.
// Bit 0 and the top bit of each factor are hard-wired to 1 (odd factors with
// known widths), every other factor bit and every carry is a variable.
// Column equations follow long multiplication:
//
//   sum of partial products + carries into the column
//     = product bit + 2^k * carry variables out of the column
//
// with enough carry slots to cover the column's maximum possible sum.
struct FactorizationInstance {
    Integer product;
    unsigned p_bits = 0;
    unsigned q_bits = 0;
    VariableRegistry variables;
    // free factor bits by position (positions 1 .. width-2)
    std::map<unsigned, var_index> p_vars;
    std::map<unsigned, var_index> q_vars;
    std::vector<BinaryEquation> equations;

    // Factor value as a polynomial over the free bits.
    Polynomial p_polynomial() const;
    Polynomial q_polynomial() const;

    // Single redundant equation p(x) * q(x) = product. It carries no new
    // information but its interval bounds encode the achievable product
    // range, which lets a search prune on the high factor bits long before
    // the per-column equations say anything.
    BinaryEquation aggregate_equation() const;

    // Variable order for search: factor bits from the most significant free
    // position down, alternating between the two factors, then carries in
    // column order. High factor bits move the product bound estimates the
    // most, so fixing them first gives interval pruning real leverage.
    std::vector<var_index> search_order_msb_first() const;

    // Plain low-to-high allocation order (identity permutation).
    std::vector<var_index> search_order_lsb_first() const;
};

// Builds the multiplication table. Throws InvalidProductError for even or
// tiny products, InfeasibleWidthsError when no odd factor pair with the
// requested widths can reach the product.
FactorizationInstance encode(const Integer& product, unsigned p_bits, unsigned q_bits);

// Picks factor widths for a product of unknown shape: splits the product's
// bit length as evenly as possible, preferring the wider-second split when
// both are achievable. Throws InfeasibleWidthsError when neither candidate
// split can represent the product.
std::pair<unsigned, unsigned> choose_balanced_split(const Integer& product);

// encode() with widths from choose_balanced_split().
FactorizationInstance encode_balanced(const Integer& product);

}  // namespace pbred
