#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pbred/deduction.hpp"
#include "pbred/polynomial.hpp"

namespace pbred {

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

// h = quotient * m + remainder with no remainder term divisible by m.
// m must not be the unit monomial.
DivisionResult divide_by_monomial(const Polynomial& h, const Monomial& m);

enum class ReductionMode { error_term, straight };

// One rewrite of h using a deduction, with enough context to re-check the
// pointwise inequality 0 <= quotient * (g - f) + lambda * (f - g)^2 later.
struct ReductionStep {
    Deduction deduction;
    ReductionMode mode = ReductionMode::error_term;
    Integer lambda;
    // Term rewritten in per-term mode; the unit monomial for whole-polynomial
    // applications.
    Monomial target;
    // q in h = q * f + r at the moment this step ran.
    Polynomial quotient;
    DegreeProfile before;
    DegreeProfile after;
};

// Whole-polynomial rewrite: h = q*f + r becomes q*g + r + lambda*(f-g)^2.
// The default lambda is the absolute-coefficient bound of q, which always
// suffices. A user lambda is accepted only when a conservative check shows
// it sufficient: lambda >= bound(q), or g = 0 and lambda >= the sum of q's
// positive coefficients (throws NegativeLambdaError otherwise). Throws
// InapplicableDeductionError when f is not a coefficient-1 monomial or does
// not divide any term of h.
std::pair<Polynomial, ReductionStep> deduc_reduc(const Polynomial& h, const Deduction& d,
                                                 std::optional<Integer> lambda = {});

// Per-term rewrite: every term c*m with m a proper superset of f's monomial
// is replaced by c*(m/f)*g + |c|*(f-g)^2, except that negative terms with
// g = 0 are simply deleted (lambda 0 suffices there). Terms equal to f
// itself are left alone. Targets whose error term would not lower the
// degree (possible only when g != 0) are skipped. With only_degree set,
// just the targets of that exact degree are touched.
std::pair<Polynomial, std::vector<ReductionStep>> split_termwise(
    const Polynomial& h, const Deduction& d, std::optional<std::size_t> only_degree = {});

// Deletes every term containing f's monomial. Requires g = 0 and all such
// terms negative (PositiveCoefficientError otherwise): dropping negative
// terms can only raise energies, and ground states are unaffected because
// f vanishes there. Throws InapplicableDeductionError when nothing matches.
std::pair<Polynomial, ReductionStep> straight_substitute_nonpositive(const Polynomial& h,
                                                                     const Deduction& d);

}  // namespace pbred
