#include "pbred/judgments.hpp"

#include <algorithm>
#include <set>

#include "pbred/errors.hpp"
#include "pbred/text_io.hpp"

namespace pbred {

namespace {

bool all_unit_variables(const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (m.degree() != 1 || c != 1) return false;
    return !p.is_zero();
}

std::string describe(const BinaryEquation& eq) {
    return format_inline(eq.lhs) + " := " + format_inline(eq.rhs);
}

}  // namespace

std::vector<Deduction> JudgmentOutcome::product_zero_deductions() const {
    std::vector<Deduction> out;
    out.reserve(product_zeros.size());
    for (const Monomial& m : product_zeros)
        out.push_back(product_zero_deduction(m, DeductionSource::simple_judgment));
    return out;
}

JudgmentOutcome simple_judgments(std::vector<BinaryEquation> equations) {
    JudgmentOutcome out;
    std::vector<BinaryEquation> work;
    for (const BinaryEquation& eq : equations) {
        BinaryEquation n = eq.normalized();
        if (!n.is_trivial()) work.push_back(std::move(n));
    }

    auto substitute_everywhere = [&work](var_index v, const Polynomial& replacement) {
        std::vector<BinaryEquation> next;
        next.reserve(work.size());
        for (const BinaryEquation& eq : work) {
            BinaryEquation s =
                BinaryEquation{eq.lhs.substitute(v, replacement), eq.rhs.substitute(v, replacement)}
                    .normalized();
            if (!s.is_trivial()) next.push_back(std::move(s));
        }
        work = std::move(next);
    };

    auto fix_variable = [&](var_index v, bool value) {
        out.fixed[v] = value;
        out.substitution.fix(v, value);
        substitute_everywhere(v, Polynomial::constant(value ? 1 : 0));
    };

    auto equate = [&](var_index x, var_index y, bool complement) {
        auto [a, b] = std::minmax(x, y);
        out.equalities.push_back({a, b, complement});
        Polynomial replacement = complement
                                     ? Polynomial::constant(1) - Polynomial::variable(a)
                                     : Polynomial::variable(a);
        out.substitution.replace(b, replacement);
        substitute_everywhere(b, replacement);
    };

    std::set<Monomial> seen_products;
    auto record_product = [&](const Monomial& m) {
        if (!seen_products.insert(m).second) return false;
        out.product_zeros.push_back(m);
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t idx = 0; idx < work.size() && !changed; ++idx) {
            const BinaryEquation eq = work[idx];  // the rules below may rewrite `work`

            // Interval check first: each side of a normalized equation ranges
            // over [constant term, sum of coefficients].
            const Integer lmin = eq.lhs.constant_term(), lmax = eq.lhs.max_abs_bound();
            const Integer rmin = eq.rhs.constant_term(), rmax = eq.rhs.max_abs_bound();
            if (lmin > rmax || rmin > lmax)
                throw InfeasibleError("equation can never balance: " + describe(eq));

            const Polynomial* sides[2] = {&eq.lhs, &eq.rhs};
            for (int si = 0; si < 2 && !changed; ++si) {
                const Polynomial& a = *sides[si];
                const Polynomial& b = *sides[1 - si];

                // Zero side: every degree-1 term opposite fixes to 0, every
                // higher term is a vanishing product.
                if (a.is_zero()) {
                    std::vector<var_index> fixes;
                    std::vector<Monomial> products;
                    for (const auto& [m, c] : b.terms()) {
                        if (m.degree() == 1)
                            fixes.push_back(m.variables()[0]);
                        else if (m.degree() >= 2)
                            products.push_back(m);
                    }
                    for (const Monomial& m : products)
                        if (record_product(m)) changed = true;
                    for (var_index v : fixes) {
                        fix_variable(v, false);
                        changed = true;
                    }
                    continue;
                }

                // Saturated side: a constant equal to the opposite side's
                // maximum forces every variable there to 1.
                if (a.is_constant() && !b.is_constant() &&
                    b.max_abs_bound() == a.constant_term()) {
                    for (var_index v : b.support()) {
                        fix_variable(v, true);
                        changed = true;
                    }
                    continue;
                }

                if (a.is_constant() && a.constant_term() == 1 && all_unit_variables(b)) {
                    // Complement pair: x + y = 1.
                    if (b.terms().size() == 2) {
                        var_index x = b.terms()[0].first.variables()[0];
                        var_index y = b.terms()[1].first.variables()[0];
                        if (record_product(Monomial{x, y})) changed = true;
                        equate(x, y, true);
                        changed = true;
                        continue;
                    }
                    // Unit sum: exactly one of three or more variables is 1,
                    // so every pair vanishes.
                    if (b.terms().size() >= 3) {
                        const auto& terms = b.terms();
                        for (std::size_t i = 0; i < terms.size(); ++i)
                            for (std::size_t j = i + 1; j < terms.size(); ++j) {
                                Monomial pair{terms[i].first.variables()[0],
                                              terms[j].first.variables()[0]};
                                if (record_product(pair)) changed = true;
                            }
                        continue;
                    }
                }

                // Single term: c * x = d.
                if (b.is_constant() && !b.is_zero() && a.terms().size() == 1 &&
                    a.degree() == 1) {
                    const Integer c = a.terms()[0].second;
                    const Integer d = b.constant_term();
                    if (d % c != 0 || d / c > 1)
                        throw InfeasibleError("variable forced outside 0/1: " + describe(eq));
                    fix_variable(a.terms()[0].first.variables()[0], d / c == 1);
                    changed = true;
                    continue;
                }
            }
        }
    }

    out.simplified = std::move(work);
    return out;
}

}  // namespace pbred
