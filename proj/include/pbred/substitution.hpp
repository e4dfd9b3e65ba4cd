#pragma once

#include <vector>

#include "pbred/equation.hpp"
#include "pbred/errors.hpp"
#include "pbred/polynomial.hpp"

namespace pbred {

// Ordered variable-elimination chain: each step rewrites one variable as a
// polynomial over variables still live at that point (a constant, another
// variable, or its complement in practice). Applying the chain to a
// polynomial performs the eliminations; lifting walks backwards to
// reconstruct eliminated variables from a reduced-space assignment.
class Substitution {
public:
    struct Step {
        var_index variable;
        Polynomial replacement;
    };

    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }
    const std::vector<Step>& steps() const { return steps_; }

    bool eliminates(var_index v) const {
        for (const Step& s : steps_)
            if (s.variable == v) return true;
        return false;
    }

    void fix(var_index v, bool value) { steps_.push_back({v, Polynomial::constant(value ? 1 : 0)}); }

    void replace(var_index v, Polynomial replacement) { steps_.push_back({v, std::move(replacement)}); }

    Polynomial apply(const Polynomial& p) const {
        Polynomial out = p;
        for (const Step& s : steps_) out = out.substitute(s.variable, s.replacement);
        return out;
    }

    BinaryEquation apply(const BinaryEquation& eq) const {
        return BinaryEquation{apply(eq.lhs), apply(eq.rhs)}.normalized();
    }

    // Image of a single variable under the whole chain.
    Polynomial image(var_index v) const { return apply(Polynomial::variable(v)); }

    // Extends a reduced-space assignment with values for every eliminated
    // variable. The input must cover whatever live variables the chain
    // references; throws UncoveredVariableError otherwise.
    Assignment lift(const Assignment& reduced) const {
        Assignment full = reduced;
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
            full.set(it->variable, it->replacement.evaluate(full) != 0);
        return full;
    }

    // True when the full-space assignment agrees with every elimination.
    bool consistent(const Assignment& full) const {
        for (const Step& s : steps_) {
            auto bit = full.get(s.variable);
            if (!bit) throw UncoveredVariableError(s.variable);
            if ((s.replacement.evaluate(full) != 0) != *bit) return false;
        }
        return true;
    }

private:
    std::vector<Step> steps_;
};

}  // namespace pbred
