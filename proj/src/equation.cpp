#include "pbred/equation.hpp"

namespace pbred {

BinaryEquation BinaryEquation::normalized() const {
    Polynomial d = difference();
    std::vector<Polynomial::Term> pos, neg;
    for (const auto& t : d.terms()) {
        if (t.second > 0)
            pos.push_back(t);
        else
            neg.emplace_back(t.first, -t.second);
    }
    return {Polynomial::from_terms(std::move(pos)), Polynomial::from_terms(std::move(neg))};
}

bool BinaryEquation::is_trivial() const { return difference().is_zero(); }

Polynomial BinaryEquation::penalty() const {
    Polynomial d = difference();
    return d * d;
}

bool BinaryEquation::holds(const Assignment& a) const {
    return lhs.evaluate(a) == rhs.evaluate(a);
}

SideBounds side_bounds(const Polynomial& side, const Assignment& partial) {
    SideBounds b{0, 0};
    for (const auto& [m, c] : side.terms()) {
        bool dead = false, fixed = true;
        for (var_index v : m.variables()) {
            auto bit = partial.get(v);
            if (!bit)
                fixed = false;
            else if (!*bit) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        b.max += c;
        if (fixed) b.min += c;
    }
    return b;
}

Polynomial hamiltonian_from_equations(const std::vector<BinaryEquation>& equations) {
    Polynomial h;
    for (const BinaryEquation& eq : equations) h = h + eq.penalty();
    return h;
}

}  // namespace pbred
