#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "pbred/variable.hpp"

namespace pbred {

// Product of distinct variables, kept as a strictly ascending index list.
// The empty monomial is the constant 1. Ordering is lexicographic on the
// index list, which is also the order writers emit terms in.
class Monomial {
public:
    Monomial() = default;

    Monomial(std::initializer_list<var_index> vars) : vars_(vars) { normalize(); }

    explicit Monomial(std::vector<var_index> vars) : vars_(std::move(vars)) { normalize(); }

    static Monomial unit() { return Monomial{}; }

    static Monomial variable(var_index v) { return Monomial{v}; }

    const std::vector<var_index>& variables() const { return vars_; }

    std::size_t degree() const { return vars_.size(); }

    bool is_unit() const { return vars_.empty(); }

    bool contains(var_index v) const {
        return std::binary_search(vars_.begin(), vars_.end(), v);
    }

    bool contains(const Monomial& other) const {
        return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end());
    }

    bool properly_contains(const Monomial& other) const {
        return degree() > other.degree() && contains(other);
    }

    // Idempotent product: union of the two variable sets.
    Monomial times(const Monomial& other) const {
        std::vector<var_index> out;
        out.reserve(vars_.size() + other.vars_.size());
        std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                       std::back_inserter(out));
        Monomial m;
        m.vars_ = std::move(out);
        return m;
    }

    // Requires contains(divisor).
    Monomial divide_out(const Monomial& divisor) const {
        std::vector<var_index> out;
        out.reserve(vars_.size() - divisor.vars_.size());
        std::set_difference(vars_.begin(), vars_.end(), divisor.vars_.begin(),
                            divisor.vars_.end(), std::back_inserter(out));
        Monomial m;
        m.vars_ = std::move(out);
        return m;
    }

    Monomial without(var_index v) const { return divide_out(variable(v)); }

    auto operator<=>(const Monomial&) const = default;

private:
    void normalize() {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    }

    std::vector<var_index> vars_;
};

}  // namespace pbred
