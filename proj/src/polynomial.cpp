#include "pbred/polynomial.hpp"

#include <algorithm>
#include <set>

#include "pbred/errors.hpp"

namespace pbred {

Polynomial Polynomial::constant(Integer c) {
    return monomial(Monomial::unit(), std::move(c));
}

Polynomial Polynomial::variable(var_index v) {
    return monomial(Monomial::variable(v));
}

Polynomial Polynomial::monomial(Monomial m, Integer c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

Integer Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.front().first.is_unit()) return terms_.front().second;
    return 0;
}

Integer Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.first < x; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

std::size_t Polynomial::degree() const {
    std::size_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

DegreeProfile Polynomial::degree_profile() const {
    DegreeProfile profile;
    std::set<var_index> vars;
    for (const Term& t : terms_) {
        profile.terms[t.first.degree()] += 1;
        vars.insert(t.first.variables().begin(), t.first.variables().end());
    }
    profile.variable_count = vars.size();
    return profile;
}

std::vector<var_index> Polynomial::support() const {
    std::set<var_index> vars;
    for (const Term& t : terms_)
        vars.insert(t.first.variables().begin(), t.first.variables().end());
    return {vars.begin(), vars.end()};
}

bool Polynomial::mentions(var_index v) const {
    for (const Term& t : terms_)
        if (t.first.contains(v)) return true;
    return false;
}

Integer Polynomial::max_abs_bound() const {
    Integer bound = 0;
    for (const Term& t : terms_) bound += abs(t.second);
    return bound;
}

Integer Polynomial::evaluate(const Assignment& a) const {
    Integer value = 0;
    for (const Term& t : terms_) {
        bool zero = false;
        for (var_index v : t.first.variables()) {
            auto bit = a.get(v);
            if (!bit) throw UncoveredVariableError(v);
            if (!*bit) {
                zero = true;
                break;
            }
        }
        if (!zero) value += t.second;
    }
    return value;
}

Polynomial Polynomial::partial_evaluate(const Assignment& a) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::vector<var_index> rest;
        bool zero = false;
        for (var_index v : t.first.variables()) {
            auto bit = a.get(v);
            if (!bit)
                rest.push_back(v);
            else if (!*bit) {
                zero = true;
                break;
            }
        }
        if (!zero) out.emplace_back(Monomial(std::move(rest)), t.second);
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(var_index v, const Polynomial& replacement) const {
    // p = p0 + x_v * p1; result = p0 + replacement * p1.
    std::vector<Term> p0, p1;
    for (const Term& t : terms_) {
        if (t.first.contains(v))
            p1.emplace_back(t.first.without(v), t.second);
        else
            p0.push_back(t);
    }
    if (p1.empty()) return *this;
    return from_terms(std::move(p0)) + from_terms(std::move(p1)) * replacement;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.second = -t.second;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    out.insert(out.end(), terms_.begin(), terms_.end());
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<Term> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : other.terms_)
            out.emplace_back(a.first.times(b.first), a.second * b.second);
    return from_terms(std::move(out));
}

Polynomial Polynomial::operator*(const Integer& scalar) const {
    if (scalar == 0) return {};
    Polynomial p = *this;
    for (Term& t : p.terms_) t.second *= scalar;
    return p;
}

std::vector<Integer> spectrum(const Polynomial& p, const std::vector<var_index>& order,
                              std::size_t cap) {
    const std::size_t n = order.size();
    if (n > cap) throw TooManyVariablesError(n, cap);
    std::map<var_index, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    std::vector<Integer> out(std::size_t{1} << n, Integer(0));
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t mask = 0;
        for (var_index v : m.variables()) {
            auto it = position.find(v);
            if (it == position.end()) throw UncoveredVariableError(v);
            mask |= std::uint64_t{1} << (n - 1 - it->second);  // order[0] = MSB
        }
        // Add c at every state whose bits are a superset of mask.
        const std::uint64_t rest = ((n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) & ~mask;
        std::uint64_t sub = rest;
        while (true) {
            out[mask | sub] += c;
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
    }
    return out;
}

}  // namespace pbred
