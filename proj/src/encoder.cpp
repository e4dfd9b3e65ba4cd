#include "pbred/encoder.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "pbred/errors.hpp"

namespace pbred {

namespace {

Integer pow2(unsigned k) { return Integer(1) << k; }

unsigned bit_length(const Integer& n) {
    return n == 0 ? 0 : boost::multiprecision::msb(n) + 1;
}

// Product range reachable by odd factors of exactly these widths.
std::pair<Integer, Integer> width_range(unsigned a, unsigned b) {
    return {(pow2(a - 1) + 1) * (pow2(b - 1) + 1), (pow2(a) - 1) * (pow2(b) - 1)};
}

void check_product(const Integer& product) {
    if (product < 3 || product % 2 == 0)
        throw InvalidProductError("product must be an odd integer >= 3, got " + product.str());
}

}  // namespace

Polynomial FactorizationInstance::p_polynomial() const {
    Polynomial p = Polynomial::constant(1 + pow2(p_bits - 1));
    for (const auto& [pos, v] : p_vars) p = p + pow2(pos) * Polynomial::variable(v);
    return p;
}

Polynomial FactorizationInstance::q_polynomial() const {
    Polynomial q = Polynomial::constant(1 + pow2(q_bits - 1));
    for (const auto& [pos, v] : q_vars) q = q + pow2(pos) * Polynomial::variable(v);
    return q;
}

BinaryEquation FactorizationInstance::aggregate_equation() const {
    return {p_polynomial() * q_polynomial(), Polynomial::constant(product)};
}

std::vector<var_index> FactorizationInstance::search_order_msb_first() const {
    std::vector<var_index> order;
    order.reserve(variables.size());
    unsigned top = std::max(p_bits, q_bits);
    for (unsigned pos = top; pos-- > 1;) {
        if (auto it = p_vars.find(pos); it != p_vars.end()) order.push_back(it->second);
        if (auto it = q_vars.find(pos); it != q_vars.end()) order.push_back(it->second);
    }
    for (var_index v = 0; v < variables.size(); ++v)
        if (variables.info(v).role == VariableRole::carry) order.push_back(v);
    return order;
}

std::vector<var_index> FactorizationInstance::search_order_lsb_first() const {
    std::vector<var_index> order(variables.size());
    for (var_index v = 0; v < variables.size(); ++v) order[v] = v;
    return order;
}

FactorizationInstance encode(const Integer& product, unsigned p_bits, unsigned q_bits) {
    check_product(product);
    if (p_bits < 2 || q_bits < 2)
        throw InfeasibleWidthsError("factor widths must be at least 2 bits");
    auto [lo, hi] = width_range(p_bits, q_bits);
    if (product < lo || product > hi)
        throw InfeasibleWidthsError("no odd " + std::to_string(p_bits) + "-bit by " +
                                    std::to_string(q_bits) + "-bit factor pair can multiply to " +
                                    product.str());

    FactorizationInstance inst;
    inst.product = product;
    inst.p_bits = p_bits;
    inst.q_bits = q_bits;

    // Bit i of a factor: hard-wired 1 at the ends, else the free variable.
    auto bit_poly = [](unsigned i, unsigned width, const std::map<unsigned, var_index>& vars) {
        if (i == 0 || i == width - 1) return Polynomial::constant(1);
        return Polynomial::variable(vars.at(i));
    };

    std::map<unsigned, std::vector<var_index>> incoming;  // column -> carries landing there
    const unsigned max_pp_col = (p_bits - 1) + (q_bits - 1);
    const unsigned n_bits = bit_length(product);

    for (unsigned col = 0;; ++col) {
        // Free factor bits first appear in their own column (times bit 0 of
        // the other factor), so allocating here keeps indices column-ordered.
        if (col >= 1 && col + 1 < p_bits)
            inst.p_vars[col] = inst.variables.add({VariableRole::factor_p, col, 0});
        if (col >= 1 && col + 1 < q_bits)
            inst.q_vars[col] = inst.variables.add({VariableRole::factor_q, col, 0});

        bool more_incoming = false;
        for (const auto& [c, vars] : incoming)
            if (c >= col && !vars.empty()) more_incoming = true;
        if (col > max_pp_col && !more_incoming && n_bits <= col) break;

        Polynomial lhs;
        unsigned i_lo = col >= q_bits ? col - (q_bits - 1) : 0;
        for (unsigned i = i_lo; i <= col && i < p_bits; ++i)
            lhs = lhs + bit_poly(i, p_bits, inst.p_vars) * bit_poly(col - i, q_bits, inst.q_vars);
        if (auto it = incoming.find(col); it != incoming.end())
            for (var_index v : it->second) lhs = lhs + Polynomial::variable(v);

        // Max possible column sum decides how many carry slots the column
        // needs: slots 2^1 .. 2^K reach every value the sum can take.
        Integer s = lhs.max_abs_bound();
        unsigned k_max = 0;
        while (pow2(k_max + 1) <= s) ++k_max;

        bool product_bit = col < n_bits && boost::multiprecision::bit_test(product, col);
        Polynomial rhs = Polynomial::constant(product_bit ? 1 : 0);
        for (unsigned k = 1; k <= k_max; ++k) {
            var_index z = inst.variables.add({VariableRole::carry, col, k});
            incoming[col + k].push_back(z);
            rhs = rhs + pow2(k) * Polynomial::variable(z);
        }

        BinaryEquation eq{std::move(lhs), std::move(rhs)};
        if (!eq.is_trivial()) inst.equations.push_back(std::move(eq));
    }

    return inst;
}

std::pair<unsigned, unsigned> choose_balanced_split(const Integer& product) {
    check_product(product);
    unsigned m = bit_length(product);
    unsigned a = (m + 1) / 2;
    for (unsigned b : {m - a + 1, m - a}) {
        if (b < 2 || a < 2) continue;
        auto [lo, hi] = width_range(a, b);
        if (lo <= product && product <= hi) return {a, b};
    }
    throw InfeasibleWidthsError("no balanced factor-width split can reach " + product.str());
}

FactorizationInstance encode_balanced(const Integer& product) {
    auto [a, b] = choose_balanced_split(product);
    return encode(product, a, b);
}

}  // namespace pbred
