#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pbred/encoder.hpp"
#include "pbred/errors.hpp"
#include "pbred/text_io.hpp"
#include "pbred/verify.hpp"

using namespace pbred;

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Sets the free factor bits of `inst` from concrete factor values, leaves
// carries unset.
Assignment factor_bits(const FactorizationInstance& inst, unsigned p, unsigned q) {
    Assignment a;
    for (const auto& [pos, v] : inst.p_vars) a.set(v, (p >> pos) & 1);
    for (const auto& [pos, v] : inst.q_vars) a.set(v, (q >> pos) & 1);
    return a;
}

// Completes an assignment of the factor bits with the forced carry values,
// column by column. Each equation determines its carry variables uniquely
// once everything feeding the column is known.
Assignment complete_with_carries(const FactorizationInstance& inst, Assignment a) {
    for (const BinaryEquation& eq : inst.equations) {
        Integer have = 0;
        for (const auto& [m, c] : eq.lhs.terms()) {
            Integer prod = c;
            for (var_index v : m.variables()) prod *= *a.get(v) ? 1 : 0;
            have += prod;
        }
        // rhs = constant + sum 2^k z_k with distinct powers: peel from the top
        std::vector<std::pair<Integer, var_index>> slots;
        Integer rest = have - eq.rhs.constant_term();
        for (const auto& [m, c] : eq.rhs.terms())
            if (!m.is_unit()) slots.push_back({c, m.variables()[0]});
        std::sort(slots.rbegin(), slots.rend());
        for (const auto& [weight, v] : slots) {
            bool bit = rest >= weight;
            a.set(v, bit);
            if (bit) rest -= weight;
        }
    }
    return a;
}

}  // namespace

TEST_CASE("143 as a 4x4 instance, checked by hand") {
    FactorizationInstance inst = encode(143, 4, 4);
    CHECK(inst.product == 143);
    CHECK(inst.variables.size() == 15);
    REQUIRE(inst.equations.size() == 8);

    // free factor bits: positions 1 and 2 of each factor
    CHECK(inst.p_vars == std::map<unsigned, var_index>{{1, 0}, {2, 3}});
    CHECK(inst.q_vars == std::map<unsigned, var_index>{{1, 1}, {2, 4}});
    CHECK(inst.variables.name(0) == "p1");
    CHECK(inst.variables.name(4) == "q2");
    CHECK(inst.variables.name(2) == "c1_1");
    CHECK(inst.variables.name(14) == "c7_1");

    // column 1: p1 + q1 = 1 + 2 c1_1
    CHECK(format_inline(inst.equations[0].lhs) == "1 x0 + 1 x1");
    CHECK(format_inline(inst.equations[0].rhs) == "1 + 2 x2");
    // last column: the top carry must be zero
    CHECK(format_inline(inst.equations[7].lhs) == "1 x14");
    CHECK(inst.equations[7].rhs.is_zero());

    // factor polynomials: 1 + 2 b1 + 4 b2 + 8
    Assignment sol = complete_with_carries(inst, factor_bits(inst, 11, 13));
    for (const BinaryEquation& eq : inst.equations) CHECK(eq.holds(sol));
    CHECK(inst.p_polynomial().evaluate(sol) == 11);
    CHECK(inst.q_polynomial().evaluate(sol) == 13);
    auto [p, q] = decode_factors(inst, sol);
    CHECK(p == 11);
    CHECK(q == 13);

    // the aggregate form restates the product, no new variables
    BinaryEquation agg = inst.aggregate_equation();
    CHECK(agg.holds(sol));
    CHECK(agg.rhs == Polynomial::constant(143));

    // a wrong factor pair must violate some equation
    Assignment wrong = complete_with_carries(inst, factor_bits(inst, 9, 15));
    bool all_hold = true;
    for (const BinaryEquation& eq : inst.equations)
        if (!eq.holds(wrong)) all_hold = false;
    CHECK_FALSE(all_hold);
    CHECK_THROWS_AS(decode_factors(inst, wrong), NotASolutionError);
}

TEST_CASE("9 as the smallest instance: both factors fully pinned") {
    FactorizationInstance inst = encode(9, 2, 2);
    CHECK(inst.p_vars.empty());
    CHECK(inst.q_vars.empty());
    CHECK(inst.p_polynomial() == Polynomial::constant(3));
    // carries are still forced through equations rather than dropped
    Assignment sol = complete_with_carries(inst, Assignment{});
    for (const BinaryEquation& eq : inst.equations) CHECK(eq.holds(sol));
    auto [p, q] = decode_factors(inst, sol);
    CHECK(p * q == 9);
}

TEST_CASE("search orders cover every variable once") {
    FactorizationInstance inst = encode(143, 4, 4);
    std::vector<var_index> msb = inst.search_order_msb_first();
    std::vector<var_index> lsb = inst.search_order_lsb_first();
    REQUIRE(msb.size() == inst.variables.size());
    REQUIRE(lsb.size() == inst.variables.size());
    CHECK(std::set<var_index>(msb.begin(), msb.end()).size() == msb.size());
    for (var_index v = 0; v < lsb.size(); ++v) CHECK(lsb[v] == v);
    // top factor bits first, then the low ones, then carries
    CHECK(std::vector<var_index>(msb.begin(), msb.begin() + 4) ==
          std::vector<var_index>{3, 4, 0, 1});
    CHECK(msb[4] == 2);
}

TEST_CASE("every odd semiprime under 1000 encodes soundly at true widths") {
    std::size_t checked = 0;
    for (unsigned n = 9; n < 1000; n += 2) {
        for (unsigned p = 3; p * p <= n; p += 2) {
            if (n % p) continue;
            unsigned q = n / p;
            if (!is_prime(p) || !is_prime(q)) continue;
            unsigned p_bits = std::bit_width(p), q_bits = std::bit_width(q);
            FactorizationInstance inst = encode(n, p_bits, q_bits);
            Assignment sol = complete_with_carries(inst, factor_bits(inst, p, q));
            auto [dp, dq] = decode_factors(inst, sol);
            CHECK(dp == p);
            CHECK(dq == q);
            CHECK(inst.aggregate_equation().holds(sol));
            ++checked;
            break;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("balanced split picks feasible widths") {
    CHECK(choose_balanced_split(9) == std::pair<unsigned, unsigned>{2, 2});
    CHECK(choose_balanced_split(143) == std::pair<unsigned, unsigned>{4, 4});
    CHECK(choose_balanced_split(35) == std::pair<unsigned, unsigned>{3, 3});
    CHECK(choose_balanced_split(Integer("455937533473")) ==
          std::pair<unsigned, unsigned>{20, 20});

    FactorizationInstance inst = encode_balanced(143);
    CHECK(inst.p_bits == 4);
    CHECK(inst.q_bits == 4);
}

TEST_CASE("bad products and widths are rejected") {
    CHECK_THROWS_AS(encode(144, 4, 4), InvalidProductError);
    CHECK_THROWS_AS(encode(1, 2, 2), InvalidProductError);
    CHECK_THROWS_AS(encode(143, 2, 2), InfeasibleWidthsError);   // 3*3 tops out at 9
    CHECK_THROWS_AS(encode(15, 8, 8), InfeasibleWidthsError);    // 129*129 already 16641
    CHECK_THROWS_AS(encode(143, 1, 8), InfeasibleWidthsError);   // widths below 2
}

TEST_CASE("published quartic counts pin the squared column structure") {
    // term counts of the raw square-sum for the three benchmark products
    FactorizationInstance a = encode(Integer("455937533473"), 20, 20);
    CHECK(hamiltonian_from_equations(a.equations).degree_profile().at(4) == 1785);
    FactorizationInstance b = encode(Integer("292951160076082381"), 30, 30);
    CHECK(hamiltonian_from_equations(b.equations).degree_profile().at(4) == 6930);
}
