#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "pbred/errors.hpp"
#include "pbred/search.hpp"

using namespace pbred;
using fixtures::x;

namespace {
Polynomial c(int v) { return Polynomial::constant(v); }

SearchFrontier synthetic(std::vector<var_index> order,
                         std::vector<std::vector<std::uint8_t>> states) {
    SearchFrontier f;
    f.order = std::move(order);
    f.assigned_count = f.order.size();
    f.states = std::move(states);
    return f;
}
}  // namespace

TEST_CASE("full-depth search on the toy system leaves only the solution") {
    SearchFrontier f = bfs_plausible(fixtures::toy_equations(), 1000, {1, 2, 3, 4, 5});
    CHECK(f.assigned_count == 5);
    REQUIRE(f.states.size() == 1);
    CHECK(f.states[0] == std::vector<std::uint8_t>{0, 1, 0, 1, 0});

    PatternSet pats = extract_patterns(f);
    CHECK(pats.constants == std::vector<std::pair<var_index, bool>>{
                                {1, false}, {2, true}, {3, false}, {4, true}, {5, false}});
    CHECK(std::count(pats.equalities.begin(), pats.equalities.end(),
                     VariableEquality{2, 4, false}) == 1);
    CHECK(std::count(pats.zero_products.begin(), pats.zero_products.end(), Monomial{1, 2}) == 1);
    CHECK(std::count(pats.zero_products.begin(), pats.zero_products.end(), Monomial{2, 4}) == 0);
}

TEST_CASE("budget halts expansion with at most twice the budget kept") {
    std::vector<var_index> order(10);
    for (var_index v = 0; v < 10; ++v) order[v] = v;
    SearchFrontier f = bfs_plausible({}, 4, order);
    CHECK(f.assigned_count == 3);
    CHECK(f.states.size() == 8);
    CHECK(f.assigned_vars() == std::vector<var_index>{0, 1, 2});
}

TEST_CASE("impossible systems throw instead of returning an empty frontier") {
    CHECK_THROWS_AS(bfs_plausible({{x(1) + x(2), c(3)}}, 10, {1, 2}), NoPlausibleStatesError);
    try {
        bfs_plausible({{x(1), c(0)}, {x(1), c(1)}}, 10, {1});
        FAIL("expected no plausible states");
    } catch (const NoPlausibleStatesError& e) {
        CHECK(std::string(e.what()).find("x1") != std::string::npos);
    }
    CHECK_THROWS_AS(bfs_plausible({}, 0, {1}), Error);
    CHECK_THROWS_AS(bfs_plausible({}, 10, {1, 1}), Error);
}

TEST_CASE("variables outside the order stay uncertain") {
    // x9 is never assigned, so both values of x1 remain plausible
    SearchFrontier f = bfs_plausible({{x(1) + x(9), c(1)}}, 10, {1});
    CHECK(f.states.size() == 2);
    PatternSet pats = extract_patterns(f);
    CHECK(pats.constants.empty());
}

TEST_CASE("pruning is sound: planted solutions always survive") {
    std::mt19937 rng(66021);
    std::uniform_int_distribution<int> coeff(1, 4);
    std::uniform_int_distribution<var_index> pick(0, 7);
    for (int trial = 0; trial < 100; ++trial) {
        // plant a random state, build random equations it satisfies
        std::vector<std::uint8_t> planted(8);
        for (auto& b : planted) b = rng() & 1;
        Assignment pa;
        for (var_index v = 0; v < 8; ++v) pa.set(v, planted[v]);

        std::vector<BinaryEquation> eqs;
        for (int e = 0; e < 4; ++e) {
            std::vector<Polynomial::Term> terms;
            for (int t = 0; t < 3; ++t) {
                var_index a = pick(rng), b = pick(rng);
                terms.push_back({a == b ? Monomial{a} : Monomial{a, b}, coeff(rng)});
            }
            Polynomial lhs = Polynomial::from_terms(std::move(terms));
            eqs.push_back({lhs, Polynomial::constant(lhs.evaluate(pa))});
        }

        std::vector<var_index> order = {0, 1, 2, 3, 4, 5, 6, 7};
        SearchFrontier f = bfs_plausible(eqs, 1u << 20, order);
        REQUIRE(f.assigned_count == 8);
        CHECK(std::count(f.states.begin(), f.states.end(), planted) == 1);

        // at full depth the interval check is exact, so every survivor is a
        // genuine solution
        for (const auto& state : f.states) {
            Assignment a;
            for (var_index v = 0; v < 8; ++v) a.set(v, state[v]);
            for (const BinaryEquation& eq : eqs) CHECK(eq.holds(a));
        }

        // and every relation extracted from the frontier holds on it
        PatternSet pats = extract_patterns(f, 3);
        for (const auto& state : f.states) {
            for (const auto& [v, value] : pats.constants) {
                std::size_t pos = std::find(order.begin(), order.end(), v) - order.begin();
                CHECK(state[pos] == (value ? 1 : 0));
            }
            for (const Monomial& m : pats.zero_products) {
                bool all = true;
                for (var_index v : m.variables()) {
                    std::size_t pos = std::find(order.begin(), order.end(), v) - order.begin();
                    if (!state[pos]) all = false;
                }
                CHECK_FALSE(all);
            }
        }
    }
}

TEST_CASE("pattern extraction finds equalities and complements") {
    SearchFrontier f = synthetic({1, 2}, {{0, 0}, {1, 1}});
    PatternSet pats = extract_patterns(f);
    CHECK(pats.constants.empty());
    CHECK(pats.equalities == std::vector<VariableEquality>{{1, 2, false}});
    CHECK(pats.zero_products.empty());

    SearchFrontier g = synthetic({1, 2}, {{0, 1}, {1, 0}});
    PatternSet comp = extract_patterns(g);
    CHECK(comp.equalities == std::vector<VariableEquality>{{1, 2, true}});
    CHECK(comp.zero_products == std::vector<Monomial>{Monomial{1, 2}});
}

TEST_CASE("vanishing triples appear only at cap 3 and only when minimal") {
    SearchFrontier f = synthetic({1, 2, 3}, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(extract_patterns(f, 2).zero_products.empty());
    CHECK(extract_patterns(f, 3).zero_products == std::vector<Monomial>{Monomial{1, 2, 3}});
    // caps beyond 3 behave like 3
    CHECK(extract_patterns(f, 9).zero_products == std::vector<Monomial>{Monomial{1, 2, 3}});

    // when every pair already vanishes the triple is implied and skipped
    SearchFrontier g = synthetic({1, 2, 3}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    PatternSet pats = extract_patterns(g, 3);
    CHECK(pats.zero_products ==
          std::vector<Monomial>{Monomial{1, 2}, Monomial{1, 3}, Monomial{2, 3}});
}

TEST_CASE("word boundaries do not break complement detection") {
    // 65 states: x1 runs 0,1,0,1,... and x2 is its complement throughout
    std::vector<std::vector<std::uint8_t>> states;
    for (int i = 0; i < 65; ++i)
        states.push_back({static_cast<std::uint8_t>(i & 1), static_cast<std::uint8_t>(1 - (i & 1))});
    PatternSet pats = extract_patterns(synthetic({1, 2}, std::move(states)));
    CHECK(pats.equalities == std::vector<VariableEquality>{{1, 2, true}});
    CHECK(pats.zero_products == std::vector<Monomial>{Monomial{1, 2}});
}
