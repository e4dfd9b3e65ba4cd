#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "pbred/errors.hpp"
#include "pbred/judgments.hpp"

using namespace pbred;
using fixtures::x;

namespace {
Polynomial c(int v) { return Polynomial::constant(v); }
}

TEST_CASE("unit sum over three variables yields the pairwise products") {
    JudgmentOutcome out = simple_judgments(fixtures::toy_equations());
    CHECK(out.fixed.empty());
    CHECK(out.equalities.empty());
    CHECK(out.product_zeros ==
          std::vector<Monomial>{Monomial{1, 2}, Monomial{1, 3}, Monomial{2, 3}});
    CHECK(out.simplified == fixtures::toy_equations());
    CHECK(out.substitution.empty());

    std::vector<Deduction> deds = out.product_zero_deductions();
    REQUIRE(deds.size() == 3);
    CHECK(deds[0].f == x(1) * x(2));
    CHECK(deds[0].g.is_zero());
    CHECK(deds[0].source == DeductionSource::simple_judgment);
}

TEST_CASE("zero side fixes linear terms and reports higher ones") {
    std::vector<BinaryEquation> eqs = {
        {x(1) + c(2) * (x(2) * x(3)), Polynomial()},
    };
    JudgmentOutcome out = simple_judgments(eqs);
    CHECK(out.fixed == std::map<var_index, bool>{{1, false}});
    CHECK(out.product_zeros == std::vector<Monomial>{Monomial{2, 3}});
    // the vanishing product is reported, not applied, so its equation stays
    CHECK(out.simplified ==
          std::vector<BinaryEquation>{{c(2) * (x(2) * x(3)), Polynomial()}});
}

TEST_CASE("saturated side forces every variable to one") {
    std::vector<BinaryEquation> eqs = {
        {x(1) + c(2) * x(2), c(3)},
    };
    JudgmentOutcome out = simple_judgments(eqs);
    CHECK(out.fixed == std::map<var_index, bool>{{1, true}, {2, true}});
    CHECK(out.simplified.empty());
}

TEST_CASE("two complementary bits become one variable") {
    std::vector<BinaryEquation> eqs = {
        {x(4) + x(2), c(1)},
        {x(4) + x(7), c(1) + x(9)},
    };
    JudgmentOutcome out = simple_judgments(eqs);
    REQUIRE(out.equalities.size() == 1);
    CHECK(out.equalities[0] == VariableEquality{2, 4, true});
    CHECK(out.product_zeros == std::vector<Monomial>{Monomial{2, 4}});
    // x4 was eliminated as 1 - x2 in the surviving equation: x4 + x7 = 1 + x9
    // becomes x7 = x2 + x9 after normalization
    REQUIRE(out.simplified.size() == 1);
    CHECK(out.simplified[0] == BinaryEquation{x(7), x(2) + x(9)});
    CHECK_FALSE(out.simplified[0].lhs.mentions(4));
    CHECK_FALSE(out.simplified[0].rhs.mentions(4));
    REQUIRE(out.substitution.size() == 1);
    CHECK(out.substitution.steps()[0].variable == 4);
    CHECK(out.substitution.steps()[0].replacement == c(1) - x(2));
}

TEST_CASE("single-term equations fix or refuse") {
    JudgmentOutcome a = simple_judgments({{c(2) * x(3), c(2)}});
    CHECK(a.fixed == std::map<var_index, bool>{{3, true}});
    JudgmentOutcome b = simple_judgments({{c(3) * x(5), Polynomial()}});
    CHECK(b.fixed == std::map<var_index, bool>{{5, false}});
    CHECK_THROWS_AS(simple_judgments({{c(2) * x(3), c(1)}}), InfeasibleError);
    CHECK_THROWS_AS(simple_judgments({{c(2) * x(3), c(5)}}), InfeasibleError);
}

TEST_CASE("disjoint value ranges are infeasible") {
    CHECK_THROWS_AS(simple_judgments({{x(1) + x(2), c(5)}}), InfeasibleError);
    CHECK_THROWS_AS(simple_judgments({{Polynomial(), c(1)}}), InfeasibleError);
    // contradictory pair found only after substitution
    std::vector<BinaryEquation> eqs = {
        {x(1), c(1)},
        {x(1) + x(2), Polynomial()},
    };
    CHECK_THROWS_AS(simple_judgments(eqs), InfeasibleError);
}

TEST_CASE("facts cascade through substitution to a fixpoint") {
    // x1 = 1 collapses the second equation to x2 + x3 = 1, whose complement
    // equality then rewrites the third into 2 x2 = 2, fixing x2 and x3.
    std::vector<BinaryEquation> eqs = {
        {x(1), c(1)},
        {x(1) + x(2) + x(3), c(2)},
        {x(2) + c(1), x(3) + c(2) * x(2)},
    };
    JudgmentOutcome out = simple_judgments(eqs);
    CHECK(out.fixed.at(1) == true);
    CHECK(out.simplified.empty());
    // every original solution has x1=1, x2=1, x3=0
    Assignment sol{{1, true}, {2, true}, {3, false}};
    CHECK(out.substitution.consistent(sol));
    for (const BinaryEquation& eq : eqs) CHECK(eq.holds(sol));
}

TEST_CASE("trivial and already-clean systems pass through") {
    JudgmentOutcome out = simple_judgments({{x(1) + x(2), x(2) + x(1)}});
    CHECK(out.simplified.empty());
    CHECK(out.fixed.empty());

    std::vector<BinaryEquation> keep = {{x(1) * x(2) + x(3), c(1) + x(4)}};
    JudgmentOutcome kept = simple_judgments(keep);
    CHECK(kept.simplified == std::vector<BinaryEquation>{
                                 BinaryEquation{x(1) * x(2) + x(3), c(1) + x(4)}.normalized()});
}

TEST_CASE("reported facts hold on every solution of a small system") {
    // brute check: whatever the judgments claim must be true wherever the
    // equations hold
    std::vector<BinaryEquation> eqs = {
        {x(0) + x(1) + x(2), c(1)},
        {x(2) + x(3), c(1)},
        {c(2) * x(4), c(2) * x(3)},
    };
    JudgmentOutcome out = simple_judgments(eqs);
    for (std::size_t state = 0; state < 32; ++state) {
        Assignment a;
        for (var_index v = 0; v < 5; ++v) a.set(v, (state >> v) & 1);
        bool solution = true;
        for (const BinaryEquation& eq : eqs)
            if (!eq.holds(a)) solution = false;
        if (!solution) continue;
        for (const auto& [v, value] : out.fixed) CHECK(*a.get(v) == value);
        for (const VariableEquality& rel : out.equalities)
            CHECK(*a.get(rel.b) == (rel.complement ? !*a.get(rel.a) : *a.get(rel.a)));
        for (const Monomial& m : out.product_zeros) {
            bool all = true;
            for (var_index v : m.variables())
                if (!*a.get(v)) all = false;
            CHECK_FALSE(all);
        }
        CHECK(out.substitution.consistent(a));
    }
}
