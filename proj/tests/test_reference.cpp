#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pbred/pipeline.hpp"
#include "pbred/reference.hpp"
#include "pbred/report.hpp"

using namespace pbred;

TEST_CASE("the bundled benchmark table is well formed") {
    const std::vector<ReferenceEntry>& entries = reference_entries();
    REQUIRE(entries.size() == 3);

    const char* labels[] = {"H0", "H1", "H100", "H1000", "H10000", "H100000"};
    for (const ReferenceEntry& e : entries) {
        REQUIRE(e.stages.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(e.stages[i].label == labels[i]);
            // deductions are only recorded for the search stages
            CHECK(e.stages[i].deductions.has_value() == (i >= 2));
            CHECK(e.stages[i].qubits > 0);
        }
        // qubit counts never grow along a run
        for (std::size_t i = 1; i < 6; ++i)
            CHECK(e.stages[i].qubits <= e.stages[i - 1].qubits);
        CHECK(e.stage("H1000") != nullptr);
        CHECK(e.stage("H7") == nullptr);
        CHECK(Integer(e.product) == Integer(e.factor_p) * Integer(e.factor_q));
    }

    CHECK(entries[0].name == "example1");
    CHECK(entries[1].name == "example2");
    CHECK(entries[2].name == "example3");
}

TEST_CASE("benchmark entries are found by product value") {
    REQUIRE(find_reference(Integer("455937533473")) != nullptr);
    CHECK(find_reference(Integer("455937533473"))->name == "example1");
    REQUIRE(find_reference(Integer("292951160076082381")) != nullptr);
    CHECK(find_reference(Integer("292951160076082381"))->name == "example2");
    REQUIRE(find_reference(Integer("1208925727750433490141601")) != nullptr);
    CHECK(find_reference(Integer("1208925727750433490141601"))->name == "example3");
    CHECK(find_reference(143) == nullptr);
}

TEST_CASE("the serialized benchmark table round-trips") {
    std::string rendered = render_reference_table();
    std::istringstream in(rendered);
    std::vector<ReferenceEntry> parsed = parse_reference_table(in);

    REQUIRE(parsed.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const ReferenceEntry& a = reference_entries()[i];
        const ReferenceEntry& b = parsed[i];
        CHECK(a.name == b.name);
        CHECK(a.product == b.product);
        CHECK(a.factor_p == b.factor_p);
        CHECK(a.factor_q == b.factor_q);
        REQUIRE(a.stages.size() == b.stages.size());
        for (std::size_t j = 0; j < a.stages.size(); ++j) {
            CHECK(a.stages[j].label == b.stages[j].label);
            CHECK(a.stages[j].qubits == b.stages[j].qubits);
            CHECK(a.stages[j].deductions == b.stages[j].deductions);
            CHECK(a.stages[j].deg4 == b.stages[j].deg4);
            CHECK(a.stages[j].deg3 == b.stages[j].deg3);
            CHECK(a.stages[j].deg2 == b.stages[j].deg2);
            CHECK(a.stages[j].deg1 == b.stages[j].deg1);
        }
    }
}

TEST_CASE("the shipped reference file matches the embedded table byte for byte") {
    std::ifstream in(PBRED_REFERENCE_FILE, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream bytes;
    bytes << in.rdbuf();
    CHECK(bytes.str() == render_reference_table());
}

TEST_CASE("malformed benchmark tables are rejected with a line number") {
    std::istringstream bad("entry example1 455937533473 = 524309 * 869597\n  H0 qubits=oops\n");
    CHECK_THROWS_AS(parse_reference_table(bad), ParseError);
}

TEST_CASE("the stage table renders counts and the published comparison") {
    PipelineConfig config;
    config.user_deductions = {
        product_zero_deduction(Monomial{1, 2}, DeductionSource::user),
        product_zero_deduction(Monomial{1, 3}, DeductionSource::user),
        product_zero_deduction(Monomial{2, 3}, DeductionSource::user),
    };
    PipelineResult res = reduce_pipeline(fixtures::toy_equations(), config);

    std::string table = render_stage_table(res);
    CHECK(table.find("stage") != std::string::npos);
    CHECK(table.find("qubits") != std::string::npos);
    CHECK(table.find("H0 original") != std::string::npos);
    CHECK(table.find("user deductions") != std::string::npos);
    CHECK(table.find("deg4") != std::string::npos);
    CHECK(table.find("published") == std::string::npos);

    // an unrecognized product adds nothing
    CHECK(render_stage_table(res, Integer(143)) == table);

    // a benchmark product appends the published rows with deltas
    // the toy profile is far below the published counts, so every delta is
    // negative and carries an explicit sign
    std::string compared = render_stage_table(res, Integer("455937533473"));
    CHECK(compared.find("published counts for example1") != std::string::npos);
    CHECK(compared.find("delta is ours minus published") != std::string::npos);
    CHECK(compared.find("(-169)") != std::string::npos);
    CHECK(compared.find("(-1784)") != std::string::npos);
}

TEST_CASE("the comparison picks the published row matching the search budget") {
    PipelineResult res;
    res.config.states = 1000;
    res.h0 = fixtures::toy_hamiltonian();
    res.h_final = fixtures::toy_final();
    res.stages.push_back({"H0 original", res.h0.degree_profile(), std::nullopt});
    res.stages.push_back({"H1 judgments", res.h0.degree_profile(), std::nullopt});
    res.stages.push_back({"reduction round 1", res.h_final.degree_profile(), 3});

    std::string compared = render_stage_table(res, Integer("455937533473"));
    CHECK(compared.find("H1000") != std::string::npos);
    CHECK(compared.find("H100000") == std::string::npos);
}

TEST_CASE("the machine report is stable key=value lines") {
    PipelineConfig config;
    config.user_deductions = {
        product_zero_deduction(Monomial{1, 2}, DeductionSource::user),
        product_zero_deduction(Monomial{1, 3}, DeductionSource::user),
        product_zero_deduction(Monomial{2, 3}, DeductionSource::user),
    };
    PipelineResult res = reduce_pipeline(fixtures::toy_equations(), config);

    std::string report = render_machine_report(res);
    CHECK(report.find("stages=3\n") != std::string::npos);
    CHECK(report.find("stage.0.label=H0 original\n") != std::string::npos);
    CHECK(report.find("stage.0.qubits=5\n") != std::string::npos);
    CHECK(report.find("stage.0.deductions=-\n") != std::string::npos);
    CHECK(report.find("stage.0.terms=deg4:1 deg3:2 deg2:6 deg1:3 deg0:1\n") != std::string::npos);
    CHECK(report.find("stage.2.deductions=3\n") != std::string::npos);
    CHECK(report.find("stage.2.terms=deg2:5 deg1:3 deg0:1\n") != std::string::npos);
    CHECK(report.find("chain.length=0\n") != std::string::npos);
    CHECK(report.find("steps.count=4\n") != std::string::npos);
    CHECK(report.find("reference.match") == std::string::npos);

    std::string matched = render_machine_report(res, Integer("455937533473"));
    CHECK(matched.find("reference.match=example1\n") != std::string::npos);
    std::string unmatched = render_machine_report(res, Integer(143));
    CHECK(unmatched.find("reference.match=-\n") != std::string::npos);
}
