#include "thl/pipeline.hpp"
#include "../support/tables.hpp"

#include <doctest.h>

using namespace thl;

TEST_CASE("weyl scan rendering")
{
    ScanResult s = weyl_scan(grading_preset("a1++"), 1, 1, 3);
    CHECK(s.rows.size() == 3);
    std::string csv = render(s, OutputFormat::Csv);
    CHECK(csv.rfind("word,image,degree\n1,\"(1,0,0)\",0\n", 0) == 0);
    auto j = nlohmann::json::parse(render(s, OutputFormat::Json));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["rows"].size() == 3);
    CHECK(render(s, OutputFormat::Markdown).find("| w_1w_0 | (2,4,-4) | 3 |") != std::string::npos);
    CHECK_THROWS_AS(weyl_scan(grading_preset("a1++"), 9, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("columns output is deterministic")
{
    GlGrading g = grading_preset("a1++");
    ColumnsResult a = run_columns(g, 6, 6, AssemblyMode::Conjecture, nullptr);
    ColumnsResult b = run_columns(g, 6, 6, AssemblyMode::Conjecture, nullptr);
    for (auto f : {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Markdown})
        CHECK(render(a, f) == render(b, f));
    CHECK(render(a, OutputFormat::Markdown).find("| 2 |  |  | (02) |") != std::string::npos);
    CHECK(default_mode(g) == AssemblyMode::Conjecture);
    CHECK(default_mode(grading_preset("e9")) == AssemblyMode::BorcherdsOnly);
}

TEST_CASE("check selection")
{
    GlGrading g = grading_preset("a1++");
    VerifyResult none = run_checks(g, 4, 4, {}, nullptr);
    CHECK(none.pass());
    CHECK(none.checks.empty());
    VerifyResult all = run_checks(g, 6, 6, {"conjecture", "reflection", "diagonal", "tops", "extras"}, nullptr);
    CHECK(all.pass());
    CHECK(all.checks.size() == 5);
    CHECK_THROWS_AS(run_checks(g, 4, 4, {"bogus"}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(run_checks(grading_preset("e9"), 4, 3, {"conjecture"}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(run_checks(grading_preset("e10"), 4, 3, {"diagonal"}, nullptr), std::invalid_argument);
}

TEST_CASE("table comparison sees the fitted tops")
{
    ColumnsResult r = run_columns(grading_preset("a1++"), 6, 4, AssemblyMode::Conjecture, nullptr);
    auto table = tables::load_columns(std::string(THL_TEST_DATA_DIR) + "/table2_a1pp.txt");
    int terms = 0;
    auto mism = tables::compare_tops(r.fit, table, 6, 0, 4, &terms);
    CHECK(terms > 10);
    CHECK(mism.empty());

    table[{1, 0}][{1, 0}] += 1;
    mism = tables::compare_tops(r.fit, table, 6, 0, 4, &terms);
    REQUIRE(mism.size() == 1);
    CHECK(mism[0].expected == 2);
    CHECK(mism[0].found == 1);
}
