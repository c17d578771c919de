#include "fixtures.hh"

#include <snc/report.hh>

#include <gtest/gtest.h>

#include <json.hpp>

using namespace snc;
using namespace snc::fixtures;
using json = nlohmann::json;

TEST(Report, ProfileTable)
{
    EXPECT_EQ(render_profile_table(transitive_triangle()),
        "vertex n1 n2 anti_satisfaction satisfactory\n"
        "0 2 0 2 no\n"
        "1 1 0 1 no\n"
        "2 0 0 0 yes\n"
        "satisfactory 1 of 3\n");
}

TEST(Report, FilterReportCarriesWitnesses)
{
    auto doc = json::parse(render_filter_report(run_filter(c3(), false)));
    EXPECT_EQ(doc["survived"], false);
    EXPECT_EQ(doc["evaluation_order"], json::parse("[0,2,1,6,7,4,3,5]"));
    ASSERT_EQ(doc["verdicts"].size(), 8u);
    EXPECT_EQ(doc["verdicts"][0]["status"], "fail");
    EXPECT_EQ(doc["verdicts"][0]["witness"]["kind"], "vertex");
    EXPECT_EQ(doc["verdicts"][2]["condition"], 1);
    EXPECT_EQ(doc["verdicts"][2]["status"], "pass");
    EXPECT_FALSE(doc["verdicts"][2].contains("witness"));
    EXPECT_EQ(doc["verdicts"][7]["witness"]["kind"], "base_count");
    EXPECT_EQ(doc["verdicts"][7]["witness"]["edge"], json::parse("[0,1]"));
}

TEST(Report, SearchReportFields)
{
    SearchSpec spec;
    spec.n = 3;
    auto report = run_search(spec);
    auto with = json::parse(render_search_report(report));
    auto without = json::parse(render_search_report(report, false));
    EXPECT_EQ(with["graphs_examined"], 27);
    EXPECT_EQ(with["counterexamples_found"], 0);
    EXPECT_EQ(with["rejections_by_first_failed_condition"]["0"], 27);
    EXPECT_EQ(with["spec"]["mode"], "exhaustive");
    EXPECT_TRUE(with.contains("runtime"));
    EXPECT_TRUE(with["runtime"].contains("elapsed_ms"));
    EXPECT_FALSE(without.contains("runtime"));
    EXPECT_EQ(with["version"], tool_version());
}

TEST(Report, SurvivorsRenderAsGraphDocuments)
{
    SearchReport report;
    report.spec.n = 3;
    report.graphs_examined = 1;
    report.counterexamples_found = 1;
    report.survivors.push_back(Survivor{5, c3(), FilterReport{{}, {}, true, false}});
    auto doc = json::parse(render_search_report(report, false));
    ASSERT_EQ(doc["filter_survivors"].size(), 1u);
    EXPECT_EQ(doc["filter_survivors"][0]["graph"], "3 3\n0 1\n1 2\n2 0\n");
    EXPECT_EQ(doc["filter_survivors"][0]["index"], 5);
}
