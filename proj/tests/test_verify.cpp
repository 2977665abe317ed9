#include <sbo/verify.hpp>

#include <gtest/gtest.h>

using namespace sbo;

TEST(Verify, SuiteNames)
{
    for (Suite s : {Suite::exact, Suite::classical, Suite::measures, Suite::sbo_hermite, Suite::sbo_laguerre,
                    Suite::bridge, Suite::zeros, Suite::all})
        EXPECT_EQ(parse_suite(to_string(s)), s);
    EXPECT_THROW(parse_suite("everything"), std::invalid_argument);
}

TEST(Verify, ReportStatusRules)
{
    Report r("t");
    r.record("a", "holds", true, "x");
    r.expect_negative("b", "printed form", false, "x");
    r.observe("c", "empirical", false, "x");
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.find("b")->status, CheckStatus::expected_negative);
    EXPECT_EQ(r.find("c")->status, CheckStatus::reported);
    EXPECT_EQ(r.find("c")->failures.size(), 1u);
    r.attempt("d", "throws", "y", []() -> bool { throw std::runtime_error("boom"); });
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.find("d")->failures[0], "y (boom)");
    Report s("t");
    s.expect_negative("b", "printed form", true, "z");
    r.merge(s);
    EXPECT_EQ(r.find("b")->status, CheckStatus::fail);
    EXPECT_EQ(r.instance_count(), 5u);
}

TEST(Verify, ReportIsDeterministicAcrossRunsAndScheduling)
{
    VerifyOptions par{4, 10, true}, ser{4, 10, false};
    for (Suite s : {Suite::sbo_hermite, Suite::sbo_laguerre, Suite::bridge}) {
        const std::string a = report_json(run_suite(s, par)).dump(2);
        const std::string b = report_json(run_suite(s, par)).dump(2);
        const std::string c = report_json(run_suite(s, ser)).dump(2);
        EXPECT_EQ(a, b) << to_string(s);
        EXPECT_EQ(a, c) << to_string(s);
    }
}

TEST(Verify, SmallGridsPass)
{
    const VerifyOptions opt{3, 8, true};
    for (Suite s : {Suite::exact, Suite::classical, Suite::measures, Suite::sbo_hermite, Suite::sbo_laguerre,
                    Suite::bridge}) {
        const Report r = run_suite(s, opt);
        EXPECT_TRUE(r.ok()) << to_string(s) << "\n" << report_json(r).dump(2);
        EXPECT_GT(r.instance_count(), 0u);
    }
}

TEST(Verify, JsonShape)
{
    const auto j = report_json(run_suite(Suite::exact));
    EXPECT_EQ(j["suite"], "exact");
    EXPECT_TRUE(j["ok"].get<bool>());
    ASSERT_TRUE(j["checks"].is_array());
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("id"));
        EXPECT_TRUE(c.contains("status"));
        EXPECT_TRUE(c.contains("instances"));
        EXPECT_TRUE(c.contains("failures"));
    }
}
