#include <gtest/gtest.h>

#include "monointerp/oracle.hpp"

#include "json.hpp"

namespace {

using namespace monointerp;

TEST(Oracle, Names)
{
    for (Check c : all_checks()) {
        EXPECT_EQ(check_from_string(to_string(c)), c);
    }
    EXPECT_EQ(all_checks().size(), 7u);
    EXPECT_FALSE(check_from_string("everything").has_value());
}

TEST(Oracle, ShardSpace)
{
    EXPECT_EQ(shard_space(Check::nesting, 0), 0u);
    EXPECT_EQ(shard_space(Check::nesting, 5), 1u + 2 + 3 + 5 + 7);
    EXPECT_EQ(shard_space(Check::ci, 25), 325u);
    EXPECT_EQ(shard_space(Check::ci, 1), 1u);
}

TEST(Oracle, SmallBoundsPass)
{
    for (Check c : all_checks()) {
        const auto report = verify(c, 9);
        EXPECT_TRUE(report.passed()) << to_string(c) << ": "
                                     << (report.failures.empty() ? "" : report.failures.front().message);
        EXPECT_GT(report.instances, 0u);
        EXPECT_EQ(report.bound, 9);
    }
}

TEST(Oracle, BoundZeroIsVacuous)
{
    for (Check c : all_checks()) {
        const auto report = verify(c, 0);
        EXPECT_TRUE(report.passed());
        EXPECT_EQ(report.instances, 0u);
    }
    EXPECT_THROW(verify(Check::nesting, -1), std::invalid_argument);
}

TEST(Oracle, ShardsMergeToSerial)
{
    for (Check c : {Check::nesting, Check::chern, Check::ci}) {
        const int bound = 8;
        const auto whole = verify_shard(c, bound, 0, shard_space(c, bound));
        std::vector<VerificationReport> parts;
        const std::size_t total = shard_space(c, bound);
        for (std::size_t first = 0; first < total; first += 7) {
            parts.push_back(verify_shard(c, bound, first, std::min(total, first + 7)));
        }
        EXPECT_TRUE(same_outcome(merge(parts), whole));
        EXPECT_TRUE(same_outcome(verify(c, bound, {4}), whole));
    }
}

TEST(Oracle, FailuresAreMergedByOrdinalAndCapped)
{
    VerificationReport a;
    a.check = Check::purity;
    a.bound = 3;
    VerificationReport b = a;
    for (std::size_t j = 0; j < 80; ++j) {
        a.failures.push_back({2 * j, "a", "root", "m", {}});
        b.failures.push_back({2 * j + 1, "b", "root", "m", {}});
    }
    a.failure_count = 80;
    b.failure_count = 80;
    a.instances = 5;
    b.instances = 6;
    const auto merged = merge({b, a});
    EXPECT_EQ(merged.failure_count, 160u);
    EXPECT_EQ(merged.instances, 11u);
    ASSERT_EQ(merged.failures.size(), VerificationReport::max_failures);
    for (std::size_t j = 0; j < merged.failures.size(); ++j) {
        EXPECT_EQ(merged.failures[j].ordinal, j);
    }
    EXPECT_FALSE(merged.passed());
}

TEST(Oracle, JsonReport)
{
    const auto report = verify(Check::theorem14, 6);
    const auto text = to_json(report, false);
    EXPECT_EQ(text, to_json(verify(Check::theorem14, 6, {3}), false));
    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["check"], "theorem14");
    EXPECT_EQ(j["bound"], 6);
    EXPECT_EQ(j["passed"], true);
    EXPECT_FALSE(j.contains("duration_ms"));
    EXPECT_TRUE(nlohmann::json::parse(to_json(report, true)).contains("duration_ms"));
    const auto all = nlohmann::json::parse(to_json(std::vector<VerificationReport>{report, report}, false));
    EXPECT_TRUE(all.is_array() || all.is_object());
}

TEST(Oracle, Wrappers)
{
    EXPECT_TRUE(verify_ci(25).passed());
    EXPECT_EQ(verify_ci(25).instances, 325u);
    EXPECT_TRUE(verify_nesting(7).passed());
    EXPECT_TRUE(verify_purity(7).passed());
    EXPECT_TRUE(verify_duality(7).passed());
    EXPECT_TRUE(verify_chern(7).passed());
    EXPECT_TRUE(verify_theorem14(7).passed());
    EXPECT_TRUE(verify_triviality_inequalities(7).passed());
}

} // namespace
