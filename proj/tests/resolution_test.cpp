#include <gtest/gtest.h>

#include "monointerp/resolution.hpp"

#include "oracles.hpp"

namespace {

using namespace monointerp;

TEST(Resolution, Degree48)
{
    const auto res = minimal_free_resolution(BlockDiagram({9, 9, 7, 7, 6, 4, 3, 3}));
    EXPECT_EQ(res.generator_twists, (std::vector<int>{-9, -9, -10, -9, -9, -8}));
    EXPECT_EQ(res.syzygy_twists, (std::vector<int>{-11, -11, -11, -10, -11}));
    EXPECT_EQ(res.betti(0), (std::map<int, int>{{8, 1}, {9, 4}, {10, 1}}));
    EXPECT_EQ(res.betti(1), (std::map<int, int>{{10, 1}, {11, 4}}));
    EXPECT_EQ(chern_from_resolution(res), ChernCharacter(1, 0, -48));
    EXPECT_EQ(format_sum(res.generator_twists), "O(-9)^2 + O(-10) + O(-9)^2 + O(-8)");
}

TEST(Resolution, DegreeTwenty)
{
    const auto res = minimal_free_resolution(BlockDiagram({5, 5, 4, 3, 3}));
    EXPECT_EQ(res.generator_twists, (std::vector<int>{-5, -6, -6, -5}));
    EXPECT_EQ(res.syzygy_twists, (std::vector<int>{-7, -7, -8}));
    EXPECT_EQ(res.matrix.size(), 4u);
    EXPECT_EQ(res.matrix[0].size(), 3u);
    EXPECT_EQ(res.matrix[0][0], (MatrixEntry{1, 0, 2}));
    EXPECT_EQ(res.matrix[1][0], (MatrixEntry{-1, 1, 0}));
    EXPECT_EQ(res.matrix[2][0], (MatrixEntry{}));
}

TEST(Resolution, SmallCases)
{
    const auto point = minimal_free_resolution(BlockDiagram({1}));
    EXPECT_EQ(point.betti(0), (std::map<int, int>{{1, 2}}));
    EXPECT_EQ(point.betti(1), (std::map<int, int>{{2, 1}}));
    const auto unit = minimal_free_resolution(BlockDiagram{});
    EXPECT_EQ(unit.generator_twists, (std::vector<int>{0}));
    EXPECT_TRUE(unit.syzygy_twists.empty());
    EXPECT_TRUE(unit.betti(2).empty());
    for (int a = 1; a <= 6; ++a) {
        for (int b = a; b <= 6; ++b) {
            const auto ci = minimal_free_resolution(BlockDiagram::rectangle(a, b));
            std::map<int, int> gens{{a, 1}};
            gens[b] += 1;
            EXPECT_EQ(ci.betti(0), gens);
            EXPECT_EQ(ci.betti(1), (std::map<int, int>{{a + b, 1}}));
        }
    }
}

TEST(Resolution, EntriesHaveConsistentDegrees)
{
    for (int n = 1; n <= 12; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            const auto res = minimal_free_resolution(d);
            EXPECT_EQ(chern_from_resolution(res), chern_of_ideal(d));
            ASSERT_EQ(res.generator_twists.size(), res.syzygy_twists.size() + 1);
            for (std::size_t col = 0; col < res.syzygy_twists.size(); ++col) {
                int nonzero = 0;
                for (std::size_t row = 0; row < res.generator_twists.size(); ++row) {
                    const auto& e = res.matrix[row][col];
                    if (e.coefficient == 0) {
                        continue;
                    }
                    ++nonzero;
                    EXPECT_GT(e.x_exp + e.y_exp, 0); // minimality: no units
                    EXPECT_EQ(e.x_exp + e.y_exp, res.generator_twists[row] - res.syzygy_twists[col]);
                }
                EXPECT_EQ(nonzero, 2);
            }
            // M composed with the generator row vector vanishes
            const auto generators = to_generators(d);
            const auto gens = generators.generators();
            for (std::size_t col = 0; col < res.syzygy_twists.size(); ++col) {
                std::map<std::pair<int, int>, int> sum;
                for (std::size_t row = 0; row < gens.size(); ++row) {
                    const auto& e = res.matrix[row][col];
                    if (e.coefficient != 0) {
                        sum[{gens[row].x_exp + e.x_exp, gens[row].y_exp + e.y_exp}] += e.coefficient;
                    }
                }
                for (const auto& [mono, c] : sum) {
                    EXPECT_EQ(c, 0);
                }
            }
        }
    }
}

TEST(Resolution, FormatSum)
{
    EXPECT_EQ(format_sum({-7, -7, -8}), "O(-7)^2 + O(-8)");
    EXPECT_EQ(format_sum({-5, -6, -6, -5}), "O(-5) + O(-6)^2 + O(-5)");
    EXPECT_EQ(format_sum({}), "0");
}

} // namespace
