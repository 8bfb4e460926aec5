#include <gtest/gtest.h>

#include "monointerp/errors.hpp"
#include "monointerp/slopes.hpp"

#include "oracles.hpp"

namespace {

using namespace monointerp;
using oracle::frac;
using oracle::q;

BlockDiagram rows(std::vector<int> r)
{
    return BlockDiagram(std::move(r));
}

const BlockDiagram big = rows({9, 9, 7, 7, 6, 4, 3, 3});
const BlockDiagram fig1 = rows({7, 6, 6, 2, 1});

TEST(Slopes, HorizontalExamples)
{
    EXPECT_EQ(horizontal_slope(fig1, 3), q("19/3"));
    EXPECT_EQ(horizontal_slope(rows({1}), 1), 0);
    EXPECT_EQ(horizontal_slope(big, 5), q("43/5"));
    EXPECT_THROW(horizontal_slope(fig1, 6), std::out_of_range);
    EXPECT_THROW(horizontal_slope(fig1, 0), std::out_of_range);
}

TEST(Slopes, VerticalExamples)
{
    EXPECT_EQ(vertical_slope(fig1, 1), 4);
    EXPECT_EQ(vertical_slope(rows({1}), 1), 0);
    EXPECT_EQ(vertical_slope(fig1, 6), 5);
    EXPECT_THROW(vertical_slope(fig1, 8), std::out_of_range);
}

TEST(Slopes, DegreeTwentyTwoTable)
{
    const auto report = scheme_slope(fig1);
    const std::vector<Rational> horizontal{6, 6, q("19/3"), q("23/4"), q("27/5")};
    const std::vector<Rational> vertical{4, 4, 4, q("17/4"), q("23/5"), 5, q("36/7")};
    EXPECT_EQ(report.horizontal, horizontal);
    EXPECT_EQ(report.vertical, vertical);
    EXPECT_EQ(report.maximum, q("19/3"));
    EXPECT_EQ(report.argmax, (Cut{CutDirection::horizontal, 3}));
}

TEST(Slopes, SchemeSlopeExamples)
{
    const auto report = scheme_slope(big);
    EXPECT_EQ(report.maximum, q("43/5"));
    EXPECT_EQ(report.argmax, (Cut{CutDirection::horizontal, 5}));
    for (int a = 1; a <= 8; ++a) {
        for (int b = a; b <= 8; ++b) {
            const auto ci = scheme_slope(BlockDiagram::rectangle(a, b));
            EXPECT_EQ(ci.maximum, Rational(b) + frac(a - 3, 2));
            EXPECT_EQ(ci.argmax, (Cut{CutDirection::horizontal, a}));
        }
    }
    EXPECT_THROW(scheme_slope(BlockDiagram{}), DomainError);
}

TEST(Slopes, TieBreakPrefersHorizontalThenSmallestIndex)
{
    // (1,1): mu_1 = 0, mu_2 = 1/2; mu'_1 = 1 -> vertical wins outright.
    EXPECT_EQ(scheme_slope(rows({1, 1})).argmax, (Cut{CutDirection::vertical, 1}));
    // (2,2): every maximal slope ties between k = 2 and i = 2.
    EXPECT_EQ(scheme_slope(rows({2, 2})).argmax, (Cut{CutDirection::horizontal, 2}));
    // (2): mu_1 = 1 beats mu'_2 = 1/2.
    EXPECT_EQ(scheme_slope(rows({2})).argmax, (Cut{CutDirection::horizontal, 1}));
}

TEST(Purity, Examples)
{
    EXPECT_TRUE(is_horizontally_pure(rows({9, 9, 7, 7, 6})));
    EXPECT_TRUE(is_horizontally_pure(rows({1})));
    EXPECT_FALSE(is_horizontally_pure(fig1));
    EXPECT_TRUE(is_horizontally_pure(rows({1}), 3));
    EXPECT_FALSE(is_horizontally_pure(rows({6}), 2));
    EXPECT_THROW(is_horizontally_pure(fig1, 3), std::invalid_argument);
}

TEST(Slopes, ExhaustiveIdentities)
{
    for (int n = 1; n <= 14; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            const auto report = scheme_slope(d);
            const auto t = transpose(d);
            EXPECT_EQ(scheme_slope(t).maximum, report.maximum);
            for (int k = 1; k <= d.num_rows(); ++k) {
                EXPECT_EQ(horizontal_slope(d, k), oracle::closed_form_slope(d, k));
                EXPECT_EQ(horizontal_slope(d, k), padded_horizontal_slope(d, k));
            }
            for (int i = 1; i <= d.num_cols(); ++i) {
                EXPECT_EQ(vertical_slope(d, i), horizontal_slope(t, i));
            }
            Rational max = report.horizontal.front();
            for (const auto& v : report.horizontal) {
                max = std::max(max, v);
            }
            for (const auto& v : report.vertical) {
                max = std::max(max, v);
            }
            EXPECT_EQ(report.maximum, max);
            if (report.argmax.direction == CutDirection::horizontal) {
                EXPECT_TRUE(is_horizontally_pure(slice_below(d, report.argmax.index)));
            } else {
                EXPECT_TRUE(is_horizontally_pure(transpose(slice_left(d, report.argmax.index))));
            }
        }
    }
}

TEST(Slopes, CheckerIdentity)
{
    // (i+k) mu_{i+k}(Z) = k mu_k(Z) + i mu_i(W_k) + ik
    for (int n = 2; n <= 14; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            for (int k = 1; k < d.num_rows(); ++k) {
                const auto w = slice_above(d, k);
                for (int i = 1; i <= w.num_rows(); ++i) {
                    EXPECT_EQ((i + k) * horizontal_slope(d, i + k),
                        k * horizontal_slope(d, k) + i * horizontal_slope(w, i) + i * k);
                }
            }
        }
    }
}

TEST(Slopes, VerticalShiftIdentity)
{
    // The printed form mu'_i(W_k) = k + mu'_i(Z) fails; the block diagram
    // identity is mu'_i(W_k) = mu'_i(Z) - k.
    bool printed_form_fails = false;
    for (int n = 2; n <= 14; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            for (int k = 1; k < d.num_rows(); ++k) {
                const auto w = slice_above(d, k);
                for (int i = 1; i <= w.num_cols(); ++i) {
                    EXPECT_EQ(vertical_slope(w, i), vertical_slope(d, i) - k);
                    printed_form_fails = printed_form_fails || vertical_slope(w, i) != vertical_slope(d, i) + k;
                }
            }
        }
    }
    EXPECT_TRUE(printed_form_fails);
}

TEST(Purity, PaddedMatchesFlatWhenFull)
{
    for (int n = 1; n <= 12; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            EXPECT_EQ(is_horizontally_pure(d), is_horizontally_pure(d, d.num_rows()));
            bool brute = true;
            for (int i = 1; i <= d.num_rows(); ++i) {
                brute = brute && horizontal_slope(d, i) <= horizontal_slope(d, d.num_rows());
            }
            EXPECT_EQ(is_horizontally_pure(d), brute);
        }
    }
}

} // namespace
