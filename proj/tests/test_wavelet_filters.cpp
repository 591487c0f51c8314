#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wavembed/wavelet_filters.hpp"

using wavembed::WaveletFilter;
using wavembed::filter_names;
using wavembed::make_filter;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

TEST(WaveletFilters, SupportedFamilyList) {
    const auto& names = filter_names();
    ASSERT_EQ(names.size(), 24u);
    EXPECT_EQ(names.front(), "haar");
    EXPECT_EQ(names.back(), "coif5");
    for (const auto& name : names) {
        EXPECT_NO_THROW(make_filter(name)) << name;
    }
}

TEST(WaveletFilters, HaarTaps) {
    const WaveletFilter haar = make_filter("haar");
    ASSERT_EQ(haar.length(), 2u);
    EXPECT_DOUBLE_EQ(haar.lowpass[0], 1.0 / kSqrt2);
    EXPECT_DOUBLE_EQ(haar.lowpass[1], 1.0 / kSqrt2);
    EXPECT_DOUBLE_EQ(haar.highpass[0], 1.0 / kSqrt2);
    EXPECT_DOUBLE_EQ(haar.highpass[1], -1.0 / kSqrt2);
}

// db2 has the closed form (1 +- sqrt3, 3 +- sqrt3) / (4 sqrt2); the stored
// decomposition taps are that filter reversed.
TEST(WaveletFilters, Db2MatchesPublishedTable) {
    const WaveletFilter db2 = make_filter("db2");
    ASSERT_EQ(db2.length(), 4u);
    const double s3 = std::sqrt(3.0);
    const double expected[] = {(1.0 - s3) / (4.0 * kSqrt2), (3.0 - s3) / (4.0 * kSqrt2),
                               (3.0 + s3) / (4.0 * kSqrt2), (1.0 + s3) / (4.0 * kSqrt2)};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(db2.lowpass[i], expected[i], 1e-15) << i;
    }
    double sum_h = 0.0;
    double sum_g = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        sum_h += db2.lowpass[k];
        sum_g += db2.highpass[k];
    }
    EXPECT_NEAR(sum_h, kSqrt2, 1e-10);
    EXPECT_NEAR(sum_g, 0.0, 1e-10);
}

TEST(WaveletFilters, UnknownFamilyNamesOffender) {
    try {
        make_filter("bior2.2");
        FAIL() << "expected UnknownFilterError";
    } catch (const wavembed::UnknownFilterError& e) {
        EXPECT_NE(std::string(e.what()).find("bior2.2"), std::string::npos);
    }
    EXPECT_THROW(make_filter("db11"), wavembed::UnknownFilterError);
    EXPECT_THROW(make_filter("sym1"), wavembed::UnknownFilterError);
    EXPECT_THROW(make_filter("coif6"), wavembed::UnknownFilterError);
    EXPECT_THROW(make_filter(""), wavembed::UnknownFilterError);
}

TEST(WaveletFilters, TapInvariantsAllFamilies) {
    for (const auto& name : filter_names()) {
        const WaveletFilter f = make_filter(name);
        const std::size_t len = f.length();
        ASSERT_EQ(f.highpass.size(), len) << name;
        ASSERT_EQ(len % 2, 0u) << name;

        // quadrature mirror relation holds exactly by construction
        for (std::size_t k = 0; k < len; ++k) {
            const double expected = (k % 2 == 0 ? 1.0 : -1.0) * f.lowpass[len - 1 - k];
            EXPECT_EQ(f.highpass[k], expected) << name << " k=" << k;
        }

        double sum_h = 0.0;
        double sum_g = 0.0;
        for (std::size_t k = 0; k < len; ++k) {
            sum_h += f.lowpass[k];
            sum_g += f.highpass[k];
        }
        EXPECT_NEAR(sum_h, kSqrt2, 1e-10) << name;
        EXPECT_NEAR(sum_g, 0.0, 1e-10) << name;

        for (std::size_t m = 0; m < len / 2; ++m) {
            double corr = 0.0;
            for (std::size_t k = 0; k + 2 * m < len; ++k) {
                corr += f.lowpass[k] * f.lowpass[k + 2 * m];
            }
            EXPECT_NEAR(corr, m == 0 ? 1.0 : 0.0, 1e-10) << name << " shift=" << m;
        }
    }
}

TEST(WaveletFilters, ExpectedTapCounts) {
    EXPECT_EQ(make_filter("db10").length(), 20u);
    EXPECT_EQ(make_filter("sym10").length(), 20u);
    EXPECT_EQ(make_filter("coif1").length(), 6u);
    EXPECT_EQ(make_filter("coif5").length(), 30u);
}

}  // namespace
