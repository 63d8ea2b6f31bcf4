// SPDX-License-Identifier: Apache-2.0
//
// nfgain: near-field channel gains for planar arrays and reflecting surfaces
// Copyright (C) 2026 The nfgain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nfgain/errors.hpp"
#include "nfgain/propagation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace nfgain;

namespace
{
    // Isotropic element at a 0.1 m wavelength.
    constexpr double iso_area = 0.01 / (4.0 * pi);

    double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}

// Reference values below were computed once with 50-digit arithmetic, independently of this
// code, and are frozen here.

TEST(FreeSpaceGain, Examples)
{
    EXPECT_DOUBLE_EQ(free_space_gain(4.0 * pi, Length{1.0}).value, 1.0);
    const Gain g25 = free_space_gain(iso_area, Length{25.0});
    EXPECT_LT(rel(g25.value, 1.0132118364233777e-7), 1e-14);
    EXPECT_NEAR(to_db(g25.value), -69.94299745, 1e-8);
    EXPECT_EQ(g25.provenance, Provenance::exact);
    EXPECT_LT(rel(free_space_gain(iso_area, Length{2.5}).value, 1.0132118364233777e-5), 1e-14);
}

TEST(FreeSpaceGain, RejectsZeroDistanceAndArea)
{
    EXPECT_THROW(free_space_gain(1.0, Length{0.0}), DomainError);
    EXPECT_THROW(free_space_gain(0.0, Length{1.0}), DomainError);
}

TEST(ElementGain, FrozenReference)
{
    const Gain g = element_gain({3, 1, 10}, {0.5, -0.5, 0}, Length{1.0});
    EXPECT_LT(rel(g.value, 6.87827685765986372e-4), 1e-14);
}

TEST(ElementGain, CenteredSquareEqualsBoresightGain)
{
    for (double d : {1.0, 25.0, 300.0})
        for (double area : {1e-4, 1.0, 1e4})
        {
            const double e = element_gain({0, 0, d}, {0, 0, 0}, Length{std::sqrt(area)}).value;
            EXPECT_LT(rel(e, boresight_array_gain(Length{d}, area).value), 1e-13) << d << " " << area;
        }
}

TEST(ElementGain, VanishesMonotonicallyWithSide)
{
    double previous = 1.0;
    for (double side = 1.0; side > 1e-6; side /= 3)
    {
        const double g = element_gain({0.3, -0.2, 2.0}, {1.0, 0.5, 0.0}, Length{side}).value;
        EXPECT_LT(g, previous);
        EXPECT_GT(g, 0.0);
        previous = g;
    }
    EXPECT_LT(previous, 1e-12);
}

TEST(ElementGain, RejectsTransmitterInOrBehindPlane)
{
    EXPECT_THROW(element_gain({0, 0, 0}, {0, 0, 0}, Length{1}), DomainError);
    EXPECT_THROW(element_gain({0, 0, -1}, {0, 0, 0}, Length{1}), DomainError);
    EXPECT_THROW(element_gain({0, 0, 1}, {0, 0, 0.1}, Length{1}), DomainError);
    EXPECT_THROW(element_gain({0, 0, 1}, {0, 0, 0}, Length{0}), DomainError);
}

TEST(ElementGain, QuadrantSplitIsAdditive)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> off(-5, 5), dist(1, 100), side(0.01, 5);
    for (int i = 0; i < 200; ++i)
    {
        const Point3 tx{off(rng), off(rng), dist(rng)};
        const double cx = off(rng), cy = off(rng), a = side(rng);
        double parts = 0.0;
        for (double dx : {-a / 4, a / 4})
            for (double dy : {-a / 4, a / 4})
                parts += element_gain(tx, {cx + dx, cy + dy, 0}, Length{a / 2}).value;
        EXPECT_LT(rel(parts, element_gain(tx, {cx, cy, 0}, Length{a}).value), 1e-12);
    }
}

TEST(ElementGain, ReflectionSymmetry)
{
    const Point3 c{0.7, -0.4, 0};
    const double g = element_gain({2.0, 1.0, 3.0}, c, Length{0.8}).value;
    EXPECT_LT(rel(element_gain({2 * c.x - 2.0, 1.0, 3.0}, c, Length{0.8}).value, g), 1e-14);
    EXPECT_LT(rel(element_gain({2.0, 2 * c.y - 1.0, 3.0}, c, Length{0.8}).value, g), 1e-14);
}

TEST(ElementGain, BoundedByOneThird)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> off(-50, 50), dist(0.01, 10);
    for (int i = 0; i < 500; ++i)
    {
        const double g = element_gain({off(rng), off(rng), dist(rng)}, {off(rng), off(rng), 0}, Length{dist(rng) * 10}).value;
        EXPECT_GT(g, 0.0);
        EXPECT_LT(g, planar_gain_limit);
    }
}

TEST(BoresightGain, FrozenReference)
{
    EXPECT_LT(rel(boresight_array_gain(Length{25}, 1e4 * iso_area).value, 1.00893149593247770e-3), 1e-14);
}

TEST(BoresightGain, NearTheLimit)
{
    // total_area = 4 d^2 u gives N beta pi = u
    const double d = 25.0;
    EXPECT_NEAR(boresight_array_gain(Length{d}, 4 * d * d * 1e4).value, 0.3310825738059397, 1e-13);
    EXPECT_GT(boresight_array_gain(Length{d}, 4 * d * d * 1e6).value, 0.333);
    EXPECT_NEAR(boresight_array_gain(Length{d}, 4 * d * d * 1e20).value, 1.0 / 3.0, 1e-10);
}

TEST(BoresightGain, FarFieldErrorAtHundredThousandElements)
{
    // N beta_d = 1.0132e-2 at d = 25 m with 1e5 isotropic elements
    const double n_beta = 1e5 * iso_area / (4 * pi * 625.0);
    const double alpha = boresight_array_gain(Length{25}, 1e5 * iso_area).value;
    EXPECT_LT(alpha, n_beta);
    EXPECT_LT((n_beta - alpha) / n_beta, 0.05);
    EXPECT_GT((n_beta - alpha) / n_beta, 0.04);
}

TEST(BoresightGain, MonotoneInAreaAndDistance)
{
    double previous = 0.0;
    for (double area = 1e-6; area < 1e12; area *= 3.7)
    {
        const double g = boresight_array_gain(Length{10}, area).value;
        EXPECT_GT(g, previous);
        previous = g;
    }
    previous = 1.0;
    for (double d = 0.1; d < 1e4; d *= 2.3)
    {
        const double g = boresight_array_gain(Length{d}, 5.0).value;
        EXPECT_LT(g, previous);
        previous = g;
    }
}

TEST(OffaxisGain, FrozenReference)
{
    EXPECT_LT(rel(offaxis_array_gain(Length{25}, Angle{pi / 6}, 1e3 * iso_area).value, 8.77269339610588888e-5), 1e-13);
}

TEST(OffaxisGain, ZeroAngleIsBoresight)
{
    for (double area : {1e-3, 1.0, 1e3, 1e9})
        EXPECT_LT(rel(offaxis_array_gain(Length{25}, Angle{0}, area).value, boresight_array_gain(Length{25}, area).value),
                  1e-14);
}

TEST(OffaxisGain, EvenInAngle)
{
    for (double eta : {0.1, 0.5, 1.0, 1.5})
        for (double area : {1e-2, 10.0, 1e5})
            EXPECT_DOUBLE_EQ(offaxis_array_gain(Length{7}, Angle{eta}, area).value,
                             offaxis_array_gain(Length{7}, Angle{-eta}, area).value);
}

TEST(OffaxisGain, DependsOnlyOnTotalArea)
{
    // (N, A) = (100, a) and (400, a/4) describe the same aperture
    const double a = 0.02;
    const double x = offaxis_array_gain(Length{3}, Angle{0.4}, 100 * a).value;
    const double y = offaxis_array_gain(Length{3}, Angle{0.4}, 400 * (a / 4)).value;
    EXPECT_DOUBLE_EQ(x, y);
}

TEST(OffaxisGain, ApproachesOneThird)
{
    for (double eta : {0.0, 0.7, -1.3})
    {
        const double c = std::cos(eta);
        const double at_b6 = offaxis_array_gain(Length{25}, Angle{eta}, 1e6 * 4 * 625 * c * c).value;
        EXPECT_GT(at_b6, 0.333);
        EXPECT_LT(at_b6, planar_gain_limit);
    }
}

TEST(OffaxisGain, AsymptoticBranchIsContinuous)
{
    const double c = std::cos(0.3);
    const double scale = 4 * 25.0 * 25.0 * c * c;
    const double below = offaxis_array_gain(Length{25}, Angle{0.3}, 1e12 * scale).value;
    const double above = offaxis_array_gain(Length{25}, Angle{0.3}, 1e12 * (1 + 1e-12) * scale).value;
    EXPECT_NEAR(below, above, 1e-15);
}

TEST(OffaxisGain, RejectsGrazingAngle)
{
    EXPECT_THROW(offaxis_array_gain(Length{25}, Angle{pi / 2}, 1.0), DomainError);
    EXPECT_THROW(offaxis_array_gain(Length{0}, Angle{0}, 1.0), DomainError);
}

TEST(FarFieldGain, Examples)
{
    EXPECT_DOUBLE_EQ(far_field_gain(iso_area, Length{25}, Angle{0}).value, free_space_gain(iso_area, Length{25}).value);
    const Gain g = far_field_gain(iso_area, Length{25}, Angle{pi / 6});
    EXPECT_LT(rel(g.value, 8.77467189757728e-8), 1e-13);
    EXPECT_EQ(g.provenance, Provenance::far_field);
    EXPECT_LT(rel(far_field_gain(iso_area, Length{2.5}, Angle{-pi / 6}).value, 8.77467189757728e-6), 1e-13);
    EXPECT_THROW(far_field_gain(iso_area, Length{25}, Angle{-pi / 2}), DomainError);
}

TEST(FarFieldValid, RuleOfThumb)
{
    EXPECT_TRUE(far_field_valid(0.05, Length{25}, Angle{0}));
    EXPECT_TRUE(far_field_valid(62.5, Length{25}, Angle{0}));
    EXPECT_FALSE(far_field_valid(625, Length{25}, Angle{0}));
    const double exact = boresight_array_gain(Length{25}, 625).value;
    EXPECT_GT((far_field_gain(625, Length{25}, Angle{0}).value - exact) / exact, 0.05);
    EXPECT_THROW(far_field_valid(1.0, Length{0}, Angle{0}), DomainError);
}

TEST(FarFieldValid, ApproximationWithinFivePercentWhenValid)
{
    for (double d : {2.5, 25.0})
        for (double eta = -1.4; eta <= 1.4; eta += 0.1)
        {
            const double normal = d * std::cos(eta);
            const double area = normal * normal / 10.0;
            ASSERT_TRUE(far_field_valid(area, Length{d}, Angle{eta}));
            const double ff = far_field_gain(area, Length{d}, Angle{eta}).value;
            EXPECT_LT(rel(offaxis_array_gain(Length{d}, Angle{eta}, area).value, ff), 0.05) << d << " " << eta;
        }
}

TEST(MirrorLimit, Examples)
{
    const Gain g = mirror_limit_gain(Length{25}, Length{2.5}, iso_area);
    EXPECT_LT(rel(g.value, 8.37365154068907e-8), 1e-13);
    EXPECT_NEAR(to_db(g.value), -70.7708512, 1e-7);
    EXPECT_EQ(g.provenance, Provenance::mirror_limit);
    EXPECT_DOUBLE_EQ(mirror_limit_gain(Length{25}, Length{0}, iso_area).value, free_space_gain(iso_area, Length{25}).value);
    EXPECT_DOUBLE_EQ(mirror_limit_gain(Length{50}, Length{5}, iso_area).value * 4, g.value);
}

TEST(MirrorMaxArea, Examples)
{
    const double area = mirror_max_area(Length{25}, Length{2.5}, Length{0.1});
    EXPECT_NEAR(area, 0.2272727272727273, 1e-15);
    EXPECT_NEAR(area / iso_area, 285.5993321445, 1e-8);
    EXPECT_DOUBLE_EQ(mirror_max_area(Length{4}, Length{4}, Length{0.1}), 0.1 * 4 / 2);
    EXPECT_DOUBLE_EQ(mirror_max_area(Length{1e300}, Length{3}, Length{0.1}), 0.1 * 3);
    EXPECT_THROW(mirror_max_area(Length{1}, Length{0}, Length{0.1}), DomainError);
}
