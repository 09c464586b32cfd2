#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fanshift/xspace.hpp"

using namespace fanshift;

namespace {

// h^-1 computed from the ambient value: I_{m+1} = [2m, 2m+1] is sent
// affinely onto [q_{2m}, q_{2m+1}] with q_n = 1 - 1/2^n.
long double h_inverse(double ambient) {
    const long double m = std::floor(ambient / 2.0);
    const long double q0 = 1.0L - std::pow(2.0L, -2.0L * m);
    const long double q1 = 1.0L - std::pow(2.0L, -(2.0L * m + 1.0L));
    return q0 + (ambient - 2.0L * m) * (q1 - q0);
}

XPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k(0, 12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int idx = k(rng);
    return idx == 0 ? XPoint::infinity() : XPoint::finite(idx, u(rng));
}

}  // namespace

TEST(Embed, SpecExamples) {
    EXPECT_EQ(embed(XPoint::finite(1, 0.0)), 0.0);
    EXPECT_EQ(embed(XPoint::finite(1, 1.0)), 0.5);
    EXPECT_EQ(embed(XPoint::infinity()), 1.0);
}

TEST(Embed, AgreesWithAmbientFormula) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 1; k <= 20; ++k) {
        for (int i = 0; i < 50; ++i) {
            const XPoint x = XPoint::finite(k, u(rng));
            EXPECT_NEAR(embed(x), static_cast<double>(h_inverse(x.ambient())), 1e-15);
        }
    }
}

TEST(Dist, SpecExamples) {
    const XPoint x = XPoint::finite(4, 0.3);
    EXPECT_EQ(dist(x, x), 0.0);
    EXPECT_EQ(dist(XPoint::finite(1, 0.0), XPoint::infinity()), 1.0);
    for (int k = 1; k <= 20; ++k) {
        EXPECT_EQ(dist(XPoint::finite(k, 0.0), XPoint::finite(k, 1.0)), 1.0 / std::pow(2.0, 2 * k - 1)) << k;
        EXPECT_EQ(interval_diameter(k), 1.0 / std::pow(2.0, 2 * k - 1));
    }
}

TEST(Dist, MetricAxiomsOnRandomTriples) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10000; ++i) {
        const XPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
        EXPECT_EQ(dist(a, b), dist(b, a));
        EXPECT_LE(dist(a, c), dist(a, b) + dist(b, c) + 1e-15);
        EXPECT_LE(dist(a, b), 1.0);
        EXPECT_GE(dist(a, b), 0.0);
    }
}

TEST(Embed, StrictlyMonotoneInAmbientOrder) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        const XPoint a = random_point(rng), b = random_point(rng);
        if (order(a, b) < 0) {
            EXPECT_LT(embed(a), embed(b));
        } else if (order(b, a) < 0) {
            EXPECT_LT(embed(b), embed(a));
        }
    }
}

TEST(Embed, ConvergesToInfinity) {
    for (int k = 1; k <= 20; ++k) {
        EXPECT_EQ(1.0 - embed(XPoint::finite(k, 0.0)), std::ldexp(1.0, -(2 * k - 2)));
    }
}

TEST(XPoint, ClampsWithinToleranceAndRejectsBeyond) {
    EXPECT_EQ(XPoint::finite(2, 1.0 + 1e-13).local(), 1.0);
    EXPECT_EQ(XPoint::finite(2, -1e-13).local(), 0.0);
    EXPECT_THROW(XPoint::finite(2, 1.001), DomainError);
    EXPECT_THROW(XPoint::finite(0, 0.5), DomainError);
    EXPECT_THROW(XPoint::finite(1, std::nan("")), DomainError);
}

TEST(XPoint, CanonicalRepresentation) {
    EXPECT_EQ(XPoint::finite(3, 0.25), XPoint::from_ambient(4.25));
    EXPECT_NE(XPoint::finite(3, 0.25), XPoint::finite(4, 0.25));
    EXPECT_EQ(XPoint::from_ambient(INFINITY), XPoint::infinity());
    EXPECT_EQ(XPoint::finite(2, 1.0).ambient(), 3.0);
}

TEST(Unembed, InvertsEmbed) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 2000; ++i) {
        const XPoint x = random_point(rng);
        if (x.is_finite() && x.index() > 20) continue;
        const XPoint y = unembed(embed(x));
        EXPECT_TRUE(approx_equal(x, y, Tolerance{1e-9})) << x.to_string() << " vs " << y.to_string();
    }
    // Gap values go to the nearest endpoint.
    EXPECT_EQ(unembed(0.55), XPoint::finite(1, 1.0));
    EXPECT_EQ(unembed(0.74), XPoint::finite(2, 0.0));
}
