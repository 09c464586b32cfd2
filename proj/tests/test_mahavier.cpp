#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fanshift/mahavier.hpp"

using namespace fanshift;

namespace {

// Paper coordinates: I_k = [2k-2, 2k-1], infinity excluded.
double paper_coord(const XPoint& x) { return 2.0 * x.index() - 2.0 + x.local(); }

// The letter's partial map written directly in paper coordinates.
double letter_oracle(int l, int j, double t) {
    if (j == 1) return t - 2.0;
    if (j == 3) return t + 2.0;
    if (l == 1) return std::cbrt(t);
    if (l == 2) return (t - 2.0) * (t - 2.0) + 2.0;
    return t;
}

MPoint random_point(std::mt19937_64& rng, int k, int half) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return MPoint::from_word(random_word(k, half, half, rng), XPoint::finite(k, u(rng)));
}

}  // namespace

TEST(MPoint, CoordinatesFollowTheLetters) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const MPoint p = random_point(rng, k, 5);
        for (int j = -5; j < 5; ++j) {
            const Letter l = p.letter(j);
            EXPECT_EQ(p.coord(j).index(), l.domain());
            EXPECT_EQ(p.coord(j + 1).index(), l.range());
            EXPECT_NEAR(letter_oracle(l.ell(), l.j(), paper_coord(p.coord(j))), paper_coord(p.coord(j + 1)), 1e-9)
                << p.word().to_string() << " at " << j;
        }
    }
}

TEST(MPoint, RejectsInadmissibleWords) {
    Word w;
    w.letters = {Letter(1, 3), Letter(1, 2)};
    EXPECT_THROW(MPoint::from_word(w, XPoint::finite(1, 0.5)), DomainError);
}

TEST(MPoint, ShiftMovesCoordinates) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 2000; ++i) {
        const MPoint p = random_point(rng, 1 + static_cast<int>(rng() % 5), 4);
        const MPoint s = p.shift();
        for (int j = -5; j <= 3; ++j) EXPECT_EQ(s.coord(j), p.coord(j + 1));
        EXPECT_TRUE(same_point(s.unshift(), p));
        EXPECT_TRUE(same_point(p.unshift().shift(), p));
        EXPECT_TRUE(same_point(p.shifted(3), s.shift().shift()));
    }
    const MPoint p = random_point(rng, 2, 1);
    EXPECT_THROW(p.shifted(2), WindowExhausted);
    EXPECT_THROW(p.unshift().unshift(), WindowExhausted);
    EXPECT_TRUE(MPoint::all_infinity().shift().is_all_infinity());
}

TEST(MPoint, ExtensionMatchesLongerWord) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 500; ++i) {
        const MPoint p = random_point(rng, 3, 3);
        Word w = p.word();
        const auto right = extensions(w, Side::Right);
        const Letter r = right[rng() % right.size()];
        w.letters.push_back(r);
        const auto left = extensions(w, Side::Left);
        const Letter l = left[rng() % left.size()];
        w.letters.insert(w.letters.begin(), l);
        ++w.offset;
        const MPoint grown = p.extended(r, Side::Right).extended(l, Side::Left);
        const MPoint direct = MPoint::from_word(w, p.t0());
        EXPECT_TRUE(same_point(grown, direct));
        EXPECT_EQ(grown.first_coord(), -4);
        EXPECT_EQ(grown.last_coord(), 4);
    }
}

TEST(MPoint, AnchorAnywhereGivesTheSamePoint) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 500; ++i) {
        const MPoint p = random_point(rng, 4, 3);
        for (int j = -3; j <= 3; ++j) {
            EXPECT_TRUE(same_point(MPoint::from_anchor(p.word(), j, p.coord(j)), p, Tolerance{1e-9}));
        }
    }
}

TEST(Metric, WindowDistanceIsAMetricOnSamples) {
    std::mt19937_64 rng(25);
    const WindowConfig cfg{6};
    for (int i = 0; i < 3000; ++i) {
        const MPoint a = random_point(rng, 1 + static_cast<int>(rng() % 4), 6);
        const MPoint b = random_point(rng, 1 + static_cast<int>(rng() % 4), 6);
        const MPoint c = random_point(rng, 1 + static_cast<int>(rng() % 4), 6);
        const double ab = dist_window(a, b, cfg), bc = dist_window(b, c, cfg), ac = dist_window(a, c, cfg);
        EXPECT_EQ(dist_window(a, a, cfg), 0.0);
        EXPECT_EQ(ab, dist_window(b, a, cfg));
        EXPECT_LE(ac, ab + bc + 1e-15);
        EXPECT_LE(ab, 1.0);
        EXPECT_LE(dist_window_forward(a, b, cfg), ab);
    }
}

TEST(Metric, TruncationErrorIsBounded) {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 2000; ++i) {
        const MPoint a = random_point(rng, 2, 10);
        const MPoint b = random_point(rng, 3, 10);
        const double coarse = dist_window(a, b, WindowConfig{4});
        const double fine = dist_window(a, b, WindowConfig{10});
        EXPECT_LE(coarse, fine);
        EXPECT_LE(fine - coarse, truncation_error_bound(WindowConfig{4}));
    }
}

TEST(Metric, DistanceToTheFixedPoint) {
    const MPoint inf = MPoint::all_infinity();
    std::mt19937_64 rng(27);
    const MPoint p = random_point(rng, 3, 4);
    const WindowConfig cfg{4};
    EXPECT_EQ(dist_window(inf, inf, cfg), 0.0);
    double expect = 0.0;
    for (int j = -4; j <= 4; ++j) expect = std::max(expect, (1.0 - embed(p.coord(j))) / std::ldexp(1.0, std::abs(j)));
    EXPECT_DOUBLE_EQ(dist_window(p, inf, cfg), expect);
}

TEST(Diameter, IntervalDiametersAreExact) {
    for (int k = 1; k <= 20; ++k) {
        EXPECT_EQ(dist(XPoint::finite(k, 0.0), XPoint::finite(k, 1.0)), std::ldexp(1.0, -(2 * k - 1)));
        EXPECT_EQ(interval_diameter(k), std::ldexp(1.0, -(2 * k - 1)));
    }
}

TEST(Diameter, BaseCoordinatesOfLkStayWithinTheInterval) {
    std::mt19937_64 rng(28);
    for (int k = 1; k <= 6; ++k) {
        for (int i = 0; i < 1000; ++i) {
            const MPoint a = random_point(rng, k, 8);
            const MPoint b = random_point(rng, k, 8);
            EXPECT_LE(dist(a.t0(), b.t0()), interval_diameter(k));
        }
    }
}

// Away from coordinate 0 the itinerary can leave I_k: two points of L_2 whose
// first coordinates sit in I_1 and I_3 are further apart than diam(I_2).
TEST(Diameter, FullWindowDistanceInLkCanExceedTheIntervalDiameter) {
    Word w1, w2;
    w1.letters = {Letter(2, 1)};
    w2.letters = {Letter(2, 3)};
    const MPoint a = MPoint::from_word(w1, XPoint::finite(2, 0.0));
    const MPoint b = MPoint::from_word(w2, XPoint::finite(2, 0.0));
    const double d1 = dist(a.coord(1), b.coord(1)) / 2.0;
    EXPECT_GT(d1, interval_diameter(2));
    EXPECT_NEAR(d1, (q_value(4) - q_value(0)) / 2.0, 1e-15);
}

TEST(ProductStructure, PackUnpackRoundTrip) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 10000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const ProductStructure ps(k);
        const Word w = random_word(k, 3, 4, rng);
        const double t = std::uniform_real_distribution<double>(0.0, ps.max_height())(rng);
        const MPoint p = ps.pack(w, t);
        EXPECT_EQ(p.base_interval(), k);
        EXPECT_NEAR(paper_coord(p.t0()), std::ldexp(t, 2 * k - 1) + 2 * k - 2, 1e-12);
        const auto [w2, t2] = ps.unpack(p);
        EXPECT_EQ(w2, w);
        EXPECT_EQ(t2, t);
    }
    EXPECT_THROW(ProductStructure(2).pack(random_word(2, 1, 1, rng), 0.2), RangeError);
    EXPECT_THROW(ProductStructure(3).pack(random_word(2, 1, 1, rng), 0.0), DomainError);
}

TEST(ProductStructure, HeightZeroGivesEvenEndpoints) {
    std::mt19937_64 rng(30);
    for (int i = 0; i < 2000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const MPoint p = ProductStructure(k).pack(random_word(k, 6, 6, rng), 0.0);
        for (int j = p.first_coord(); j <= p.last_coord(); ++j) EXPECT_TRUE(p.coord(j).even_endpoint());
    }
}

TEST(ModelMap, LandsInTheBundle) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const MPoint p = random_point(rng, k, 4);
        const ModelPoint m = model_map(p);
        EXPECT_EQ(m.bundle, k);
        EXPECT_GE(m.c, bundle_left(k));
        EXPECT_LE(m.c, bundle_right(k));
        EXPECT_EQ(m.tau, ProductStructure(k).unpack(p).second);
    }
    const ModelPoint inf = model_map(MPoint::all_infinity());
    EXPECT_EQ(inf.c, 1.0);
    EXPECT_EQ(inf.tau, 0.0);
    EXPECT_EQ(inf.bundle, 0);
}

TEST(RandomWord, IsAdmissibleWithTheRequestedShape) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 5000; ++i) {
        const int k = 1 + static_cast<int>(rng() % 7);
        const int left = static_cast<int>(rng() % 5), right = 1 + static_cast<int>(rng() % 5);
        const Word w = random_word(k, left, right, rng);
        EXPECT_TRUE(is_admissible(w));
        EXPECT_EQ(w.offset, left);
        EXPECT_EQ(static_cast<int>(w.size()), left + right);
        EXPECT_EQ(w.at(0).domain(), k);
    }
}
