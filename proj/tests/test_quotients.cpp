#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fanshift/quotients.hpp"

using namespace fanshift;

namespace {

MPoint constant(int m, double u, int half = 3) {
    Word w;
    w.letters.assign(static_cast<std::size_t>(2 * half), Letter(m, 2));
    w.offset = half;
    return MPoint::from_word(w, XPoint::finite(m, u));
}

double height(const MPoint& p) { return p.t0().local() / std::pow(2.0, 2 * p.base_interval() - 1); }

// The relation read off directly: equal points, the top class, and arcs of
// one block k (host k^2+2, guests k^2+2+i with i <= a_k) at equal heights.
bool sim_literal(const MPoint& x, const MPoint& y, const std::vector<int>& a) {
    auto top = [](const MPoint& p) { return p.is_all_infinity() || p.t0().local() == 0.0; };
    if (top(x) && top(y)) return true;
    if (top(x) || top(y)) return false;
    if (same_point(x, y)) return true;
    auto arc = [&](const MPoint& p) -> std::pair<int, int> {
        const Word w = p.word();
        const int m = w.letters.front().domain();
        if (m < 3) return {0, 0};
        for (const auto& l : w.letters) {
            if (l.ell() != m || l.j() != 2) return {0, 0};
        }
        for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
            const int i = m - (k * k + 2);
            if (i >= 0 && i <= a[k - 1]) return {k, i};
        }
        return {0, 0};
    };
    const auto ax = arc(x), ay = arc(y);
    if (ax.first == 0 || ax.first != ay.first) return false;
    return std::abs(height(x) - height(y)) <= 1e-12;
}

std::vector<MPoint> pool(const AParam& a, std::mt19937_64& rng, int n) {
    std::vector<MPoint> out{MPoint::all_infinity()};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(a.required_bundles()));
        switch (rng() % 4) {
            case 0: out.push_back(MPoint::from_word(random_word(k, 3, 3, rng), XPoint::finite(k, 0.0))); break;
            case 1: out.push_back(MPoint::from_word(random_word(k, 3, 3, rng), XPoint::finite(k, unit(rng)))); break;
            default: {
                // Arcs of a block at a few shared heights.
                const int b = 1 + static_cast<int>(rng() % static_cast<unsigned>(a.size()));
                const int m = b * b + 2 + static_cast<int>(rng() % static_cast<unsigned>(2 * b + 1));
                const double tau = std::ldexp(static_cast<double>(1 + rng() % 3), -(2 * (b * b + 2 + 2 * b) + 1));
                out.push_back(constant(m, std::ldexp(tau, 2 * m - 1)));
            }
        }
    }
    return out;
}

}  // namespace

TEST(Phi, MapsPIntoRAndInverts) {
    for (const auto& p : sample_P(6, 16)) {
        const CPoint r = phi(p);
        EXPECT_TRUE(in_R(r));
        EXPECT_LE(r.t, r.cv());
        if (!is_vertex_fibre(p)) {
            EXPECT_NEAR(phi_inverse(r).t, p.t, 1e-14);
            EXPECT_EQ(phi_inverse(r).c, p.c);
        }
    }
    EXPECT_THROW(phi_inverse(CPoint{CantorAddress{{0, 0}}, 0.5}), DomainError);
    EXPECT_FALSE(in_R(CPoint{CantorAddress{{0, 2}}, 0.5}));
}

TEST(Phi, CantorAddressesAreIncreasing) {
    for (int d = 0; d <= 10; ++d) {
        const auto a = cantor_addresses(d);
        ASSERT_EQ(a.size(), std::size_t{1} << d);
        for (std::size_t i = 0; i + 1 < a.size(); ++i) EXPECT_LT(a[i].value(), a[i + 1].value());
    }
    EXPECT_THROW(cantor_addresses(25), DomainError);
}

TEST(Lift, ConjugatesThroughPhi) {
    const PMap f = [](const CPoint& x) {
        CantorAddress c = x.c;
        if (c.digits.size() >= 3 && c.digits[0] == 2) c.digits[2] = static_cast<std::uint8_t>(2 - c.digits[2]);
        return CPoint{c, x.t * x.t};
    };
    const auto grid = sample_P(6, 8);
    const LiftedMap fr = lift_f_R(f, grid);
    for (const auto& p : grid) {
        if (is_vertex_fibre(p)) {
            EXPECT_EQ(fr(phi(p)).t, 0.0);
        } else {
            const CPoint lhs = fr(phi(p));
            const CPoint rhs = phi(f(p));
            EXPECT_EQ(lhs.c, rhs.c);
            EXPECT_NEAR(lhs.t, rhs.t, 1e-14);
        }
    }
}

TEST(Lift, RejectsMapsCrossingTheVertexFibre) {
    const PMap into_zero = [](const CPoint& x) {
        CantorAddress z;
        z.digits.assign(x.c.digits.size(), 0);
        return x.c.digits.size() && x.c.digits.back() == 2 ? CPoint{z, x.t} : x;
    };
    EXPECT_THROW(lift_f_R(into_zero, sample_P(4, 4)), HypothesisViolated);
    const PMap out_of_zero = [](const CPoint& x) {
        CantorAddress c = x.c;
        if (x.cv() == 0.0 && !c.digits.empty()) c.digits.back() = 2;
        return CPoint{c, x.t};
    };
    EXPECT_THROW(lift_f_R(out_of_zero, sample_P(4, 4)), HypothesisViolated);
}

TEST(Hlavna, IdentityAndFibrePreservingMapsPass) {
    const auto id = check_hlavna([](const CPoint& x) { return x; }, 7, 12);
    EXPECT_TRUE(id.pass);
    EXPECT_TRUE(id.vertex_sequence_available);
    // Swap the cylinders [20] and [22] and reflect heights.
    const auto swap = check_hlavna(
        [](const CPoint& x) {
            CantorAddress c = x.c;
            if (c.digits.size() >= 2 && c.digits[0] == 2) c.digits[1] = static_cast<std::uint8_t>(2 - c.digits[1]);
            return CPoint{c, 1.0 - x.t};
        },
        7, 12);
    EXPECT_TRUE(swap.pass) << (swap.witnesses.empty() ? "" : swap.witnesses.front());
}

TEST(Hlavna, DetectsCollapse) {
    const auto r = check_hlavna([](const CPoint& x) { return CPoint{x.c, x.t / 2}; }, 5, 8);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.surjective);
    const auto flat = check_hlavna(
        [](const CPoint& x) {
            CantorAddress c = x.c;
            if (c.digits.size() >= 2 && c.digits[0] == 2) c.digits.back() = 2;
            return CPoint{c, x.t};
        },
        5, 8);
    EXPECT_FALSE(flat.injective);
}

// Points just off the vertex go to the far end of C: no limit at the vertex.
TEST(Hlavna, DetectsDiscontinuityAtTheVertex) {
    const auto r = check_hlavna(
        [](const CPoint& x) {
            if (x.cv() == 0.0) return x;
            CantorAddress c = x.c;
            c.digits[0] = 2;
            return CPoint{c, x.t};
        },
        8, 8);
    EXPECT_FALSE(r.vertex_continuous);
    EXPECT_GT(r.vertex_tail, 0.3);
}

TEST(Hlavna, ShiftConjugatePermutesPeriodicSample) {
    const auto graph = shift_conjugate_graph(4, 5, 6, 8);
    std::set<std::pair<std::string, double>> dom, img;
    for (const auto& [x, y] : graph) {
        dom.insert({x.c.to_string(), x.t});
        img.insert({y.c.to_string(), y.t});
    }
    EXPECT_EQ(dom, img);
    EXPECT_EQ(dom.size(), graph.size());
    const auto r = check_hlavna(graph);
    EXPECT_TRUE(r.surjective);
    EXPECT_TRUE(r.injective);
    EXPECT_TRUE(r.pass);
}

TEST(Hlavna, DensityTransferBound) {
    std::mt19937_64 rng(51);
    const auto net = sample_P(4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<CPoint> orbit;
        for (int i = 0; i < 10; ++i) orbit.push_back(net[rng() % net.size()]);
        const auto d = density_transfer(orbit, net);
        EXPECT_TRUE(d.bound_holds);
        EXPECT_LE(d.eps_R, 2 * d.eps_P + 1e-15);
    }
    const auto all = density_transfer(net, net);
    EXPECT_EQ(all.eps_P, 0.0);
    EXPECT_EQ(all.eps_R, 0.0);
}

TEST(AParam, ValidationAndTruncation) {
    EXPECT_NO_THROW(AParam({1, 4, 5}));
    EXPECT_THROW(AParam({3}), DomainError);
    EXPECT_THROW(AParam({1, 2}), DomainError);
    const AParam a = AParam::from_bits(0b101, 3);
    EXPECT_EQ(a.values(), (std::vector<int>{2, 3, 6}));
    EXPECT_THROW(a.at(4), TruncationError);
    EXPECT_EQ(a.to_string(), "2,3,6");
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        const AParam b = AParam::from_bits(bits, 6);
        int expect = 0;
        for (int k = 1; k <= 6; ++k) expect = std::max(expect, k * k + 2 + b.at(k));
        EXPECT_EQ(b.required_bundles(), expect);
    }
}

TEST(Blocks, PartitionTheArcIndices) {
    for (int k = 1; k <= 30; ++k) {
        for (int i = 0; i <= 2 * k; ++i) EXPECT_EQ(m_block(k * k + 2 + i), std::make_pair(k, i));
    }
}

TEST(Relation, MIndexAndTopClass) {
    EXPECT_EQ(m_index(constant(7, 0.5)), 7);
    EXPECT_FALSE(m_index(constant(2, 0.5)).has_value());
    std::mt19937_64 rng(52);
    Word w = random_word(4, 2, 2, rng);
    if (std::all_of(w.letters.begin(), w.letters.end(), [](const Letter& l) { return l == Letter(4, 2); })) {
        w.letters.back() = Letter(4, 3);
    }
    EXPECT_FALSE(m_index(MPoint::from_word(w, XPoint::finite(4, 0.5))).has_value());
    EXPECT_TRUE(in_top_class(MPoint::all_infinity()));
    EXPECT_TRUE(in_top_class(constant(5, 0.0)));
    EXPECT_FALSE(in_top_class(constant(5, 0.1)));
}

TEST(Relation, AgreesWithLiteralDefinition) {
    std::mt19937_64 rng(53);
    for (const auto& values : {std::vector<int>{1, 4, 5}, std::vector<int>{2, 3}, std::vector<int>{2, 4, 6}}) {
        const AParam a(values);
        const auto pts = pool(a, rng, 150);
        int related = 0;
        for (const auto& x : pts) {
            for (const auto& y : pts) {
                const bool s = sim_a(x, y, a);
                EXPECT_EQ(s, sim_literal(x, y, values));
                related += s && !same_point(x, y);
            }
        }
        EXPECT_GT(related, 100);
    }
}

TEST(Relation, IsAnEquivalenceOnSamples) {
    std::mt19937_64 rng(54);
    const AParam a({1, 4, 5});
    const auto pts = pool(a, rng, 60);
    const std::size_t n = pts.size();
    std::vector<std::vector<char>> r(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i][j] = sim_a(pts[i], pts[j], a);
    }
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(r[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(r[i][j], r[j][i]);
            if (!r[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (r[j][k]) {
                    EXPECT_TRUE(r[i][k]) << i << " " << j << " " << k;
                }
            }
        }
    }
}

TEST(Relation, ArcsBeyondTheTruncationAreReported) {
    const AParam a({1});
    EXPECT_THROW(sim_a(constant(7, 0.5), constant(8, 0.5), a), TruncationError);
}

TEST(Quotient, ShiftPreservesTheRelation) {
    std::mt19937_64 rng(55);
    const AParam a({2, 3, 6});
    const auto pts = pool(a, rng, 120);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const bool before = sim_a(pts[i], pts[j], a);
            EXPECT_EQ(before, sim_a(pts[i].shift(), pts[j].shift(), a));
            EXPECT_EQ(before, sim_a(pts[i].unshift(), pts[j].unshift(), a));
        }
    }
}

TEST(Quotient, InducedShiftFixesArcClasses) {
    const AParam a({1, 4});
    std::vector<MPoint> samples;
    for (int k = 1; k <= 2; ++k) {
        for (int i = 0; i <= a.at(k); ++i) {
            for (double u : {0.25, 0.75}) samples.push_back(constant(k * k + 2 + i, u));
        }
    }
    const ClassMap star = descend([](const MPoint& x) { return x.shift(); }, a, samples);
    for (const auto& x : samples) {
        const ClassKey before = class_of(x, a), after = star(x);
        EXPECT_EQ(before.kind, after.kind);
        EXPECT_EQ(before.block, after.block);
        EXPECT_EQ(before.height, after.height);
        EXPECT_TRUE(star.same_class(x, x));
    }
}

TEST(Quotient, DescentRejectsMapsThatSplitClasses) {
    const AParam a({1});
    std::vector<MPoint> samples;
    const double tau = std::ldexp(0.5, -(2 * 4 - 1));
    samples.push_back(constant(3, std::ldexp(tau, 5)));
    samples.push_back(constant(4, std::ldexp(tau, 7)));
    const XMap f = [](const MPoint& x) {
        if (m_index(x) == 3) return constant(3, x.t0().local() / 2);
        return x;
    };
    ASSERT_TRUE(sim_a(samples[0], samples[1], a));
    EXPECT_THROW(descend(f, a, samples), WellDefinednessError);
}

TEST(Fan, LegsGluingsAndBundles) {
    const AParam a({1, 4});
    const int kmax = a.required_bundles();
    const int depth = 2;
    const FanModel fan = build_fan(a, kmax, depth);
    std::size_t expected_legs = 0;
    for (int k = 1; k <= kmax; ++k) {
        std::size_t lefts = letters_with_range(k).size();
        expected_legs += count_words(k, 1) * lefts;
    }
    EXPECT_EQ(fan.legs.size(), expected_legs);
    for (std::size_t i = 0; i + 1 < fan.legs.size(); ++i) EXPECT_LT(fan.legs[i].c(), fan.legs[i + 1].c());
    for (const auto& leg : fan.legs) {
        EXPECT_GE(leg.c(), bundle_left(leg.bundle));
        EXPECT_LE(leg.c(), bundle_right(leg.bundle));
        EXPECT_EQ(leg.length, interval_diameter(leg.bundle));
    }
    ASSERT_EQ(fan.gluings.size(), 5u);
    std::multiset<std::pair<int, int>> pairs;
    for (const auto& g : fan.gluings) pairs.insert({fan.legs[g.host].m_index, fan.legs[g.guest].m_index});
    EXPECT_EQ(pairs, (std::multiset<std::pair<int, int>>{{3, 4}, {6, 7}, {6, 8}, {6, 9}, {6, 10}}));
    EXPECT_THROW(build_fan(a, kmax - 1, depth), DomainError);
}

TEST(Fan, StarOfStarsScalesEveryCopy) {
    const FanModel base = build_fan(AParam({2}), 5, 2);
    const int copies = 5;
    const double scale = 0.75;
    const FanModel star = star_of(base, copies, scale);
    ASSERT_EQ(star.legs.size(), base.legs.size() * copies);
    ASSERT_EQ(star.gluings.size(), base.gluings.size() * copies);

    std::multiset<double> expected, got;
    for (int n = 1; n <= copies; ++n) {
        for (const auto& leg : base.legs) expected.insert(leg.length * scale / std::pow(2.0, n));
    }
    for (const auto& leg : star.legs) got.insert(leg.length);
    EXPECT_EQ(got, expected);

    // Copies sit in disjoint cylinders and keep their gluing pattern.
    for (std::size_t i = 0; i < star.legs.size(); ++i) {
        const int n = static_cast<int>(i / base.legs.size()) + 1;
        EXPECT_TRUE(bundle_prefix(n).is_prefix_of(star.legs[i].address));
    }
    for (std::size_t g = 0; g < star.gluings.size(); ++g) {
        const auto& b = base.gluings[g % base.gluings.size()];
        EXPECT_EQ(star.legs[star.gluings[g].host].m_index, base.legs[b.host].m_index);
        EXPECT_EQ(star.legs[star.gluings[g].guest].m_index, base.legs[b.guest].m_index);
    }
    const FanModel twice = star_of(star, 2, 1.0);
    EXPECT_EQ(twice.legs.size(), star.legs.size() * 2);
}

TEST(Fan, ModelPointOfInfinity) {
    const CPoint p = model_cpoint(MPoint::all_infinity(), 5);
    EXPECT_EQ(p.c.to_string(), "22222");
    EXPECT_EQ(p.t, 0.0);
}
