#include <gtest/gtest.h>

#include "mcd/error.hpp"
#include "mcd/homcalc.hpp"
#include "mcd/ptolemy.hpp"

using namespace mcd;

namespace {

PairedArc arc(const ModelParams &p, int a, int b) { return *arc_from_endpoints(p, a, b); }
PairedArc red(int i) { return PairedArc::diameter(i, Color::Red); }
PairedArc green(int i) { return PairedArc::diameter(i, Color::Green); }

ArcSet set_of(const PairTable &t, std::initializer_list<PairedArc> arcs) {
    ArcSet s = t.empty_set();
    for (const auto &a : arcs) s.insert(t.universe().require_index(a));
    return s;
}

}  // namespace

TEST(Crossing, Examples) {
    auto p = ModelParams::make(4, 3);
    EXPECT_TRUE(crossing(p, arc(p, 1, 5), arc(p, 4, 8)));
    EXPECT_FALSE(crossing(p, red(1), green(1)));
    EXPECT_TRUE(crossing(p, red(1), green(4)));

    auto q = ModelParams::make(4, 2);
    EXPECT_FALSE(crossing(q, arc(q, 1, 6), arc(q, 8, 13)));
}

TEST(Crossing, DiameterPairsFollowDistanceParity) {
    auto p = ModelParams::make(4, 3);
    // d(d1, d4) = 3: odd, so different colours cross and equal colours do not.
    EXPECT_FALSE(crossing(p, red(1), red(4)));
    // d(d1, d2) = 1.
    EXPECT_TRUE(crossing(p, red(1), green(2)));
    // d(d1, d3) = 2: even, so equal colours cross.
    EXPECT_TRUE(crossing(p, red(1), red(3)));
    EXPECT_FALSE(crossing(p, red(1), green(3)));

    // With m = 1 every distance is 1 and only different colours cross.
    auto q = ModelParams::make(4, 1);
    for (int i = 1; i <= q.big_n(); ++i) {
        for (int k = 1; k <= q.big_n(); ++k) {
            if (i == k) continue;
            EXPECT_TRUE(crossing(q, red(i), green(k)));
            EXPECT_FALSE(crossing(q, red(i), red(k)));
        }
    }
}

TEST(Crossing, DiametersNeedOddM) {
    auto p = ModelParams::make(4, 2);
    EXPECT_THROW(crossing(p, red(1), green(3)), UnsupportedRegime);
    EXPECT_NO_THROW(crossing(p, red(1), arc(p, 2, 5)));
    PairTable t(p);
    EXPECT_THROW(t.crosses(t.universe().require_index(red(1)), t.universe().require_index(green(2))),
                 UnsupportedRegime);
    EXPECT_THROW(right_perp(t, t.empty_set()), UnsupportedRegime);
}

TEST(Crossing, RejectsMalformedArcs) {
    auto p = ModelParams::make(4, 3);
    EXPECT_THROW(crossing(p, PairedArc::chord(1, 2), arc(p, 4, 8)), InvalidParameters);
    EXPECT_THROW(crossing(p, PairedArc::chord(11, 15), arc(p, 4, 8)), InvalidParameters);
}

TEST(Distance, Examples) {
    auto p = ModelParams::make(4, 3);
    EXPECT_EQ(distance(p, arc(p, 1, 5), arc(p, 4, 8)), 3);
    EXPECT_EQ(distance(p, arc(p, 4, 8), arc(p, 1, 5)), 1);
    EXPECT_FALSE(distance(p, arc(p, 1, 5), arc(p, 11, 15)).has_value());

    auto q = ModelParams::make(4, 1);
    PairTable t(q);
    for (std::size_t a = 0; a < t.size(); ++a) {
        for (std::size_t b = 0; b < t.size(); ++b) {
            if (t.crosses(a, b)) EXPECT_EQ(t.distance(a, b), 1);
        }
    }
}

TEST(Distance, ComplementIdentityAndSymmetry) {
    for (int n = 3; n <= 6; ++n) {
        for (int m : {1, 3, 5}) {
            auto p = ModelParams::make(n, m);
            PairTable t(p);
            for (std::size_t a = 0; a < t.size(); ++a) {
                for (std::size_t b = 0; b < t.size(); ++b) {
                    EXPECT_EQ(t.crosses(a, b), t.crosses(b, a));
                    if (t.crosses(a, b)) EXPECT_EQ(t.distance(a, b) + t.distance(b, a), m + 1);
                }
                EXPECT_FALSE(t.crosses(a, a));
            }
        }
    }
}

TEST(Distance, BoundaryStepLemma) {
    // For interleaved chords i < k < j < l: (i,k) is an m-arc iff d(u,v) = 1
    // and k != i + 1.
    for (int n = 3; n <= 5; ++n) {
        for (int m : {1, 3}) {
            auto p = ModelParams::make(n, m);
            const int size = p.vertex_count();
            for (int i = 1; i <= size; ++i) {
                for (int k = i + 1; k <= size; ++k) {
                    for (int j = k + 1; j <= size; ++j) {
                        for (int l = j + 1; l <= size; ++l) {
                            auto u = arc_from_endpoints(p, i, j);
                            auto v = arc_from_endpoints(p, k, l);
                            if (!u || !v || u->is_diameter() || v->is_diameter()) continue;
                            if (!is_m_arc(p, *u) || !is_m_arc(p, *v)) continue;
                            if (!representatives_cross(p, {i, j}, {k, l})) continue;
                            auto ik = arc_from_endpoints(p, i, k);
                            const bool lhs = ik && is_m_arc(p, *ik);
                            const bool rhs = distance(p, *u, *v) == 1 && k != i + 1;
                            EXPECT_EQ(lhs, rhs) << i << "," << j << " x " << k << "," << l;
                        }
                    }
                }
            }
        }
    }
}

TEST(ExtNonzero, Examples) {
    auto p = ModelParams::make(4, 3);
    EXPECT_TRUE(ext_nonzero(p, arc(p, 1, 5), arc(p, 4, 8), 3));
    EXPECT_TRUE(ext_nonzero(p, arc(p, 4, 8), arc(p, 1, 5), 1));
    EXPECT_FALSE(ext_nonzero(p, arc(p, 4, 8), arc(p, 1, 5), 2));
    for (int j = 1; j <= 3; ++j) EXPECT_FALSE(ext_nonzero(p, arc(p, 1, 5), arc(p, 11, 15), j));
    EXPECT_THROW(ext_nonzero(p, arc(p, 1, 5), arc(p, 4, 8), 0), InvalidParameters);
    EXPECT_THROW(ext_nonzero(p, arc(p, 1, 5), arc(p, 4, 8), 4), InvalidParameters);
}

TEST(ExtNonzero, AtMostOneDegree) {
    auto p = ModelParams::make(5, 3);
    auto arcs = enumerate_m_arcs(p);
    for (const auto &u : arcs) {
        for (const auto &v : arcs) {
            int hits = 0;
            for (int j = 1; j <= 3; ++j) hits += ext_nonzero(p, u, v, j);
            EXPECT_LE(hits, 1);
            EXPECT_EQ(hits == 1, crossing(p, u, v));
        }
    }
}

TEST(Perp, Examples) {
    auto p = ModelParams::make(4, 3);
    PairTable t(p);
    EXPECT_EQ(right_perp(t, t.empty_set()), t.full_set());
    EXPECT_EQ(left_perp(t, t.empty_set()), t.full_set());

    const auto a15 = t.universe().require_index(arc(p, 1, 5));
    const auto a48 = t.universe().require_index(arc(p, 4, 8));
    EXPECT_TRUE(right_perp(t, set_of(t, {arc(p, 1, 5)})).contains(a48));
    EXPECT_FALSE(right_perp(t, set_of(t, {arc(p, 4, 8)})).contains(a15));
    EXPECT_FALSE(left_perp(t, set_of(t, {arc(p, 1, 5)})).contains(a48));
}

TEST(Perp, OfEverything) {
    auto p = ModelParams::make(4, 3);
    PairTable t(p);
    ArcSet expected = t.empty_set();
    for (std::size_t u = 0; u < t.size(); ++u) {
        bool ok = true;
        for (std::size_t v = 0; v < t.size(); ++v) {
            if (t.crosses(u, v) && t.distance(u, v) == 1) ok = false;
        }
        if (ok) expected.insert(u);
    }
    EXPECT_EQ(left_perp(t, t.full_set()), expected);
}

TEST(Perp, Monotone) {
    auto p = ModelParams::make(4, 3);
    PairTable t(p);
    SubsetSampler sampler(t.size(), 7);
    for (int trial = 0; trial < 500; ++trial) {
        ArcSet u = sampler.next();
        ArcSet v = u | sampler.next();
        EXPECT_TRUE(right_perp(t, v).is_subset_of(right_perp(t, u)));
        EXPECT_TRUE(left_perp(t, v).is_subset_of(left_perp(t, u)));
        EXPECT_TRUE(u.is_subset_of(left_perp(t, right_perp(t, u))));
    }
}

TEST(ArcSet, Basics) {
    ArcSet s(70);
    EXPECT_TRUE(s.empty());
    s.insert(0);
    s.insert(69);
    EXPECT_EQ(s.count(), 2u);
    EXPECT_EQ(s.members(), (std::vector<std::size_t>{0, 69}));
    EXPECT_EQ(s.complement().count(), 68u);
    EXPECT_EQ(ArcSet::full(70).count(), 70u);
    EXPECT_TRUE(s.is_subset_of(ArcSet::full(70)));
    ArcSet t(70);
    t.insert(1);
    EXPECT_LT(t, s);
    EXPECT_FALSE(s.intersects(t));
    EXPECT_EQ(ArcSet::from_bits(3, 0xff).count(), 3u);
    s.erase(69);
    EXPECT_EQ((s | t).count(), 2u);
    EXPECT_EQ((s & t).count(), 0u);
    EXPECT_EQ(((s | t) - s), t);
}
