#include <gtest/gtest.h>

#include <set>

#include "mcd/error.hpp"
#include "mcd/ptolemy.hpp"
#include "oracles.hpp"

using namespace mcd;

namespace {

PairedArc arc(const ModelParams &p, int a, int b) { return *arc_from_endpoints(p, a, b); }
PairedArc red(int i) { return PairedArc::diameter(i, Color::Red); }
PairedArc green(int i) { return PairedArc::diameter(i, Color::Green); }

ArcSet set_of(const PtolemyChecker &c, std::initializer_list<PairedArc> arcs) {
    ArcSet s(c.size());
    for (const auto &a : arcs) s.insert(c.universe().require_index(a));
    return s;
}

class Ptolemy43 : public ::testing::Test {
protected:
    ModelParams p = ModelParams::make(4, 3);
    PtolemyChecker checker{p};
};

}  // namespace

TEST_F(Ptolemy43, ForcedArcsWorkedExamples) {
    EXPECT_EQ(forced_arcs(p, arc(p, 1, 5), arc(p, 4, 8)), (std::vector<PairedArc>{arc(p, 1, 8)}));
    EXPECT_EQ(forced_arcs(p, arc(p, 1, 8), arc(p, 4, 11)),
              (std::vector<PairedArc>{arc(p, 4, 8), red(1), green(1)}));
    EXPECT_EQ(forced_arcs(p, red(1), green(4)), (std::vector<PairedArc>{arc(p, 4, 11)}));
}

TEST_F(Ptolemy43, ForcedArcsDiameterAgainstChord) {
    // The diameter end 4 sits inside 1..5: 5 - 4 = 1 (mod 3) forces the
    // diameter at 1, while 4 - 1 = 3 forces nothing at 5.
    EXPECT_EQ(forced_arcs(p, arc(p, 1, 5), red(4)), (std::vector<PairedArc>{red(1)}));
    // Symmetric argument order.
    EXPECT_EQ(forced_arcs(p, red(4), arc(p, 1, 5)), (std::vector<PairedArc>{red(1)}));
    // The colour follows the diameter.
    EXPECT_EQ(forced_arcs(p, arc(p, 1, 5), green(4)), (std::vector<PairedArc>{green(1)}));
}

TEST_F(Ptolemy43, ForcedArcsPreconditions) {
    EXPECT_THROW(forced_arcs(p, arc(p, 1, 5), arc(p, 6, 10)), PreconditionViolation);
    EXPECT_THROW(forced_arcs(ModelParams::make(4, 2), arc(ModelParams::make(4, 2), 1, 6),
                             arc(ModelParams::make(4, 2), 3, 8)),
                 UnsupportedRegime);
    EXPECT_THROW(PtolemyChecker(ModelParams::make(3, 2)), UnsupportedRegime);
}

TEST_F(Ptolemy43, ForcedArcsAreMArcsAndSymmetric) {
    const auto &u = checker.universe();
    for (std::size_t a = 0; a < u.size(); ++a) {
        for (std::size_t b = 0; b < u.size(); ++b) {
            if (!checker.table().crosses(a, b)) continue;
            auto f = forced_arcs(p, u.arc(a), u.arc(b));
            EXPECT_EQ(f, forced_arcs(p, u.arc(b), u.arc(a)));
            for (const auto &x : f) EXPECT_TRUE(is_m_arc(p, x));
            EXPECT_EQ(checker.forced(a, b).count(), f.size());
        }
    }
}

TEST_F(Ptolemy43, Violations) {
    EXPECT_TRUE(checker.violations(ArcSet(checker.size())).empty());
    EXPECT_TRUE(checker.violations(ArcSet::full(checker.size())).empty());

    auto v = checker.violations(set_of(checker, {arc(p, 1, 5), arc(p, 4, 8)}));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].missing, set_of(checker, {arc(p, 1, 8)}));
    EXPECT_LT(v[0].first, v[0].second);
}

TEST_F(Ptolemy43, IsPtolemy) {
    EXPECT_TRUE(checker.is_ptolemy(ArcSet(checker.size())));
    EXPECT_FALSE(checker.is_ptolemy(set_of(checker, {arc(p, 1, 5), arc(p, 4, 8)})));
    EXPECT_TRUE(checker.is_ptolemy(set_of(checker, {arc(p, 1, 5), arc(p, 4, 8), arc(p, 1, 8)})));
}

TEST_F(Ptolemy43, Complete) {
    auto pt = set_of(checker, {arc(p, 1, 5), arc(p, 4, 8), arc(p, 1, 8)});
    EXPECT_EQ(checker.complete(pt), pt);
    EXPECT_EQ(checker.complete(set_of(checker, {arc(p, 1, 5), arc(p, 4, 8)})), pt);
    EXPECT_EQ(checker.complete(set_of(checker, {red(1), green(4)})),
              set_of(checker, {red(1), green(4), arc(p, 4, 11)}));
}

TEST_F(Ptolemy43, CompletionIsAClosureOperator) {
    SubsetSampler sampler(checker.size(), 11);
    for (int trial = 0; trial < 300; ++trial) {
        ArcSet u = sampler.next();
        ArcSet v = u | sampler.next();
        ArcSet cu = checker.complete(u);
        EXPECT_TRUE(u.is_subset_of(cu));
        EXPECT_TRUE(checker.is_ptolemy(cu));
        EXPECT_EQ(checker.complete(cu), cu);
        EXPECT_TRUE(cu.is_subset_of(checker.complete(v)));
    }
}

TEST_F(Ptolemy43, TorsionPair) {
    auto empty = checker.torsion_pair(ArcSet(checker.size()));
    EXPECT_TRUE(empty.torsion.empty());
    EXPECT_EQ(empty.torsion_free, ArcSet::full(checker.size()));

    auto all = checker.torsion_pair(ArcSet::full(checker.size()));
    EXPECT_EQ(all.torsion_free, right_perp(checker.table(), ArcSet::full(checker.size())));

    try {
        checker.torsion_pair(set_of(checker, {arc(p, 1, 5), arc(p, 4, 8)}));
        FAIL() << "expected rejection";
    } catch (const PreconditionViolation &e) {
        EXPECT_NE(std::string(e.what()).find("1-8"), std::string::npos);
    }
}

TEST(PtolemySmall, TorsionPairsOnEveryDiagram) {
    auto p = ModelParams::make(3, 1);
    PtolemyChecker checker(p);
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        ArcSet s = ArcSet::from_bits(9, bits);
        if (!checker.is_ptolemy(s)) continue;
        EXPECT_NO_THROW(checker.torsion_pair(s));
    }
}

TEST(PtolemySmall, ExhaustiveEnumeration) {
    auto p = ModelParams::make(3, 1);
    PtolemyChecker checker(p);
    std::vector<ArcSet> seen;
    auto result = enumerate_ptolemy(checker, Exhaustive{}, [&](const ArcSet &s) {
        seen.push_back(s);
        return true;
    });
    EXPECT_TRUE(result.exact);
    EXPECT_EQ(result.count, seen.size());
    EXPECT_EQ(result.count, 82u);
    EXPECT_TRUE(seen.front().empty());
    EXPECT_EQ(seen.back(), ArcSet::full(9));

    std::vector<std::string> problems;
    mcd::testing::DoublePerpOracle oracle(mcd::testing::oracle_distances(p, &problems));
    EXPECT_TRUE(problems.empty());
    std::uint64_t fixpoints = 0;
    for (std::uint64_t bits = 0; bits < 512; ++bits) fixpoints += oracle.is_fixpoint(ArcSet::from_bits(9, bits));
    EXPECT_EQ(result.count, fixpoints);
}

TEST(PtolemySmall, ThreadedEnumerationMatches) {
    PtolemyChecker checker(ModelParams::make(4, 1));
    std::vector<ArcSet> serial, threaded;
    auto a = enumerate_ptolemy(checker, Exhaustive{20, 1}, [&](const ArcSet &s) {
        serial.push_back(s);
        return true;
    });
    auto b = enumerate_ptolemy(checker, Exhaustive{20, 4}, [&](const ArcSet &s) {
        threaded.push_back(s);
        return true;
    });
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(serial, threaded);
    EXPECT_EQ(a.count, 500u);
}

TEST(PtolemySmall, EnumerationStrategies) {
    PtolemyChecker checker(ModelParams::make(4, 3));
    EXPECT_THROW(enumerate_ptolemy(checker, Exhaustive{}), PreconditionViolation);

    std::set<ArcSet> closures;
    auto c = enumerate_ptolemy(checker, ClosureGenerated{1}, [&](const ArcSet &s) {
        EXPECT_TRUE(checker.is_ptolemy(s));
        EXPECT_TRUE(closures.insert(s).second);
        return true;
    });
    EXPECT_FALSE(c.exact);
    EXPECT_EQ(c.count, closures.size());
    // The empty set plus the 40 singletons, all already Ptolemy.
    EXPECT_EQ(c.count, 41u);

    std::vector<ArcSet> first, second;
    enumerate_ptolemy(checker, RandomSample{2000, 5}, [&](const ArcSet &s) {
        first.push_back(s);
        return true;
    });
    auto r = enumerate_ptolemy(checker, RandomSample{2000, 5}, [&](const ArcSet &s) {
        second.push_back(s);
        return true;
    });
    EXPECT_EQ(first, second);
    EXPECT_FALSE(r.exact);
    for (const auto &s : first) EXPECT_TRUE(checker.is_ptolemy(s));

    std::uint64_t taken = 0;
    auto limited = enumerate_ptolemy(checker, ClosureGenerated{2}, [&](const ArcSet &) { return ++taken < 5; });
    EXPECT_EQ(limited.count, 5u);
}
