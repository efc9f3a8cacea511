#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "mcd/error.hpp"
#include "mcd/quiver.hpp"

using namespace mcd;

namespace {

std::set<std::pair<std::string, std::string>> labelled_arrows(const TranslationQuiver &q) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto &[a, b] : q.arrows()) out.emplace(q.labels()[a], q.labels()[b]);
    return out;
}

// The AR-quiver of the 2-cluster category of type D_4 drawn on the 14-gon:
// each centre arc fans out to the two diameters at its start and one short
// arc, which all meet again at the next centre arc.
std::set<std::pair<std::string, std::string>> delta_4_2_fixture() {
    const std::vector<std::tuple<std::string, std::string, std::string, std::string>> columns = {
        {"1-6", "1", "3-6", "3-8"},   {"3-8", "3", "5-8", "5-10"}, {"5-10", "5", "7-10", "7-12"},
        {"7-12", "7", "2-5", "2-7"},  {"2-7", "2", "4-7", "4-9"},  {"4-9", "4", "6-9", "6-11"},
        {"6-11", "6", "1-4", "1-6"},
    };
    std::set<std::pair<std::string, std::string>> arrows;
    for (const auto &[from, base, shortarc, to] : columns) {
        for (const std::string mid : {"d" + base + "r", "d" + base + "g", shortarc}) {
            arrows.emplace(from, mid);
            arrows.emplace(mid, to);
        }
    }
    return arrows;
}

}  // namespace

TEST(BuildGamma, VertexCounts) {
    EXPECT_EQ(build_gamma(ModelParams::make(4, 2)).vertex_count(), 28u);
    EXPECT_EQ(build_gamma(ModelParams::make(3, 1)).vertex_count(), 9u);
}

TEST(BuildGamma, KnownArrows) {
    auto q = build_gamma(ModelParams::make(4, 2));
    auto arrows = labelled_arrows(q);
    EXPECT_TRUE(arrows.count({"D1-6", "D1+"}));
    EXPECT_TRUE(arrows.count({"D1-6", "D1-"}));
    EXPECT_TRUE(arrows.count({"D1-6", "D3-6"}));
    EXPECT_TRUE(arrows.count({"D1+", "D3-1"}));
    EXPECT_TRUE(arrows.count({"D3-6", "D3-1"}));
}

TEST(BuildDelta, Examples) {
    auto q = build_delta(ModelParams::make(4, 2));
    EXPECT_EQ(q.vertex_count(), 28u);
    auto arrows = labelled_arrows(q);
    EXPECT_TRUE(arrows.count({"1-6", "d1r"}));
    EXPECT_TRUE(arrows.count({"d1g", "3-8"}));
    EXPECT_EQ(build_delta(ModelParams::make(4, 3)).vertex_count(), 40u);
}

TEST(BuildDelta, MatchesArQuiverFixture) {
    auto q = build_delta(ModelParams::make(4, 2));
    auto fixture = delta_4_2_fixture();
    EXPECT_EQ(fixture.size(), 42u);
    std::set<std::string> fixture_vertices;
    for (const auto &[a, b] : fixture) {
        fixture_vertices.insert(a);
        fixture_vertices.insert(b);
    }
    EXPECT_EQ(fixture_vertices, std::set<std::string>(q.labels().begin(), q.labels().end()));
    EXPECT_EQ(labelled_arrows(q), fixture);
}

TEST(TranslationQuiver, TranslationIsPermutation) {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 1; m <= 3; ++m) {
            auto p = ModelParams::make(n, m);
            for (const auto &q : {build_gamma(p), build_delta(p)}) {
                std::set<std::size_t> image(q.translation().begin(), q.translation().end());
                EXPECT_EQ(image.size(), q.vertex_count());
            }
        }
    }
}

TEST(TranslationQuiver, RejectsBadInput) {
    EXPECT_THROW(TranslationQuiver({"a", "b"}, {{0, 2}}, {0, 1}), InvalidParameters);
    EXPECT_THROW(TranslationQuiver({"a", "b"}, {}, {0, 0}), InvalidParameters);
    TranslationQuiver q({"a", "b"}, {{0, 1}, {0, 1}}, {1, 0});
    EXPECT_EQ(q.arrows().size(), 1u);
}

TEST(VerifyIso, HoldsOnGrid) {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 1; m <= 3; ++m) {
            auto report = verify_translation_iso(ModelParams::make(n, m));
            EXPECT_TRUE(report.isomorphic) << n << "," << m << ": " << report.counterexample;
            EXPECT_EQ(report.mapping.size(), static_cast<std::size_t>(n * (m * n - m + 1)));
        }
    }
}

TEST(VerifyIso, DeltaConnected) {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 1; m <= 3; ++m) EXPECT_TRUE(build_delta(ModelParams::make(n, m)).is_connected());
    }
}

TEST(Export, MinimalDocuments) {
    TranslationQuiver q({"x"}, {}, {0});
    auto doc = nlohmann::json::parse(export_quiver(q, QuiverFormat::Json));
    EXPECT_EQ(doc["vertices"].size(), 1u);
    EXPECT_TRUE(doc["arrows"].empty());
    EXPECT_EQ(doc["translation"][0], 0);
    auto dot = export_quiver(q, QuiverFormat::Dot);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("style=dashed"), std::string::npos);
}

TEST(Export, JsonRoundTrip) {
    auto q = build_delta(ModelParams::make(3, 1));
    auto doc = nlohmann::json::parse(export_quiver(q, QuiverFormat::Json));
    EXPECT_EQ(doc["vertices"].size(), 9u);
    EXPECT_EQ(doc["arrows"].size(), q.arrows().size());
    EXPECT_EQ(doc["vertices"][0], "1-3");
}

TEST(Export, Deterministic) {
    auto p = ModelParams::make(4, 3);
    EXPECT_EQ(export_quiver(build_delta(p), QuiverFormat::Dot), export_quiver(build_delta(p), QuiverFormat::Dot));
    EXPECT_EQ(export_quiver(build_gamma(p), QuiverFormat::Json), export_quiver(build_gamma(p), QuiverFormat::Json));
}
