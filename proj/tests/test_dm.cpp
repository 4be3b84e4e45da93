#include <algorithm>
#include <random>
#include <stdexcept>
#include <type_traits>

#include <gtest/gtest.h>

#include "ballcover/classify.hpp"
#include "ballcover/dm.hpp"
#include "ballcover/hodge.hpp"

using namespace ballcover;

namespace {

PartitionType p1(std::vector<Multidegree> parts) { return PartitionType::p1_cubic(std::move(parts)); }
DMWeights dm(const char* s) { return DMWeights::parse(s); }
using D = Degeneration;

}  // namespace

TEST(DMWeights, ParseAndFormat) {
    EXPECT_EQ(dm("(1^8,4)").weights(), (std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 4}));
    EXPECT_EQ(dm("(4, 1^8)"), dm("(1^8,4)"));
    EXPECT_EQ(dm("(4,1^8)").str(), "(1^8,4)");
    EXPECT_EQ(dm("(1,2^3,5)").str(), "(1,2^3,5)");
    EXPECT_EQ(dm("(2^6)").sum(), 12);
    EXPECT_EQ(dm("(2^6)").points(), 6u);
    EXPECT_EQ(dm("(1^4,2^2,4)").count(2), 2u);
    for (const char* bad : {"1^8,4", "(1^,4)", "(x)", "(6)", "(0^3)", "(1^0)", "(1^2x)", "()"})
        EXPECT_THROW(dm(bad), validation_error) << bad;
}

TEST(DMWeights, Merge) {
    auto w = dm("(1^8,4)");
    EXPECT_TRUE(w.merge({1, 4}, 5));
    EXPECT_EQ(w, dm("(1^7,5)"));
    EXPECT_FALSE(w.merge({2, 2}, 4));
    EXPECT_EQ(w, dm("(1^7,5)"));
}

TEST(Projections, Examples) {
    EXPECT_EQ(valid_projections(p1({{3, 3}})), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(valid_projections(p1({{3, 3, 0}, {0, 0, 3}})), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(valid_projections(p1({{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}})), (std::vector<std::size_t>{0}));
    EXPECT_TRUE(valid_projections(p1({{2, 2, 0}, {1, 0, 2}, {0, 1, 1}})).empty());
    EXPECT_THROW(classify_members(p1({{2, 2, 0}, {1, 0, 2}, {0, 1, 1}}), 0), validation_error);
}

TEST(Members, Examples) {
    const auto m = classify_members(p1({{3, 2, 0}, {0, 1, 2}, {0, 0, 1}}), 1);
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0].str(), "A(k=1,m_i=2,m_k=3)");
    EXPECT_EQ(m[1].str(), "A(k=3,m_i=1,m_k=2)");
    EXPECT_EQ(m[2].str(), "C(k=3,m_k=1)");
    const auto b = classify_members(p1({{3, 1}, {0, 2}}), 1);
    EXPECT_EQ(b[1].str(), "B(m_i=2)");
}

TEST(DeriveWeights, SurfaceExamples) {
    EXPECT_EQ(derive_weights(p1({{3, 3}}), 0), dm("(1^12)"));
    EXPECT_EQ(derive_weights(p1({{3, 2}, {0, 1}}), 0), dm("(1^6,2^3)"));
    EXPECT_EQ(derive_weights(p1({{3, 2}, {0, 1}}), 1), dm("(1^8,4)"));
    EXPECT_EQ(derive_weights(p1({{3, 1}, {0, 2}}), 0), dm("(2^6)"));
    EXPECT_EQ(derive_weights(p1({{3, 1}, {0, 2}}), 1), dm("(1^4,4^2)"));
    EXPECT_EQ(derive_weights(p1({{2, 2}, {1, 1}}), 0), dm("(1^4,2^4)"));
    EXPECT_EQ(derive_weights(p1({{3, 0}, {0, 3}}), 0), dm("(4^3)"));
}

TEST(DeriveWeights, ThreefoldExamples) {
    EXPECT_EQ(derive_weights(p1({{3, 3, 0}, {0, 0, 3}}), 0), dm("(1^12)"));
    EXPECT_EQ(derive_weights(p1({{3, 2, 0}, {0, 1, 2}, {0, 0, 1}}), 1), dm("(1^10,2)"));
    EXPECT_EQ(derive_weights(p1({{1, 3, 0, 0}, {1, 0, 3, 0}, {1, 0, 0, 3}}), 0), dm("(1^12)"));
}

TEST(DeriveWeights, SumAndDimensionInvariants) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : enumerate_ball_types(n))
            for (std::size_t i : valid_projections(c.partition)) {
                const auto w = derive_weights(c.partition, i);
                EXPECT_EQ(w.sum(), kDMWeightTotal) << c.str();
                EXPECT_EQ(static_cast<std::int64_t>(w.points()) - 3, git_dimension(c.partition))
                    << c.str() << " projection " << i + 1 << " " << w.str();
            }
}

TEST(DeriveWeights, InvariantUnderSymmetry) {
    std::mt19937 rng(12);
    for (const auto& c : enumerate_ball_types(3)) {
        const auto& t = c.partition;
        std::vector<std::size_t> perm{0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        PartList parts;
        for (const auto& p : t.parts()) parts.push_back(Multidegree{p[perm[0]], p[perm[1]], p[perm[2]]});
        std::shuffle(parts.begin(), parts.end(), rng);
        const auto u = p1(parts);
        for (std::size_t i : valid_projections(t)) {
            std::size_t j = 0;
            while (perm[j] != i) ++j;
            EXPECT_EQ(derive_weights(u, j), derive_weights(t, i)) << t.str();
        }
    }
}

TEST(Degenerations, TableExamples) {
    const auto t = p1({{3, 1}, {0, 1}, {0, 1}});
    EXPECT_EQ(apply_degenerations(t, 0, {D::tangency(0, 1)}), dm("(2^4,4)"));
    EXPECT_EQ(apply_degenerations(t, 1, {D::tangency(0, 1)}), dm("(1^3,4,5)"));
    EXPECT_EQ(apply_degenerations(t, 1, {D::tangency(0, 1), D::tangency(0, 2)}), dm("(1^2,5^2)"));
    const auto u = p1({{3, 2}, {0, 1}});
    EXPECT_EQ(apply_degenerations(u, 0, {D::node(0), D::node(0), D::node(0)}), dm("(2^6)"));
    EXPECT_EQ(apply_degenerations(u, 1, {D::node(0), D::tangency(0, 1)}), dm("(1^5,2,5)"));
    EXPECT_EQ(apply_degenerations(u, 0, {}), derive_weights(u, 0));
}

TEST(Degenerations, Errors) {
    const auto u = p1({{3, 2}, {0, 1}});
    EXPECT_THROW(apply_degenerations(u, 0, {D::node(5)}), descriptor_error);
    EXPECT_THROW(apply_degenerations(u, 0, {D::node(1)}), descriptor_error);
    EXPECT_THROW(apply_degenerations(u, 0, {D::tangency(0, 0)}), descriptor_error);
    EXPECT_THROW(apply_degenerations(p1({{3, 0}, {0, 3}}), 0, {D::node(0)}), descriptor_error);
    EXPECT_THROW(apply_degenerations(u, 0, {D::node(0), D::node(0), D::node(0), D::node(0)}), descriptor_error);
    EXPECT_THROW(apply_degenerations(p1({{3, 3, 0}, {0, 0, 3}}), 0, {}), validation_error);
    EXPECT_TRUE((std::is_base_of_v<std::invalid_argument, descriptor_error>));
}

TEST(Commensurability, Classes) {
    const std::vector<DMEntry> entries{
        {"a", {dm("(1^12)")}},
        {"b", {dm("(1^6,2^3)"), dm("(1^8,4)")}},
        {"c", {dm("(1^8,4)"), dm("(1^4,4^2)")}},
        {"d", {dm("(2^6)")}},
        {"e", {dm("(1^12)")}},
    };
    const auto labels = commensurability_classes(entries);
    EXPECT_EQ(labels, (std::vector<std::vector<std::string>>{{"a", "e"}, {"b", "c"}, {"d"}}));
    const auto weights = commensurable_weight_classes(entries);
    ASSERT_EQ(weights.size(), 3u);
    std::vector<DMWeights> joined{dm("(1^4,4^2)"), dm("(1^6,2^3)"), dm("(1^8,4)")};
    std::sort(joined.begin(), joined.end());
    EXPECT_NE(std::find(weights.begin(), weights.end(), joined), weights.end());
}
