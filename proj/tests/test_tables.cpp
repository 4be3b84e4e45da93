#include <string>

#include <gtest/gtest.h>

#include "ballcover/tables.hpp"
#include "ballcover_golden.hpp"

using namespace ballcover;

namespace {

std::string text(std::string_view v) { return std::string(v); }

const TableRow* find_row(const TableResult& r, const std::string& label) {
    for (const auto& row : r.rows)
        if (row.label == label) return &row;
    return nullptr;
}

}  // namespace

TEST(Golden, Parsing) {
    const auto rows = parse_golden("# header | x\n\n a | (1^8,4), (2^6) \n b|c | d\n");
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "(1^8,4), (2^6)"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"b|c", "d"}));
    EXPECT_EQ(parse_golden(text(golden::kTable1)).size(), 12u);
    EXPECT_EQ(parse_golden(text(golden::kTable2)).size(), 14u);
    EXPECT_EQ(parse_golden(text(golden::kTable3)).size(), 40u);
    EXPECT_EQ(parse_golden(text(golden::kTable4)).size(), 10u);
}

TEST(Golden, TypesAndDmLists) {
    EXPECT_EQ(parse_type("(3,3,0)+(0,0,3)"), (PartList{{3, 3, 0}, {0, 0, 3}}));
    EXPECT_EQ(parse_type(" ( 3, 2 ) + (0,1)"), (PartList{{3, 2}, {0, 1}}));
    EXPECT_THROW(parse_type("(3,3,0)*(0,0,3)"), validation_error);
    EXPECT_THROW(parse_type(""), validation_error);
    EXPECT_TRUE(parse_dm_list("NA").empty());
    EXPECT_EQ(parse_dm_list("(1^6,2^3), (1^8,4)").size(), 2u);
    EXPECT_EQ(format_dm_list(parse_dm_list("(4,1^8),(2^6)")), "(1^8,4), (2^6)");
    EXPECT_THROW(parse_dm_list("(1^8,4"), validation_error);
    EXPECT_THROW(parse_dm_list("none"), validation_error);
}

TEST(Golden, DegenerationConfigsMatchTheText) {
    const auto rows = parse_golden(text(golden::kTable2));
    const auto configs = degeneration_configs();
    ASSERT_EQ(rows.size(), configs.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto parsed = parse_degeneration_config(rows[r][0]);
        EXPECT_EQ(parsed, configs[r]) << rows[r][0];
        EXPECT_EQ(parse_degeneration_config(parsed.str()), parsed) << parsed.str();
    }
    EXPECT_THROW(parse_degeneration_config("C_1:(3,2), C_3:(0,1)."), validation_error);
    EXPECT_THROW(parse_degeneration_config("C_1:(3,2). C_2 has one node."), validation_error);
}

TEST(Tables, SurfaceTableMatches) {
    const auto r = compare_table(1, text(golden::kTable1));
    EXPECT_TRUE(r.identical());
    EXPECT_EQ(r.rows.size(), 12u);
    EXPECT_EQ(derive_table1().size(), 12u);
}

TEST(Tables, DegenerationTableMatches) {
    const auto r = compare_table(2, text(golden::kTable2));
    EXPECT_TRUE(r.identical());
    EXPECT_EQ(r.count(RowStatus::Match), 14u);
}

TEST(Tables, FourfoldTableMatches) {
    const auto r = compare_table(4, text(golden::kTable4));
    EXPECT_TRUE(r.identical());
    EXPECT_EQ(r.count(RowStatus::Match), 10u);
}

TEST(Tables, ThreefoldTableDifferences) {
    const auto r = compare_table(3, text(golden::kTable3));
    EXPECT_FALSE(r.identical());
    EXPECT_EQ(r.count(RowStatus::Match), 39u);
    EXPECT_EQ(r.count(RowStatus::Mismatch), 1u);
    EXPECT_EQ(r.count(RowStatus::Missing), 0u);
    EXPECT_EQ(r.count(RowStatus::Extra), 2u);
    const TableRow* row25 = find_row(r, "25");
    ASSERT_NE(row25, nullptr);
    EXPECT_EQ(row25->status, RowStatus::Mismatch);
    EXPECT_EQ(row25->cells[3], "(1^4,2^2,4)");
    ASSERT_NE(find_row(r, "+1"), nullptr);
    ASSERT_NE(find_row(r, "+2"), nullptr);
    for (const char* label : {"+1", "+2"}) EXPECT_EQ(find_row(r, label)->cells[2], "4");
}

TEST(Tables, DerivedRowsAreConsistent) {
    for (const auto& row : derive_table3()) {
        EXPECT_TRUE(is_ball_type(row.type));
        for (const auto& w : row.weights) EXPECT_EQ(static_cast<std::int64_t>(w.points()) - 3, row.dimension);
    }
    for (const auto& row : derive_table4()) EXPECT_FALSE(is_half_twist(row.type).has_value());
    for (const auto& row : derive_table2()) {
        EXPECT_EQ(row.p1.sum(), kDMWeightTotal);
        EXPECT_EQ(row.p2.sum(), kDMWeightTotal);
    }
    EXPECT_THROW(compare_table(5, ""), validation_error);
}

TEST(Tables, CommensurabilityOfTheDerivedData) {
    const auto classes = commensurable_weight_classes(derived_dm_entries());
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    std::set<DMWeights> distinct;
    for (const auto& e : derived_dm_entries())
        for (const auto& w : e.weights) distinct.insert(w);
    EXPECT_EQ(total, distinct.size());
    // The two projections of each surface row always land in one class.
    for (const auto& row : derive_table1()) {
        bool together = false;
        for (const auto& c : classes)
            together = together || (std::find(c.begin(), c.end(), row.p1) != c.end() &&
                                    std::find(c.begin(), c.end(), row.p2) != c.end());
        EXPECT_TRUE(together) << row.type.str();
    }
}
