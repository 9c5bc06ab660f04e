#include <gtest/gtest.h>

#include "ado/catalog.hpp"
#include "ado/regress.hpp"
#include "ado/tables.hpp"

using namespace ado;

TEST(Braid, ParseAndComponents) {
    const BraidWord b = BraidWord::parse("1,-2, 1", 3);
    EXPECT_EQ(b.letters, (std::vector<int>{1, -2, 1}));
    EXPECT_EQ(b.writhe(), 1);
    EXPECT_EQ(BraidWord::parse("1 -2 1", 3), b);
    EXPECT_EQ(BraidWord::parse(b.to_string(), 3), b);
    EXPECT_EQ(BraidWord(2, {1, 1}).components(), 2);
    EXPECT_EQ(BraidWord(3, {1, 2}).components(), 1);
    EXPECT_EQ(BraidWord(3, {}).components(), 3);
    EXPECT_THROW((void)BraidWord::parse("1,3", 3), Error);
    EXPECT_THROW((void)BraidWord::parse("1,x", 3), Error);
    EXPECT_THROW((void)BraidWord::parse("0", 3), Error);
}

TEST(Catalog, ShippedCatalogLoadsAndValidates) {
    const auto cat = load_catalog(ADO_TEST_CATALOG);
    EXPECT_GE(cat.size(), 30u);
    for (const auto& r : cat) EXPECT_EQ(r.braid.components(), r.components) << r.name;
    for (const auto& row : table1()) EXPECT_NO_THROW((void)find_record(cat, row.name));
    for (const auto& row : table2()) EXPECT_NO_THROW((void)find_record(cat, row.name));
}

TEST(Catalog, RejectsComponentMismatchWithLineNumber) {
    const std::string text =
        "{\"name\": \"a\", \"braid\": [1, 1, 1], \"strands\": 2, \"components\": 1}\n"
        "\n"
        "{\"name\": \"b\", \"braid\": [1, 1], \"strands\": 2, \"components\": 1}\n";
    try {
        (void)parse_catalog(text);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::RecordInvalid);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(Catalog, RejectsMalformedRecords) {
    EXPECT_THROW((void)parse_catalog("{not json}\n"), Error);
    EXPECT_THROW((void)parse_catalog("{\"name\": \"x\", \"braid\": [3], \"strands\": 2, \"components\": 1}\n"), Error);
    EXPECT_THROW((void)parse_catalog("{\"braid\": [1], \"strands\": 2, \"components\": 1}\n"), Error);
    EXPECT_THROW((void)find_record({}, "3_1"), Error);
}

TEST(Catalog, UnknownFieldsIgnoredAndRoundTrip) {
    const auto cat = parse_catalog(
        "{\"name\": \"t\", \"braid\": [1, 1, 1], \"strands\": 2, \"components\": 1, \"genus\": 1, \"colour\": \"red\"}\n");
    ASSERT_EQ(cat.size(), 1u);
    const KnotRecord back = record_from_json(record_to_json(cat[0]));
    EXPECT_EQ(back.name, "t");
    EXPECT_EQ(back.braid, cat[0].braid);
    EXPECT_EQ(back.genus, 1);
    EXPECT_FALSE(back.fibered.has_value());
}

TEST(Json, CycloNumRoundTrip) {
    const RingCtx& ring = RingCtx::get(5);
    const CycloNum x = q_pow(ring, 3) * mpq_class(-7, 3) + zeta_pow(ring, 1);
    EXPECT_EQ(cyclo_from_json(to_json(x), ring), x);
}

TEST(Json, ResultRoundTrip) {
    for (int p : {2, 3, 4}) {
        for (const BraidWord& b : {BraidWord(3, {1, -2, 1, -2}), BraidWord(2, {1, 1}), BraidWord(2, {1, 1, 1, 1})}) {
            const AdoResult r = compute_ado(p, b);
            const AdoResult back = result_from_json(json::parse(to_json(r).dump()));
            EXPECT_EQ(back.poly, r.poly);
            EXPECT_EQ(back.p, r.p);
            EXPECT_EQ(back.braid, r.braid);
            EXPECT_EQ(back.writhe, r.writhe);
            EXPECT_EQ(back.components, r.components);
            EXPECT_EQ(back.checks.symmetric, r.checks.symmetric);
            EXPECT_EQ(back.checks.integral, r.checks.integral);
        }
    }
}

TEST(Format, PositivePartStyle) {
    const AdoResult r = compute_ado(4, BraidWord(2, {1, 1, 1}));
    EXPECT_EQ(pretty_positive(r.poly), "(1+2i)+(1+i)x+ix^2+ix^3");
    EXPECT_EQ(format_coeff(gaussian(RingCtx::get(4), -2, 1)), "-2+i");
    EXPECT_EQ(format_top_term(gaussian(RingCtx::get(4), 0, 3), 12), "(3i)x^6");
}

TEST(Tables, EmbeddedRowsAreWellFormed) {
    EXPECT_EQ(table1().size(), 14u);
    EXPECT_EQ(table2().size(), 13u);
    for (const auto& row : table1()) {
        const AdoPoly f = table1_poly(row);
        EXPECT_TRUE(is_symmetric(f)) << row.name;
        EXPECT_TRUE(all_coefficients_in_Zq2(f)) << row.name;
    }
}

TEST(Regress, TableOneSubset) {
    const auto cat = load_catalog(ADO_TEST_CATALOG);
    const auto lines = regress_table1(cat, {"3_1", "4_1", "5_2"}, 1);
    ASSERT_EQ(lines.size(), 3u);
    for (const auto& l : lines) EXPECT_TRUE(l.match) << l.knot << " got " << l.got << " expected " << l.expected;
    EXPECT_EQ(lines[0].knot, "3_1");
}
