#include <gtest/gtest.h>

#include "sqcycles/errors.hpp"
#include "sqcycles/fixtures.hpp"

using namespace sqcycles;

TEST(Fixtures, AllEmbeddedTablesLoad) {
    const std::vector<std::string> expected{"composite-L", "fermat", "golden-cycles", "prime-L",
                                            "prime-power-L", "prime-square-L", "ratio-classes"};
    EXPECT_EQ(fixture_names(), expected);
    EXPECT_EQ(fixture("prime-L").rows.size(), 39u);
    EXPECT_EQ(fixture("prime-square-L").rows.size(), 39u);
    EXPECT_EQ(fixture("composite-L").rows.size(), 35u);
    EXPECT_EQ(fixture("ratio-classes").rows.size(), 17u);
    EXPECT_EQ(fixture("ratio-classes").limit, 360u);
    EXPECT_EQ(fixture("golden-cycles").kind, FixtureKind::cycle);
    for (const auto& name : fixture_names())
        for (const auto& row : fixture(name).rows) EXPECT_FALSE(row.provenance.empty());
    EXPECT_THROW(fixture("no-such-table"), InvalidArgument);
}

TEST(Fixtures, ProductsAreKeptAsPrinted) {
    const auto& fx = fixture("prime-power-L");
    auto it = std::find_if(fx.rows.begin(), fx.rows.end(), [](const FixtureRow& r) { return r.input == 14641; });
    ASSERT_NE(it, fx.rows.end());
    EXPECT_EQ(it->expected_text, "220*11");
    EXPECT_EQ(it->expected_value(), 2420u);
}

TEST(Fixtures, WitnessParsed) {
    const auto& fx = fixture("fermat");
    const auto& last = fx.rows.back();
    EXPECT_EQ(last.input, 4295098369u);
    EXPECT_EQ(last.witness, 65536u);
}

TEST(ParseFixture, RejectsMalformedInput) {
    auto parse = [](std::string_view text) { return parse_fixture(text, "inline"); };
    EXPECT_NO_THROW(parse("@name t\n@kind l-value\n7 | 2 | note\n"));
    try {
        parse("@name t\n@kind l-value\n7 | 2 | note\n7 | 2 | again\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
    EXPECT_THROW(parse("@name t\n@kind l-value\n7 | x | note\n"), ParseError);
    EXPECT_THROW(parse("@name t\n@kind l-value\n7 | 2\n"), ParseError);
    EXPECT_THROW(parse("@name t\n@kind l-value\n7 | 2 |   \n"), ParseError);
    EXPECT_THROW(parse("@name t\n@kind wat\n"), ParseError);
    EXPECT_THROW(parse("@kind l-value\n"), ParseError);
    EXPECT_THROW(parse("@name t\n7 | 2 | note\n"), ParseError);
    EXPECT_THROW(parse("@name t\n@kind l-value\n7 | 2 | note | witness\n"), ParseError);
    // Two cycles under one modulus are distinct rows.
    EXPECT_NO_THROW(parse("@name t\n@kind cycle\n99 | 22 88 | a\n99 | 70 49 25 31 | b\n"));
}
