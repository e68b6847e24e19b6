#include "vertalign/alignment.hpp"
#include "vertalign/curves.hpp"
#include "vertalign/json_io.hpp"
#include "vertalign/report_format.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace vertalign;

TEST(Json, IdentityReportRoundTripsExactly)
{
    for (std::int64_t n = 2; n <= 70; ++n)
        for (std::int64_t i = 1; i < n; ++i) {
            const auto rep = identity_sum(n, i);
            const std::string text = json(rep).dump();
            const auto back = json::parse(text).get<IdentityReport>();
            ASSERT_EQ(back, rep) << n << " " << i;
            ASSERT_EQ(json(back).dump(), text);
        }
}

TEST(Json, ExactValuesAreStrings)
{
    const json j = identity_sum(11, 3);
    EXPECT_EQ(j.at("terms").at(3).at("signed_coefficient"), "-77");
    EXPECT_EQ(j.at("total"), "0");
    EXPECT_EQ(j.at("holds"), true);

    // Values beyond 64 bits survive untouched.
    const json big = identity_sum(140, 70);
    const auto back = big.get<IdentityReport>();
    EXPECT_EQ(back.terms.front().binomial_value, binomial(140, 70));
    EXPECT_EQ(big.at("terms").at(0).at("binomial_value"), binomial(140, 70).to_string());
}

TEST(Json, CurveAndMorphismShapes)
{
    const auto s = make_ring(6, 1);
    const json t = build_target(s, 0);
    EXPECT_EQ(t.at("equation"), "y^2 = x^6 - 6*x^4 + 9*x^2 - 2");
    EXPECT_EQ(t.at("role"), "target");
    EXPECT_EQ(t.at("i"), 0);
    EXPECT_EQ(t.at("coefficients").at(3).at("value"), "-2");
    EXPECT_EQ(t.at("coefficients").at(3).at("x_exp"), 0);

    const json src = build_source(s);
    EXPECT_TRUE(src.at("i").is_null());

    const json m = verify_morphism(s, 1);
    EXPECT_EQ(m.at("holds"), true);
    EXPECT_EQ(m.at("residual"), "0");
    EXPECT_EQ(m.at("c"), "1");
}

TEST(Render, FailingReportSaysFails)
{
    auto rep = identity_sum(5, 2);
    rep.terms[0].product += ExactInt(1);
    rep.total = ExactInt(1);
    rep.holds = false;
    const auto text = render_text(rep);
    EXPECT_NE(text.find("total = 1\n"), std::string::npos);
    EXPECT_NE(text.find("FAILS"), std::string::npos);
    EXPECT_EQ(text.find("holds"), std::string::npos);

    SweepSummary s{10, 45, {{7, 3, ExactInt(2)}}};
    EXPECT_NE(render_text(s).find("FAIL n = 7, i = 3: total = 2"), std::string::npos);
    EXPECT_EQ(json(s).at("holds"), false);
}

TEST(Render, IdentityTextIsStable)
{
    const std::string expected = "identity n = 5, i = 2\n"
                                 "k  (-1)^k T(n,k)  C(n-2k,i-k)  product\n"
                                 "0              1           10       10\n"
                                 "1             -5            3      -15\n"
                                 "2              5            1        5\n"
                                 "total = 0\n"
                                 "holds\n";
    EXPECT_EQ(render_text(identity_sum(5, 2)), expected);
    EXPECT_EQ(render_csv(identity_sum(5, 2)), "k,signed_coefficient,binomial_value,product\n0,1,10,10\n1,-5,3,-15\n2,5,1,5\n");
}

TEST(Render, TriangleLayout)
{
    EXPECT_EQ(render_triangle_text(2), "    1\n  1   1\n1   2   1\n");
    // Entry C(n-2k, i-k) shares a column with C(n, i).
    const std::string t = render_triangle_text(4);
    EXPECT_EQ(t, "        1\n      1   1\n    1   2   1\n  1   3   3   1\n1   4   6   4   1\n");
    const std::string wide = render_triangle_text(kCenteredTriangleRows + 1);
    EXPECT_EQ(wide.substr(0, 8), "0: 1\n1: ");
    EXPECT_EQ(render_triangle_csv(1), "n,i,value\n0,0,1\n1,0,1\n1,1,1\n");
}

TEST(Render, AlignedColumnText)
{
    const std::string t = render_text(aligned_entries(11, 3));
    EXPECT_NE(t.find("165"), std::string::npos);
    EXPECT_EQ(render_csv(aligned_entries(11, 3)), "k,row,index,value\n0,11,3,165\n1,9,2,36\n2,7,1,7\n3,5,0,1\n");
}
