#include <sbo/classical.hpp>
#include <sbo/format.hpp>
#include <sbo/sbo_hermite.hpp>
#include <sbo/sbo_laguerre.hpp>

#include <gtest/gtest.h>

using namespace sbo;

namespace
{

Rational q(long a, long b = 1) { return Rational(a, b); }

PolySerialization hermite_case(long i, long n)
{
    return {PolyFamily::hermite_sbo, i, n, std::nullopt, sbo_h_closed(i, n)};
}

PolySerialization laguerre_case(long i, long n, std::optional<Rational> a0)
{
    PolySerialization s{PolyFamily::laguerre_sbo, i, n, a0 ? a0->str() : "symbolic", QPoly()};
    if (a0)
        s.poly = eval_alpha(sbo_l_closed(i, n), *a0);
    else
        s.poly = sbo_l_closed(i, n);
    return s;
}

} // namespace

TEST(Format, FamilyNames)
{
    for (PolyFamily f : {PolyFamily::hermite_sbo, PolyFamily::laguerre_sbo, PolyFamily::hermite, PolyFamily::laguerre})
        EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_THROW(parse_family("jacobi"), std::invalid_argument);
    EXPECT_TRUE(is_sbo(PolyFamily::laguerre_sbo));
    EXPECT_FALSE(is_sbo(PolyFamily::hermite));
    EXPECT_TRUE(is_laguerre(PolyFamily::laguerre));
}

TEST(Format, PrettyOverRationals)
{
    EXPECT_EQ(pretty(sbo_h_closed(1, 4)), "x^4 - 7/4 x^2 + 1/8");
    EXPECT_EQ(pretty(sbo_h_closed(1, 6)), "x^6 - 4x^4 + 47/16 x^2 - 11/32");
    EXPECT_EQ(pretty(sbo_h_closed(0, 1)), "x");
    EXPECT_EQ(pretty(sbo_h_closed(0, 0)), "1");
    EXPECT_EQ(pretty(QPoly()), "0");
    EXPECT_EQ(pretty(hermite(2)), "4x^2 - 2");
    EXPECT_EQ(pretty(QPoly(std::vector<Rational>{q(-1), q(-1)})), "-x - 1");
}

TEST(Format, PrettyOverAlpha)
{
    EXPECT_EQ(pretty(sbo_l_closed(0, 1)), "x - (α+1)/2");
    EXPECT_EQ(pretty(sbo_l_closed(1, 1)), "x - (α+1)");
    EXPECT_EQ(pretty(sbo_l_closed(0, 2)), "x^2 - (α+2) x + (α^2+3α+2)/4");
    EXPECT_EQ(pretty(sbo_l_closed(0, 3)).rfind("x^3 - 3(α+3)/2 x^2 + ", 0), 0u);
    EXPECT_EQ(pretty(alpha() * q(3, 2)), "3α/2");
    EXPECT_EQ(pretty(AlphaScalar(q(-7, 4))), "-7/4");
}

TEST(Format, Latex)
{
    EXPECT_EQ(latex(sbo_h_closed(1, 4)), "x^{4} - \\frac{7}{4}\\,x^{2} + \\frac{1}{8}");
    EXPECT_EQ(latex(sbo_l_closed(0, 1)), "x - \\frac{1}{2}\\,(\\alpha+1)");
    EXPECT_EQ(latex(QPoly()), "0");
}

TEST(Format, JsonRoundTrip)
{
    const std::vector<PolySerialization> cases{hermite_case(1, 6), hermite_case(0, 0), laguerre_case(2, 5, std::nullopt),
                                               laguerre_case(1, 3, q(1, 2)),
                                               {PolyFamily::hermite, std::nullopt, 4, std::nullopt, hermite(4)}};
    for (const auto& s : cases) {
        const auto j = to_json(s);
        EXPECT_EQ(poly_from_json(nlohmann::json::parse(j.dump())), s) << j.dump();
    }
    const auto j = to_json(hermite_case(1, 4));
    EXPECT_EQ(j["family"], "hermite-sbo");
    EXPECT_EQ(j["i"], 1);
    EXPECT_TRUE(j["alpha"].is_null());
    EXPECT_EQ(j["coeffs"][0], "1/8");
    EXPECT_EQ(to_json(laguerre_case(0, 1, std::nullopt))["coeffs"][0][0], "-1/2");
}

TEST(Format, Csv)
{
    EXPECT_EQ(csv_header(), "family,i,n,alpha,degree,coeff_index,coeff");
    const auto rows = csv_rows(hermite_case(1, 2), 6);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "hermite-sbo,1,2,,2,0,-0.5");
    EXPECT_EQ(rows[2], "hermite-sbo,1,2,,2,2,1");
    EXPECT_EQ(csv_rows(laguerre_case(1, 1, q(0)))[0], "laguerre-sbo,1,1,0,1,0,-1");
    EXPECT_THROW(csv_rows(laguerre_case(1, 1, std::nullopt)), std::invalid_argument);
    EXPECT_EQ(format_float(q(1, 3), 4), "0.3333");
    EXPECT_EQ(format_float(q(-11, 32), 17), "-0.34375");
}
