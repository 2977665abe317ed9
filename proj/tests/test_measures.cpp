#include <sbo/classical.hpp>
#include <sbo/measures.hpp>
#include <sbo/units.hpp>

#include <gtest/gtest.h>

using namespace sbo;

namespace
{

Rational q(long a, long b = 1) { return Rational(a, b); }

AlphaScalar ap(long k) { return alpha() + AlphaScalar(q(k)); }

} // namespace

TEST(HermiteGamma, UnitGaussianIsTheClassicalNorm)
{
    for (long j = 0; j <= 6; ++j)
        for (long k = 0; k <= 6; ++k) {
            const auto g = hermite_gamma(2 * j, 2 * k, q(1));
            EXPECT_EQ(g.unit, Unit::gaussian(q(1)));
            EXPECT_EQ(g.value, j == k ? pow2(2 * j) * factorial(2 * j) : q(0));
        }
}

TEST(HermiteGamma, WorkedValues)
{
    const auto g00 = hermite_gamma(0, 0, q(2));
    EXPECT_EQ(g00.value, q(1));
    EXPECT_EQ(g00.unit, Unit::gaussian(q(2)));
    EXPECT_EQ(hermite_gamma(1, 2, q(2)).value, q(0));
    EXPECT_EQ(hermite_gamma(3, 0, q(5, 2)).value, q(0));
    EXPECT_THROW(hermite_gamma(0, 0, q(0)), std::domain_error);
}

TEST(HermiteGamma, AgreesWithMomentIntegration)
{
    for (const Rational& mu : {q(1), q(2), q(3), q(1, 2)}) {
        const auto ms = gaussian_moments(mu, 30);
        for (long j = 0; j <= 12; ++j)
            for (long k = 0; k <= 12; ++k) {
                const auto closed = to_base_gaussian(hermite_gamma(j, k, mu));
                EXPECT_EQ(closed, inner_product(hermite(j), hermite(k), ms)) << j << "," << k << " mu=" << mu.str();
            }
    }
}

TEST(LaguerreGamma, WorkedValues)
{
    for (long n = 0; n <= 6; ++n)
        EXPECT_EQ(laguerre_gamma(n, n, q(1)).value, pochhammer(ap(1), n) / factorial(n));
    EXPECT_EQ(laguerre_gamma(1, 3, q(1)).value, AlphaScalar(q(0)));
    EXPECT_EQ(laguerre_gamma(0, 0, q(2)).value, AlphaScalar(q(1)));
    EXPECT_EQ(laguerre_gamma(1, 1, q(2)).value, ap(1) * ap(2) * q(1, 4));
}

TEST(LaguerreGamma, AgreesWithMomentIntegration)
{
    for (const Rational& mu : {q(1), q(2), q(3)}) {
        const auto ms = gamma_moments(alpha(), mu, 24);
        for (long j = 0; j <= 8; ++j)
            for (long k = 0; k <= 8; ++k)
                EXPECT_EQ(laguerre_gamma(j, k, mu), inner_product(laguerre(j), laguerre(k), ms));
    }
}

TEST(Units, MismatchedUnitsRefuseToCompare)
{
    const auto even = hermite_gamma(0, 0, q(2));
    const auto odd = hermite_gamma(1, 1, q(2));
    EXPECT_THROW((void)(even == odd), UnitMismatchError);
    EXPECT_THROW((void)(even + hermite_gamma(0, 0, q(3))), UnitMismatchError);
    EXPECT_NO_THROW((void)(even == to_base_gaussian(odd)));
}

TEST(Gram, SymmetricAndPositiveDefinite)
{
    for (const Rational& mu : {q(1), q(2), q(3), q(1, 3)}) {
        const auto g = hermite_gram(9, mu);
        for (std::size_t j = 0; j < g.size(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k)
                EXPECT_EQ(g.entries[j][k], g.entries[k][j]);
        EXPECT_TRUE(leading_minors_positive(g.entries)) << mu.str();
    }
    const auto l = laguerre_gram(7, q(2));
    for (const Rational& a0 : {q(-1, 2), q(0), q(3, 2), q(7)})
        EXPECT_TRUE(leading_minors_positive(eval_alpha(l, a0).entries)) << a0.str();
}

TEST(ZQuantity, BoundaryAndSmallCases)
{
    EXPECT_EQ(z_quantity_hermite(0, 2, 1).value, q(1));
    EXPECT_EQ(z_quantity_laguerre(3, 2).value, AlphaScalar(q(1)));
    EXPECT_EQ(z_quantity_laguerre(0, 0).value, AlphaScalar(q(1)));
    const auto b = hermite_parity_block(0, 0, 1);
    EXPECT_EQ(z_quantity_hermite(0, 0, 1).value, b.entries[0][0] * b.entries[1][1] - b.entries[0][1] * b.entries[1][0]);
    for (int p = 0; p <= 1; ++p)
        for (long i = 0; i <= 3; ++i)
            for (long n = i; n <= i + 4; ++n)
                EXPECT_GT(z_quantity_hermite(p, i, n).value.sign(), 0);
}

TEST(GeneratingFunction, GramEntriesToOrderTwelve)
{
    const Report r = generating_function_gamma_check(12, {q(1), q(2), q(3), q(1, 2)});
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.instance_count(), 0u);
}

TEST(Measures, FullReportPasses)
{
    const Report r = verify_measures(8);
    for (const auto& e : r.entries())
        EXPECT_NE(e.status, CheckStatus::fail) << e.id;
}
