#include <sbo/classical.hpp>
#include <sbo/units.hpp>

#include <gtest/gtest.h>

using namespace sbo;

namespace
{

Rational q(long a, long b = 1) { return Rational(a, b); }

AlphaScalar ap(long k) { return alpha() + AlphaScalar(q(k)); }

} // namespace

TEST(Hermite, WorkedValues)
{
    EXPECT_EQ(hermite(0), QPoly(1));
    EXPECT_EQ(hermite(2), QPoly(std::vector<Rational>{q(-2), q(0), q(4)}));
    EXPECT_EQ(eval(hermite(4), q(0)), q(12));
    for (long n = 0; n <= 8; ++n)
        EXPECT_EQ(eval(hermite(2 * n), q(0)), sign_pow(n) * pow2(2 * n) * pochhammer(q(1, 2), n));
}

TEST(Hermite, RecurrenceAndExplicitSumAgree)
{
    for (long n = 0; n <= 20; ++n) {
        EXPECT_EQ(hermite(n), detail::hermite_explicit(n)) << n;
        EXPECT_TRUE(hermite_monic(n).is_monic());
        EXPECT_EQ(parity(hermite(n)), n % 2 == 0 ? Parity::even : Parity::odd);
        if (n >= 1) {
            EXPECT_EQ(derivative(hermite(n)), hermite(n - 1) * q(2 * n));
        }
    }
}

TEST(Laguerre, WorkedValues)
{
    EXPECT_EQ(laguerre(0), APoly(AlphaScalar(q(1))));
    EXPECT_EQ(laguerre(1), APoly(ap(1)) - APoly::x());
    for (long n = 0; n <= 10; ++n)
        EXPECT_EQ(eval(laguerre(n), q(0)), pochhammer(ap(1), n) / factorial(n));
}

TEST(Laguerre, RecurrenceAndExplicitSumAgree)
{
    for (long n = 0; n <= 14; ++n) {
        EXPECT_EQ(laguerre(n), detail::laguerre_explicit(n)) << n;
        EXPECT_TRUE(laguerre_monic(n).is_monic());
    }
}

TEST(Connection, WorkedRows)
{
    const auto h = hermite_connection(0, 1);
    EXPECT_EQ(h.from_monomial[0][1] * q(4), q(2));
    EXPECT_EQ(h.from_monomial[1][1] * q(4), q(1));
    EXPECT_EQ(h.from_monomial[0][0], q(1));
    const auto l = laguerre_connection(1);
    EXPECT_EQ(l.from_monomial[0][1], ap(1));
    EXPECT_EQ(l.from_monomial[1][1], AlphaScalar(q(-1)));
}

TEST(Connection, MatricesAreMutualInverses)
{
    for (int p = 0; p <= 1; ++p) {
        const auto h = hermite_connection(p, 10);
        EXPECT_EQ(matmul(h.to_monomial, h.from_monomial), identity_matrix<Rational>(11));
        for (long n = 0; n <= 10; ++n)
            for (long m = 0; m <= n; ++m)
                EXPECT_EQ(h.to_monomial[m][n], hermite(2 * n + p).coeff(2 * m + p));
    }
    const auto l = laguerre_connection(8);
    EXPECT_EQ(matmul(l.to_monomial, l.from_monomial), identity_matrix<AlphaScalar>(9));
    for (long n = 0; n <= 8; ++n)
        for (long m = 0; m <= n; ++m)
            EXPECT_EQ(l.to_monomial[m][n], laguerre(n).coeff(m));
}

TEST(Bridge, HermiteFromLaguerreAtHalfIntegers)
{
    for (long n = 0; n <= 8; ++n) {
        EXPECT_EQ(hermite_monic(2 * n), compose_square(eval_alpha(laguerre_monic(n), q(-1, 2)))) << n;
        EXPECT_EQ(hermite_monic(2 * n + 1), QPoly::x() * compose_square(eval_alpha(laguerre_monic(n), q(1, 2))))
            << n;
    }
    // Degree 2: x^2 - 1/2 from x - 1/2 with x -> x^2.
    EXPECT_EQ(hermite_monic(2), QPoly(std::vector<Rational>{q(-1, 2), q(0), q(1)}));
}

TEST(GeneratingFunction, CoefficientsAreTheClassicalPolynomials)
{
    const auto hs = hermite_generating_series(12);
    EXPECT_EQ(hs[0], QPoly(1));
    EXPECT_EQ(hs[2] * factorial(2), hermite(2));
    for (long n = 0; n <= 12; ++n)
        EXPECT_EQ(hs[n] * factorial(n), hermite(n)) << n;
    const auto ls = laguerre_generating_series(10);
    EXPECT_EQ(ls[1], laguerre(1));
    for (long n = 0; n <= 10; ++n)
        EXPECT_EQ(ls[n], laguerre(n)) << n;
}

TEST(Orthogonality, HermiteUnderUnitGaussian)
{
    const long N = 10;
    const auto ms = gaussian_moments(q(1), 2 * N + 2);
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= N; ++n) {
            const auto ip = to_base_gaussian(inner_product(hermite(m), hermite(n), ms));
            EXPECT_EQ(ip.value, m == n ? pow2(n) * factorial(n) : q(0)) << m << "," << n;
        }
}

TEST(Orthogonality, LaguerreUnderGammaWeight)
{
    const long N = 8;
    const auto ms = gamma_moments(alpha(), q(1), 2 * N + 2);
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= N; ++n)
            EXPECT_EQ(inner_product(laguerre(m), laguerre(n), ms).value,
                      m == n ? pochhammer(ap(1), n) / factorial(n) : AlphaScalar(q(0)));
}

TEST(Classical, FullReportPasses)
{
    const Report r = verify_classical_identities(16);
    for (const auto& e : r.entries())
        EXPECT_NE(e.status, CheckStatus::fail) << e.id;
}
