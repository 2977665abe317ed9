#include <sbo/classical.hpp>
#include <sbo/sbo_hermite.hpp>
#include <sbo/sbo_laguerre.hpp>
#include <sbo/zeros.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace sbo;

namespace
{

Rational q(long a, long b = 1) { return Rational(a, b); }

QPoly qp(std::vector<Rational> asc) { return QPoly(std::move(asc)); }

} // namespace

TEST(Zeros, QuadraticExample)
{
    const RootReport r = isolate_roots(qp({q(-1, 2), q(0), q(1)}));
    EXPECT_EQ(r.degree, 2);
    EXPECT_EQ(r.real_root_count, 2);
    ASSERT_EQ(r.roots.size(), 2u);
    EXPECT_NEAR(r.roots[0].value, -std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(r.roots[1].value, std::sqrt(0.5), 1e-15);
    EXPECT_TRUE(r.all_simple);
    EXPECT_FALSE(r.all_nonnegative);
}

TEST(Zeros, IsolatingIntervalsBracketTheRoots)
{
    const QPoly p = sbo_h_closed(1, 6);
    const RootReport r = isolate_roots(p);
    ASSERT_EQ(r.real_root_count, 6);
    for (const auto& x : r.roots) {
        if (x.exact()) {
            EXPECT_TRUE(eval(p, x.lo).is_zero());
            continue;
        }
        EXPECT_LT(x.lo, x.hi);
        EXPECT_LE(x.hi - x.lo, pow2(-53));
        EXPECT_LE(eval(p, x.lo).sign() * eval(p, x.hi).sign(), 0);
    }
    for (std::size_t k = 1; k < r.roots.size(); ++k)
        EXPECT_LE(r.roots[k - 1].hi, r.roots[k].lo);
}

TEST(Zeros, ExactRationalRootsAndMultiplicity)
{
    // x (x - 1)^2 (x + 3/2): a root at zero, a double root, a negative root.
    const QPoly p = QPoly::x() * qp({q(-1), q(1)}) * qp({q(-1), q(1)}) * qp({q(3, 2), q(1)});
    const RootReport r = isolate_roots(p);
    EXPECT_EQ(r.degree, 4);
    EXPECT_EQ(r.real_root_count, 3);
    EXPECT_FALSE(r.all_simple);
    ASSERT_EQ(r.roots.size(), 3u);
    EXPECT_DOUBLE_EQ(r.roots[0].value, -1.5);
    EXPECT_DOUBLE_EQ(r.roots[1].value, 0.0);
    EXPECT_DOUBLE_EQ(r.roots[2].value, 1.0);
}

TEST(Zeros, NoRealRootsAndErrors)
{
    const RootReport r = isolate_roots(qp({q(1), q(0), q(1)}));
    EXPECT_EQ(r.real_root_count, 0);
    EXPECT_TRUE(r.roots.empty());
    EXPECT_THROW(isolate_roots(QPoly()), ZeroPolynomialError);
    EXPECT_THROW(interlacing(isolate_roots(hermite_monic(2)), isolate_roots(hermite_monic(5))), std::invalid_argument);
}

TEST(Zeros, SturmCountMatchesDegreeForClassicalFamilies)
{
    for (long n = 1; n <= 14; ++n) {
        EXPECT_EQ(sturm_count_all(sturm_chain(hermite_monic(n))), n);
        EXPECT_EQ(sturm_count_all(sturm_chain(eval_alpha(laguerre_monic(n), q(1, 2)))), n);
    }
}

TEST(Zeros, LaguerreAlphaZeroCounterexample)
{
    const QPoly p2 = eval_alpha(sbo_l_closed(1, 2), q(0));
    const QPoly p3 = eval_alpha(sbo_l_closed(1, 3), q(0));
    const RootReport r2 = isolate_roots(p2), r3 = isolate_roots(p3);
    ASSERT_EQ(r2.roots.size(), 2u);
    ASSERT_EQ(r3.roots.size(), 3u);
    EXPECT_NEAR(r2.roots[0].value, (5 - std::sqrt(17.0)) / 4, 1e-12);
    EXPECT_NEAR(r2.roots[1].value, (5 + std::sqrt(17.0)) / 4, 1e-12);
    EXPECT_NEAR(r3.roots[0].value, 2 - std::sqrt(3.0), 1e-12);
    EXPECT_DOUBLE_EQ(r3.roots[1].value, 1.0);
    EXPECT_NEAR(r3.roots[2].value, 2 + std::sqrt(3.0), 1e-12);
    // 0.2192 and 0.2679 both sit below 1, so the separation fails.
    EXPECT_FALSE(interlacing(r2, r3));
}

TEST(Zeros, HermiteSBOInterlacingExamples)
{
    const RootReport a = isolate_roots(sbo_h_closed(1, 2)), b = isolate_roots(sbo_h_closed(1, 4));
    EXPECT_TRUE(interlacing(a, b));
    EXPECT_TRUE(interlacing(isolate_roots(hermite_monic(2)), isolate_roots(hermite_monic(3))));
    // A same-parity pair on x > 0 that does not separate.
    EXPECT_FALSE(interlacing(isolate_roots(sbo_h_closed(1, 4)), isolate_roots(sbo_h_closed(1, 6))));
}

TEST(Zeros, ResidualBoundIsUnattainableInDoubleForSomeRoots)
{
    // Degree-13 Laguerre member at alpha = 0: for its largest root no double within
    // 64 ulps of the polished value meets |p| <= 1e-9 max|coeff|, yet the exact
    // isolating interval still brackets the root.
    const QPoly p = eval_alpha(sbo_l_closed(5, 13), q(0));
    const RootReport r = isolate_roots(p);
    ASSERT_EQ(r.real_root_count, 13);
    bool found = false;
    for (const auto& x : r.roots) {
        if (residual_ok(p, x.value))
            continue;
        bool any = false;
        double y = x.value;
        for (int k = 0; k < 64; ++k)
            y = std::nextafter(y, -INFINITY);
        for (int k = 0; k <= 128; ++k, y = std::nextafter(y, INFINITY))
            any = any || residual_ok(p, y);
        EXPECT_FALSE(any);
        EXPECT_LE(eval(p, x.lo).sign() * eval(p, x.hi).sign(), 0);
        found = true;
    }
    EXPECT_TRUE(found);
}

TEST(Zeros, StructureSuite)
{
    const Report r = verify_zeros_structure(10);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.find("zeros.laguerre-sbo-interlacing")->status, CheckStatus::expected_negative);
    EXPECT_EQ(r.find("zeros.classical-interlacing-hermite")->status, CheckStatus::pass);
    EXPECT_EQ(r.find("zeros.classical-interlacing-laguerre")->status, CheckStatus::pass);
    EXPECT_TRUE(r.find("zeros.hermite-sbo-interlacing-adjacent")->failures.empty());
    EXPECT_FALSE(r.find("zeros.hermite-sbo-interlacing")->failures.empty());
}

TEST(Zeros, EmpiricalSuiteFindsAllRootsReal)
{
    const Report r = verify_zeros_empirical(4, 8, 3, 6);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.find("zeros.hermite-sbo-real-simple")->failures.empty());
    EXPECT_TRUE(r.find("zeros.laguerre-sbo-real-simple-nonnegative")->failures.empty());
}
