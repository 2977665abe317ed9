#ifndef SBO_CLASSICAL_HPP
#define SBO_CLASSICAL_HPP

#include "exact.hpp"
#include "linalg.hpp"
#include "memo.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "units.hpp"

#include <string>
#include <vector>

namespace sbo
{

namespace detail
{

inline QPoly hermite_explicit(long n)
{
    std::vector<Rational> c(n + 1, Rational(0));
    for (long m = 0; 2 * m <= n; ++m)
        c[n - 2 * m] = sign_pow(m) * factorial(n) / (factorial(m) * factorial(n - 2 * m)) * pow2(n - 2 * m);
    return QPoly(std::move(c));
}

inline APoly laguerre_explicit(long n)
{
    std::vector<AlphaScalar> c;
    for (long m = 0; m <= n; ++m)
        c.push_back(pochhammer(alpha() + AlphaScalar(Rational(m + 1)), n - m) *
                    (sign_pow(m) / (factorial(m) * factorial(n - m))));
    return APoly(std::move(c));
}

} // namespace detail

/// Physicists' Hermite polynomial H_n, leading coefficient 2^n.
inline QPoly hermite(long n)
{
    static MemoTable<long, QPoly> memo;
    if (n < 0)
        throw std::domain_error("negative degree");
    return memo.get(n, [n] {
        QPoly h = detail::hermite_explicit(n);
        if (n >= 1) {
            QPoly rec = QPoly::x() * hermite(n - 1) * Rational(2);
            if (n >= 2)
                rec -= hermite(n - 2) * Rational(2 * (n - 1));
            require(rec == h, "Hermite explicit sum disagrees with the recurrence at n=" + std::to_string(n));
        }
        return h;
    });
}

inline QPoly hermite_monic(long n) { return hermite(n) * pow2(-n); }

/// 2^{-k/2} H_k(sqrt(2) x), which has rational coefficients.
inline QPoly hermite_sqrt2(long k)
{
    const QPoly h = hermite(k);
    std::vector<Rational> c(h.coeffs().size(), Rational(0));
    for (long j = k % 2; j <= k; j += 2)
        c[j] = h.coeff(j) * pow2((j - k) / 2);
    return QPoly(std::move(c));
}

/// Generalized Laguerre polynomial L_n^{(alpha)} over Q[alpha].
inline APoly laguerre(long n)
{
    static MemoTable<long, APoly> memo;
    if (n < 0)
        throw std::domain_error("negative degree");
    return memo.get(n, [n] {
        APoly l = detail::laguerre_explicit(n);
        if (n >= 1) {
            const long m = n - 1;
            APoly rec = (APoly(alpha() + AlphaScalar(Rational(2 * m + 1))) - APoly::x()) * laguerre(m);
            if (m >= 1)
                rec -= APoly(alpha() + AlphaScalar(Rational(m))) * laguerre(m - 1);
            require(rec / Rational(n) == l,
                    "Laguerre explicit sum disagrees with the recurrence at n=" + std::to_string(n));
        }
        return l;
    });
}

inline APoly laguerre_monic(long n) { return laguerre(n) * (sign_pow(n) * factorial(n)); }

/// Coefficient matrices of a classical family restricted to one parity class.
template <class S>
struct ConnectionPair
{
    Matrix<S> to_monomial;   ///< [k][n]: coefficient of the k-th monomial in the n-th polynomial
    Matrix<S> from_monomial; ///< [m][n]: coefficient of the m-th polynomial in the n-th monomial
};

/** Hermite coefficient matrices for degrees 2m+p, 0 <= m <= N, p = parity. */
inline ConnectionPair<Rational> hermite_connection(int p, long N)
{
    ConnectionPair<Rational> c{zero_matrix<Rational>(N + 1, N + 1), zero_matrix<Rational>(N + 1, N + 1)};
    for (long n = 0; n <= N; ++n)
        for (long m = 0; m <= n; ++m) {
            c.to_monomial[m][n] = sign_pow(n - m) * pow2(2 * m + p) * factorial(2 * n + p) /
                                  (factorial(2 * m + p) * factorial(n - m));
            c.from_monomial[m][n] =
                pow2(-(2 * n + p)) * factorial(2 * n + p) / (factorial(2 * m + p) * factorial(n - m));
        }
    return c;
}

/** Laguerre coefficient matrices over Q[alpha], degrees 0..N. */
inline ConnectionPair<AlphaScalar> laguerre_connection(long N)
{
    ConnectionPair<AlphaScalar> c{zero_matrix<AlphaScalar>(N + 1, N + 1),
                                  zero_matrix<AlphaScalar>(N + 1, N + 1)};
    for (long n = 0; n <= N; ++n)
        for (long m = 0; m <= n; ++m) {
            // C(alpha+n, n-m) = (alpha+m+1)_{n-m} / (n-m)!
            AlphaScalar binom = pochhammer(alpha() + AlphaScalar(Rational(m + 1)), n - m) / factorial(n - m);
            c.to_monomial[m][n] = binom * (sign_pow(m) / factorial(m));
            c.from_monomial[m][n] = binom * (sign_pow(m) * factorial(n));
        }
    return c;
}

/// Truncated power series in z with polynomial coefficients.
template <class P>
using Series = std::vector<P>;

/// exp(f) for a series with f[0] = 0, truncated to `order`.
template <class P>
Series<P> series_exp(const Series<P>& f, std::size_t order)
{
    Series<P> e(order + 1);
    e[0] = P(1);
    for (std::size_t n = 1; n <= order; ++n) {
        P acc;
        for (std::size_t k = 1; k <= n && k < f.size(); ++k)
            acc += f[k] * e[n - k] * Rational(static_cast<long>(k));
        e[n] = acc / Rational(static_cast<long>(n));
    }
    return e;
}

/// Coefficients of z^k in exp(2xz - z^2), k <= order.
inline Series<QPoly> hermite_generating_series(std::size_t order)
{
    Series<QPoly> f(3);
    f[1] = QPoly::x() * Rational(2);
    f[2] = QPoly(-1);
    return series_exp(f, order);
}

/// Coefficients of z^k in (1-z)^{-alpha-1} exp(xz/(z-1)), k <= order.
inline Series<APoly> laguerre_generating_series(std::size_t order)
{
    Series<APoly> f(order + 1);
    for (std::size_t k = 1; k <= order; ++k)
        f[k] = -APoly::x();
    Series<APoly> e = series_exp(f, order);
    Series<APoly> out(order + 1);
    const AlphaScalar a1 = alpha() + AlphaScalar(Rational(1));
    for (std::size_t n = 0; n <= order; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out[n] += e[n - k] * APoly(pochhammer(a1, static_cast<long>(k)) / factorial(static_cast<long>(k)));
    return out;
}

/** Checks the classical structure relations, connection matrices, bridges,
 *  generating functions and orthogonality up to degree n_max.
 */
inline Report verify_classical_identities(long n_max)
{
    Report r("classical");
    const QPoly x = QPoly::x();
    const APoly ax = APoly::x();
    const AlphaScalar a = alpha();
    auto lbl = [](long n) { return "n=" + std::to_string(n); };
    auto as = [](long k) { return AlphaScalar(Rational(k)); };

    for (long n = 0; n <= n_max; ++n) {
        const QPoly h = hermite(n), hp = derivative(h), hpp = derivative(hp);
        const QPoly hm1 = n >= 1 ? hermite(n - 1) : QPoly();
        const QPoly hm2 = n >= 2 ? hermite(n - 2) : QPoly();
        const QPoly h1 = hermite(n + 1), h2 = hermite(n + 2);
        const Rational nn(n);
        r.record("hermite.three-term-recurrence", "H_{n+1} = 2x H_n - 2n H_{n-1}",
                 h1 == x * h * Rational(2) - hm1 * (Rational(2) * nn), lbl(n));
        r.record("hermite.derivative-lowering", "H_n' = 2n H_{n-1}", hp == hm1 * (Rational(2) * nn), lbl(n));
        r.record("hermite.x-derivative", "x H_n' = n H_n + 2n(n-1) H_{n-2}",
                 x * hp == h * nn + hm2 * Rational(2 * n * (n - 1)), lbl(n));
        r.record("hermite.differential-equation", "H_n'' - 2x H_n' + 2n H_n = 0",
                 (hpp - x * hp * Rational(2) + h * (Rational(2) * nn)).is_zero(), lbl(n));
        r.record("hermite.derivative-raising", "H_n' - 2x H_n = -H_{n+1}", hp - x * h * Rational(2) == -h1,
                 lbl(n));
        r.record("hermite.x-derivative-raising", "x H_n' = -H_{n+2}/2 + (2x^2 - 1 - n) H_n",
                 x * hp == h2 * Rational(-1, 2) + (x * x * Rational(2) - QPoly(Rational(1) + nn)) * h, lbl(n));
        r.record("hermite.two-step-recurrence", "H_{n+2} = 2(2x^2-2n-1) H_n - 4n(n-1) H_{n-2}",
                 h2 == (x * x * Rational(4) - QPoly(Rational(4 * n + 2))) * h - hm2 * Rational(4 * n * (n - 1)),
                 lbl(n));

        const APoly l = laguerre(n), lp = derivative(l), lpp = derivative(lp);
        const APoly lm1 = n >= 1 ? laguerre(n - 1) : APoly();
        const APoly l1 = laguerre(n + 1);
        r.record("laguerre.three-term-recurrence",
                 "(n+1) L_{n+1} = (-x + alpha + 2n + 1) L_n - (alpha + n) L_{n-1}",
                 l1 * Rational(n + 1) == (APoly(a + as(2 * n + 1)) - ax) * l - APoly(a + as(n)) * lm1, lbl(n));
        r.record("laguerre.x-derivative", "x L_n' = n L_n - (alpha + n) L_{n-1}",
                 ax * lp == l * Rational(n) - APoly(a + as(n)) * lm1, lbl(n));
        r.record("laguerre.differential-equation", "x L_n'' + (alpha + 1 - x) L_n' + n L_n = 0",
                 (ax * lpp + (APoly(a + as(1)) - ax) * lp + l * Rational(n)).is_zero(), lbl(n));
        r.record("laguerre.x-derivative-raising", "x L_n' = (n+1) L_{n+1} + (x - alpha - 1 - n) L_n",
                 ax * lp == l1 * Rational(n + 1) + (ax - APoly(a + as(1 + n))) * l, lbl(n));
    }

    // Connection matrices are mutually inverse and match the polynomials.
    const long N = n_max / 2;
    for (int p = 0; p <= 1; ++p) {
        auto c = hermite_connection(p, N);
        const std::string id = p == 0 ? "hermite.connection-even" : "hermite.connection-odd";
        r.record(id, "monomial and Hermite coefficient matrices are mutually inverse",
                 matmul(c.to_monomial, c.from_monomial) == identity_matrix<Rational>(N + 1), "N=" + std::to_string(N));
        bool match = true;
        for (long n = 0; n <= N; ++n)
            for (long m = 0; m <= N; ++m)
                match = match && hermite(2 * n + p).coeff(2 * m + p) == c.to_monomial[m][n];
        r.record(id + "-coefficients", "coefficient matrix matches the explicit polynomials", match,
                 "N=" + std::to_string(N));
    }
    {
        auto c = laguerre_connection(n_max);
        r.record("laguerre.connection", "monomial and Laguerre coefficient matrices are mutually inverse",
                 matmul(c.to_monomial, c.from_monomial) == identity_matrix<AlphaScalar>(n_max + 1),
                 "N=" + std::to_string(n_max));
        bool match = true;
        for (long n = 0; n <= n_max; ++n)
            for (long m = 0; m <= n_max; ++m)
                match = match && laguerre(n).coeff(m) == c.to_monomial[m][n];
        r.record("laguerre.connection-coefficients", "coefficient matrix matches the explicit polynomials", match,
                 "N=" + std::to_string(n_max));
    }

    // Hermite in terms of Laguerre at alpha = -1/2 and 1/2.
    for (long n = 0; 2 * n + 1 <= std::max<long>(n_max, 1); ++n) {
        const Rational k = sign_pow(n) * pow2(2 * n) * factorial(n);
        const QPoly le = compose_square(eval_alpha(laguerre(n), Rational(-1, 2)));
        const QPoly lo = compose_square(eval_alpha(laguerre(n), Rational(1, 2)));
        r.record("bridge.classical-even", "H_{2n}(x) = (-1)^n 4^n n! L_n^{(-1/2)}(x^2)", hermite(2 * n) == le * k,
                 lbl(n));
        r.record("bridge.classical-odd", "H_{2n+1}(x) = (-1)^n 2^{2n+1} n! x L_n^{(1/2)}(x^2)",
                 hermite(2 * n + 1) == x * lo * (k * Rational(2)), lbl(n));
    }

    // Generating functions up to the requested order.
    {
        auto hs = hermite_generating_series(n_max);
        auto ls = laguerre_generating_series(n_max);
        for (long n = 0; n <= n_max; ++n) {
            r.record("hermite.generating-function", "sum H_n z^n / n! = exp(2xz - z^2)",
                     hs[n] == hermite(n) / factorial(n), lbl(n));
            r.record("laguerre.generating-function", "sum L_n z^n = (1-z)^{-alpha-1} exp(xz/(z-1))",
                     ls[n] == laguerre(n), lbl(n));
        }
    }

    // Orthogonality against the first weight in reduced moments.
    {
        auto hm = gaussian_moments(Rational(1), 2 * n_max + 2);
        auto lm = gamma_moments(a, Rational(1), 2 * n_max + 2);
        for (long m = 0; m <= n_max; ++m)
            for (long n = m; n <= n_max; ++n) {
                const Rational hn = m == n ? factorial(n) * pow2(-n) : Rational(0);
                r.record("hermite.orthogonality", "(Hm_m, Hm_n) = n!/2^n delta in units sqrt(pi)",
                         inner_product(hermite_monic(m), hermite_monic(n), hm).value == hn,
                         "m=" + std::to_string(m) + "," + lbl(n));
                const AlphaScalar ln = m == n ? pochhammer(a + as(1), n) / factorial(n) : AlphaScalar();
                r.record("laguerre.orthogonality", "(L_m, L_n) = (alpha+1)_n/n! delta in units Gamma(alpha+1)",
                         inner_product(laguerre(m), laguerre(n), lm).value == ln,
                         "m=" + std::to_string(m) + "," + lbl(n));
            }
    }
    return r;
}

} // namespace sbo

#endif
