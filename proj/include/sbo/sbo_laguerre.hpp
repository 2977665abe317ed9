#ifndef SBO_SBO_LAGUERRE_HPP
#define SBO_SBO_LAGUERRE_HPP

#include "classical.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "memo.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "sbo_hermite.hpp"
#include "units.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sbo
{

/* Laguerre SBO polynomials for w = exp(-x) x^alpha, w2 = exp(-2x) x^alpha,
 * with alpha kept symbolic: every coefficient lives in Q[alpha]. Norms are in
 * units Gamma(alpha+1) 2^{-(alpha+1)}.
 */

namespace detail
{

inline AlphaScalar a_plus(long k) { return alpha() + AlphaScalar(Rational(k)); }

} // namespace detail

/// Connection coefficients with L_m^{(alpha)}, i <= m <= n.
inline APoly sbo_l_closed(long i, long n)
{
    static MemoTable<std::pair<long, long>, APoly> memo;
    check_index(i, n);
    return memo.get({i, n}, [i, n] {
        APoly r;
        for (long m = i; m <= n; ++m)
            r += laguerre(m) * (pochhammer(detail::a_plus(1 + i + m), n - m) *
                                (sign_pow(m) * pow2(m - n) * factorial(m) * binomial(n - i, m - i)));
        require(r.degree() == n && r.is_monic(), "Laguerre SBO closed form is not monic");
        return r;
    });
}

/// 2^{-2n} (n-i)! (alpha+1)_{i+n}.
inline AlphaScalar sbo_l_norm(long i, long n)
{
    check_index(i, n);
    return pochhammer(detail::a_plus(1), i + n) * (pow2(-2 * n) * factorial(n - i));
}

inline Quantity<AlphaScalar> sbo_l_norm_quantity(long i, long n)
{
    return {sbo_l_norm(i, n), Unit::gamma(Rational(2))};
}

/// L_n^{(alpha)} over P_{i;m}, i <= m <= n: pairs (m, coefficient).
inline std::vector<std::pair<long, AlphaScalar>> laguerre_in_sbo(long i, long n)
{
    check_index(i, n);
    std::vector<std::pair<long, AlphaScalar>> row;
    for (long m = i; m <= n; ++m)
        row.emplace_back(m, pochhammer(detail::a_plus(1 + i + m), n - m) *
                                (sign_pow(m) * pow2(m - n) * binomial(n - i, m - i) / factorial(n)));
    return row;
}

/// Coefficient matrices between {L_m} and {P_{i;m}}, i <= m <= N.
inline BasisChange<AlphaScalar> laguerre_sbo_connection(long i, long N)
{
    check_index(i, N);
    const long d = N - i + 1;
    BasisChange<AlphaScalar> b{zero_matrix<AlphaScalar>(d, d), zero_matrix<AlphaScalar>(d, d)};
    for (long n = i; n <= N; ++n) {
        for (long m = i; m <= n; ++m)
            b.forward[m - i][n - i] = pochhammer(detail::a_plus(1 + i + m), n - m) *
                                      (sign_pow(m) * pow2(m - n) * factorial(m) * binomial(n - i, m - i));
        for (const auto& [m, c] : laguerre_in_sbo(i, n))
            b.inverse[m - i][n - i] = c;
    }
    return b;
}

/// kappa_{i;n}(alpha) = (n-i)(alpha+i+n)/4.
inline AlphaScalar kappa_l(long i, long n)
{
    check_index(i, n);
    return detail::a_plus(i + n) * Rational(n - i, 4);
}

/// Members P_{i;i..n_max} over Q[alpha], with norms.
struct LaguerreSBOFamily
{
    long i = 0;
    std::vector<APoly> polys; ///< polys[n - i]
    std::vector<AlphaScalar> norms;
    Route route = Route::closed;

    long n_max() const { return i + static_cast<long>(polys.size()) - 1; }
    const APoly& at(long n) const { return polys.at(n - i); }
    /// Numeric view at a rational alpha > -1.
    QPoly at(long n, const Rational& a0) const { return eval_alpha(at(n), a0); }
};

namespace detail
{

inline LaguerreSBOFamily laguerre_family_with_norms(long i, std::vector<APoly> polys, Route route)
{
    LaguerreSBOFamily f{i, std::move(polys), {}, route};
    for (long n = i; n <= f.n_max(); ++n)
        f.norms.push_back(sbo_l_norm(i, n));
    return f;
}

} // namespace detail

inline LaguerreSBOFamily sbo_l_via_closed(long i, long n_max)
{
    std::vector<APoly> polys;
    for (long n = i; n <= n_max; ++n)
        polys.push_back(sbo_l_closed(i, n));
    return detail::laguerre_family_with_norms(i, std::move(polys), Route::closed);
}

/// P_{i;n+1} = (x - (alpha+1)/2) P_{i;n} + kappa_{i;n} P_{i;n-1} - x P'_{i;n}, from P_{i;i} = (-1)^i i! L_i.
inline LaguerreSBOFamily sbo_l_via_diff1(long i, long n_max)
{
    check_index(i, n_max);
    const APoly x = APoly::x();
    const APoly shift_half = x - APoly(detail::a_plus(1) * Rational(1, 2));
    std::vector<APoly> polys{laguerre_monic(i)};
    for (long n = i; n < n_max; ++n) {
        const APoly& cur = polys.back();
        APoly next = shift_half * cur - x * derivative(cur);
        if (n > i)
            next += polys[n - 1 - i] * kappa_l(i, n);
        polys.push_back(std::move(next));
    }
    return detail::laguerre_family_with_norms(i, std::move(polys), Route::diff1);
}

/** P_{n+2} = (x-1) P_{n+1} - ((alpha+1+2n)x/2 - 2 kappa_n - (alpha^2+alpha+2n)/4) P_n
 *          + kappa_n (x+1) P_{n-1} - kappa_n kappa_{n-1} P_{n-2},
 *  seeded with P_{i;i} and P_{i;i+1} = Lm_{i+1} + (alpha+1+2i)/2 Lm_i.
 */
inline LaguerreSBOFamily sbo_l_via_five_term(long i, long n_max)
{
    check_index(i, n_max);
    const APoly x = APoly::x();
    const AlphaScalar a = alpha();
    std::vector<APoly> polys{laguerre_monic(i)};
    if (n_max > i)
        polys.push_back(laguerre_monic(i + 1) + laguerre_monic(i) * (detail::a_plus(1 + 2 * i) * Rational(1, 2)));
    auto get = [&](long m) { return m < i ? APoly() : polys[m - i]; };
    for (long n = i; n + 2 <= n_max; ++n) {
        const AlphaScalar k = kappa_l(i, n);
        const AlphaScalar kk = n > i ? k * kappa_l(i, n - 1) : AlphaScalar();
        const APoly coef_n = x * (detail::a_plus(1 + 2 * n) * Rational(1, 2)) -
                             APoly(k * Rational(2) + (a * a + a + AlphaScalar(Rational(2 * n))) * Rational(1, 4));
        polys.push_back((x - APoly(1)) * get(n + 1) - coef_n * get(n) + (x + APoly(1)) * get(n - 1) * k -
                        get(n - 2) * kk);
    }
    return detail::laguerre_family_with_norms(i, std::move(polys), Route::five_term);
}

/** Table T[i][n], 0 <= i <= n <= n_max, stepping up in i from
 *  P_{0;n}(x) = (-1)^n 2^{-n} n! L_n(2x):
 *
 *    P_{i+1;n} = P_{i;n} + ((n-i-1)/2) P_{i+1;n-1} - ((alpha+i+n)/2) P_{i;n-1}.
 */
inline std::vector<std::vector<APoly>> sbo_l_four_term_table(long n_max)
{
    std::vector<std::vector<APoly>> t(n_max + 1, std::vector<APoly>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        t[0][n] = compose_scale(laguerre_monic(n), Rational(2)) * pow2(-n);
        for (long i = 0; i < n; ++i) {
            APoly v = t[i][n] - t[i][n - 1] * (detail::a_plus(i + n) * Rational(1, 2));
            if (n - i - 1 > 0)
                v += t[i + 1][n - 1] * Rational(n - i - 1, 2);
            t[i + 1][n] = std::move(v);
        }
    }
    return t;
}

inline LaguerreSBOFamily sbo_l_via_four_term(long i, long n_max)
{
    check_index(i, n_max);
    auto t = sbo_l_four_term_table(n_max);
    std::vector<APoly> polys;
    for (long n = i; n <= n_max; ++n)
        polys.push_back(t[i][n]);
    return detail::laguerre_family_with_norms(i, std::move(polys), Route::four_term);
}

inline LaguerreSBOFamily sbo_l_via_oracle(long i, long n_max)
{
    auto o = oracle_laguerre(i, n_max, alpha());
    return {i, std::move(o.polys), std::move(o.norms), Route::oracle};
}

inline LaguerreSBOFamily sbo_l_family(long i, long n_max, Route route = Route::four_term)
{
    switch (route) {
    case Route::closed: return sbo_l_via_closed(i, n_max);
    case Route::diff1: return sbo_l_via_diff1(i, n_max);
    case Route::five_term: return sbo_l_via_five_term(i, n_max);
    case Route::four_term: return sbo_l_via_four_term(i, n_max);
    case Route::oracle: return sbo_l_via_oracle(i, n_max);
    }
    return sbo_l_via_four_term(i, n_max);
}

/// P_{i+1;n} = P_{i;n} - 2^{-n} (alpha+1+2i) (n-i-1)! sum_{l=i}^{n-1} 2^l/(l-i)! P_{i;l}, 0 <= i < n.
inline APoly sbo_l_step_in_i(long i, long n)
{
    if (i < 0 || i >= n)
        throw IndexError("summed step needs 0 <= i < n");
    APoly sum;
    for (long l = i; l < n; ++l)
        sum += sbo_l_closed(i, l) * (pow2(l) / factorial(l - i));
    return sbo_l_closed(i, n) - sum * (detail::a_plus(1 + 2 * i) * (pow2(-n) * factorial(n - i - 1)));
}

/** P_{1;n} over L_l(2x), n >= 1:
 *  (-1)^n 2^{-n} n! L_n(2x) - 2^{-n} (alpha+1) (n-1)! sum_{l<n} (-1)^l L_l(2x).
 *  `with_factorial = false` drops the n! of the leading term.
 */
inline APoly sbo_l_doubled_expansion(long n, bool with_factorial = true)
{
    if (n < 1)
        throw IndexError("expansion over L_l(2x) needs n >= 1");
    APoly sum;
    for (long l = 0; l < n; ++l)
        sum += compose_scale(laguerre(l), Rational(2)) * sign_pow(l);
    const Rational lead = sign_pow(n) * pow2(-n) * (with_factorial ? factorial(n) : Rational(1));
    return compose_scale(laguerre(n), Rational(2)) * lead -
           sum * (detail::a_plus(1) * (pow2(-n) * factorial(n - 1)));
}

/// Leading corrections: P_{i;n} = x^n + R x^{n-1} + S x^{n-2} + ...
inline AlphaScalar sbo_l_subleading_r(long i, long n)
{
    return (detail::a_plus(i) * Rational(i) + detail::a_plus(n) * Rational(n)) * Rational(-1, 2);
}

/** S with the i^2 (alpha+i)^2 leading term; `printed = true` uses
 *  i^3 (2 alpha + i) instead, which only agrees at alpha = 0.
 */
inline AlphaScalar sbo_l_subleading_s(long i, long n, bool printed = false)
{
    const AlphaScalar ai = detail::a_plus(i);
    const AlphaScalar lead = printed ? (alpha() * Rational(2) + AlphaScalar(Rational(i))) * Rational(i * i * i)
                                     : ai * ai * Rational(i * i);
    const AlphaScalar mid = (alpha() * Rational(2 * n - 3) + AlphaScalar(Rational(2 * n * n - 6 * n + 3))) * ai *
                            Rational(i);
    const AlphaScalar tail = detail::a_plus(n) * detail::a_plus(n - 1) * Rational(n * (n - 1));
    return (lead + mid + tail) * Rational(1, 8);
}

/// p^{(alpha)}_{i;i..n_max} from p_{i;i} = 1, p_{i;i-1} = 0 and the three-term recurrence.
struct PAlphaTable
{
    long i = 0;
    std::vector<AlphaScalar> values; ///< values[n - i]

    const AlphaScalar& at(long n) const { return values.at(n - i); }
};

inline PAlphaTable p_alpha_table(long i, long n_max)
{
    check_index(i, n_max);
    PAlphaTable t{i, {AlphaScalar(Rational(1))}};
    AlphaScalar prev;
    for (long n = i; n < n_max; ++n) {
        AlphaScalar next = t.values.back() * detail::a_plus(1) + prev * detail::a_plus(i + n) * Rational(n - i);
        prev = t.values.back();
        t.values.push_back(std::move(next));
    }
    return t;
}

/// P_{i;n}(0) = (-1)^n 2^{-(n-i)} (alpha+1)_i p^{(alpha)}_{i;n}.
inline AlphaScalar sbo_l_zero_from_p(long i, long n)
{
    return pochhammer(detail::a_plus(1), i) * p_alpha_table(i, n).at(n) * (sign_pow(n) * pow2(-(n - i)));
}

/// (-1)^i 2^{-(n-i)} (alpha+1)_i (alpha+1+2i)_{n-i} F(-(n-i), alpha+1+i; alpha+1+2i; 2), summed in Q[alpha].
inline AlphaScalar sbo_l_zero_hypergeometric(long i, long n)
{
    check_index(i, n);
    return pochhammer(detail::a_plus(1), i) *
           hyp2f1_scaled(n - i, detail::a_plus(1 + i), detail::a_plus(1 + 2 * i), Rational(2)) *
           (sign_pow(i) * pow2(-(n - i)));
}

/// P_{i;n}(0) three ways; they must agree.
inline AlphaScalar sbo_l_zero_value(long i, long n)
{
    const AlphaScalar direct = sbo_l_closed(i, n).coeff(0);
    require(direct == sbo_l_zero_from_p(i, n), "Laguerre value at zero disagrees with the p-recurrence");
    require(direct == sbo_l_zero_hypergeometric(i, n), "Laguerre value at zero disagrees with the 2F1 sum");
    return direct;
}

/** (x^m, P_{i;n}) = 0 for m < i, units Gamma(alpha+1); (P_{i;k}, P_{i;n})_2 = H delta,
 *  units Gamma(alpha+1) 2^{-(alpha+1)}. Symbolic unless `a0` is given.
 */
inline Report verify_sbo_l_orthogonality(long i_max, long n_max, std::optional<Rational> a0 = std::nullopt,
                                         long i_min = 0)
{
    Report r("sbo-laguerre");
    const std::string tag = a0 ? a0->str() : "symbolic";
    if (!a0) {
        const auto m1 = gamma_moments(alpha(), Rational(1), 2 * n_max + 2);
        const auto m2 = gamma_moments(alpha(), Rational(2), 2 * n_max + 2);
        for (long i = i_min; i <= i_max; ++i)
            for (long n = i; n <= n_max; ++n) {
                const APoly pn = sbo_l_closed(i, n);
                bool ok = true;
                for (long m = 0; m < i; ++m)
                    ok = ok && moment_against(pn, m, m1).value.is_zero();
                r.record("laguerre-sbo.moment-constraints", "(x^m, P_{i;n}) = 0 for m < i", ok,
                         instance_label(i, n, tag));
                const auto v = moment_vector(pn, m2, n + 1);
                for (long k = i; k <= n; ++k) {
                    const APoly pk = sbo_l_closed(i, k);
                    AlphaScalar g;
                    for (long b = 0; b <= k; ++b)
                        g += pk.coeff(b) * v[b];
                    const Quantity<AlphaScalar> got{g, m2.unit};
                    const Quantity<AlphaScalar> expect =
                        k == n ? sbo_l_norm_quantity(i, n) : Quantity<AlphaScalar>{AlphaScalar(), m2.unit};
                    r.record("laguerre-sbo.mutual-orthogonality", "(P_{i;k}, P_{i;n})_2 = H_{i;n} delta_{k,n}",
                             got == expect, instance_label(i, n, tag) + ",k=" + std::to_string(k));
                }
            }
        return r;
    }
    const auto m1 = gamma_moments(*a0, Rational(1), 2 * n_max + 2);
    const auto m2 = gamma_moments(*a0, Rational(2), 2 * n_max + 2);
    for (long i = i_min; i <= i_max; ++i)
        for (long n = i; n <= n_max; ++n) {
            const QPoly pn = eval_alpha(sbo_l_closed(i, n), *a0);
            bool ok = true;
            for (long m = 0; m < i; ++m)
                ok = ok && moment_against(pn, m, m1).value.is_zero();
            r.record("laguerre-sbo.moment-constraints", "(x^m, P_{i;n}) = 0 for m < i", ok, instance_label(i, n, tag));
            for (long k = i; k <= n; ++k) {
                const Rational g = inner_product(eval_alpha(sbo_l_closed(i, k), *a0), pn, m2).value;
                const Rational expect = k == n ? eval(sbo_l_norm(i, n), *a0) : Rational(0);
                r.record("laguerre-sbo.mutual-orthogonality", "(P_{i;k}, P_{i;n})_2 = H_{i;n} delta_{k,n}",
                         g == expect, instance_label(i, n, tag) + ",k=" + std::to_string(k));
            }
        }
    return r;
}

/// Every identity for one family index i and degrees i..i+extra, symbolic in alpha.
inline Report verify_sbo_laguerre_family(long i, long extra)
{
    Report r("sbo-laguerre");
    const long n_max = i + extra;
    const APoly x = APoly::x();
    const AlphaScalar a = alpha();
    const auto closed = sbo_l_via_closed(i, n_max + 2);
    const auto diff1 = sbo_l_via_diff1(i, n_max);
    const auto five = sbo_l_via_five_term(i, n_max);
    const auto four = sbo_l_via_four_term(i, n_max);
    const auto oracle = sbo_l_via_oracle(i, n_max);
    auto P = [&](long n) { return n < i ? APoly() : closed.at(n); };
    const std::string sym = "symbolic";

    for (long n = i; n <= n_max; ++n) {
        const std::string lbl = instance_label(i, n, sym);
        const APoly& pn = closed.at(n);
        r.record("laguerre-sbo.route-diff1", "first-order differentiation route equals the closed form",
                 diff1.at(n) == pn, lbl);
        r.record("laguerre-sbo.route-five-term", "five-term recurrence route equals the closed form",
                 five.at(n) == pn, lbl);
        r.record("laguerre-sbo.route-four-term", "four-term recurrence route equals the closed form",
                 four.at(n) == pn, lbl);
        r.record("laguerre-sbo.route-oracle", "Gram-system oracle equals the closed form", oracle.at(n) == pn, lbl);
        r.record("laguerre-sbo.oracle-norm", "oracle norm equals the closed norm",
                 oracle.norms[n - i] == sbo_l_norm(i, n), lbl);

        r.record("laguerre-sbo.subleading", "coefficients of x^{n-1} and x^{n-2} match their closed forms",
                 (n < 1 || pn.coeff(n - 1) == sbo_l_subleading_r(i, n)) &&
                     (n < 2 || pn.coeff(n - 2) == sbo_l_subleading_s(i, n)),
                 lbl);

        const AlphaScalar k = kappa_l(i, n);
        if (n > i)
            r.record("laguerre-sbo.kappa-norm-ratio", "kappa_{i;n} = H_{i;n} / H_{i;n-1}",
                     k * sbo_l_norm(i, n - 1) == sbo_l_norm(i, n), lbl);
        else
            r.record("laguerre-sbo.kappa-boundary", "kappa_{i;i} = 0", k.is_zero(), lbl);
        const AlphaScalar kk = n > i ? k * kappa_l(i, n - 1) : AlphaScalar();
        const APoly d1 = derivative(pn), d2 = derivative(d1);
        r.record("laguerre-sbo.diff1", "x P' = -P_{n+1} + (x - (alpha+1)/2) P_n + kappa P_{n-1}",
                 x * d1 == -P(n + 1) + (x - APoly(detail::a_plus(1) * Rational(1, 2))) * pn + P(n - 1) * k, lbl);
        r.record("laguerre-sbo.second-order", "x P'' + (alpha+1-x) P' + n P = 2 kappa P_{n-1}",
                 x * d2 + (APoly(detail::a_plus(1)) - x) * d1 + pn * Rational(n) == P(n - 1) * (k * Rational(2)), lbl);
        // Derivative of the first-order formula with x P'' eliminated.
        const APoly dm1 = derivative(P(n - 1));
        r.record("laguerre-sbo.derivative-elimination",
                 "-P'_{n+1} + (alpha-1)/2 P'_n + (n+1) P_n + kappa (P'_{n-1} - 2 P_{n-1}) = 0",
                 (-derivative(P(n + 1)) + d1 * (detail::a_plus(-1) * Rational(1, 2)) + pn * Rational(n + 1) +
                  (dm1 - P(n - 1) * Rational(2)) * k)
                     .is_zero(),
                 lbl);
        if (n > i) {
            // As printed: derivative in the third term and alpha+1+i+n in the last coefficient.
            const AlphaScalar k_printed = detail::a_plus(1 + i + n) * Rational(n - i, 4);
            r.expect_negative("laguerre-sbo.derivative-elimination-printed",
                              "printed form with (n+1) P'_n and (n-i)(alpha+1+i+n)/4 vanishes",
                              (-derivative(P(n + 1)) + d1 * (detail::a_plus(-1) * Rational(1, 2)) +
                               d1 * Rational(n + 1) + (dm1 - P(n - 1) * Rational(2)) * k_printed)
                                  .is_zero(),
                              lbl);
        }
        const APoly coef_n = x * (detail::a_plus(1 + 2 * n) * Rational(1, 2)) -
                             APoly(k * Rational(2) + (a * a + a + AlphaScalar(Rational(2 * n))) * Rational(1, 4));
        const APoly five = P(n + 2) - (x - APoly(1)) * P(n + 1) + coef_n * pn - (x + APoly(1)) * P(n - 1) * k;
        r.record("laguerre-sbo.five-term", "five-term recurrence in n vanishes with + kappa_n kappa_{n-1} P_{n-2}",
                 (five + P(n - 2) * kk).is_zero(), lbl);
        if (n >= i + 2)
            r.expect_negative("laguerre-sbo.five-term-printed",
                              "five-term recurrence vanishes with - kappa_n kappa_{n-1} P_{n-2}",
                              (five - P(n - 2) * kk).is_zero(), lbl);
        r.attempt("laguerre-sbo.zero-value", "value at zero agrees directly, by recurrence and by the 2F1 sum", lbl,
                  [&] {
                      sbo_l_zero_value(i, n);
                      return true;
                  });
    }
    if (i >= 1)
        r.expect_negative("laguerre-sbo.subleading-printed", "S with the i^3 (2 alpha + i) term matches the polynomials",
                          closed.at(i + 1).coeff(i - 1) == sbo_l_subleading_s(i, i + 1, true),
                          instance_label(i, i + 1, sym));

    r.record("laguerre-sbo.boundary", "P_{i;i} = (-1)^i i! L_i", closed.at(i) == laguerre_monic(i),
             instance_label(i, i, sym));
    r.record("laguerre-sbo.seed-gap-one", "P_{i;i+1} = Lm_{i+1} + (alpha+1+2i)/2 Lm_i",
             closed.at(i + 1) ==
                 laguerre_monic(i + 1) + laguerre_monic(i) * (detail::a_plus(1 + 2 * i) * Rational(1, 2)),
             instance_label(i, i + 1, sym));
    r.record("laguerre-sbo.seed-gap-two", "P_{i;i+2} = (x-1) Lm_{i+1} + (alpha^2-alpha-2-2i)/4 Lm_i",
             closed.at(i + 2) == (x - APoly(1)) * laguerre_monic(i + 1) +
                                     laguerre_monic(i) * ((a * a - a - AlphaScalar(Rational(2 + 2 * i))) * Rational(1, 4)),
             instance_label(i, i + 2, sym));
    return r;
}

/** Identities across family indices: the i = 0 degeneracy, doubling
 *  relations, four-term table, stepping sums, p-tables, connection inverses
 *  and the rescaled-weight law.
 */
inline Report verify_sbo_laguerre_global(long i_max, long n_max, long connection_n = 14)
{
    Report r("sbo-laguerre");
    const APoly x = APoly::x();
    const std::string sym = "symbolic";
    for (long n = 0; n <= n_max; ++n) {
        const std::string lbl = "n=" + std::to_string(n);
        const APoly l2 = compose_scale(laguerre(n), Rational(2));
        r.record("laguerre-sbo.i0-degeneracy", "P_{0;n}(x) = (-1)^n 2^{-n} n! L_n(2x)",
                 sbo_l_closed(0, n) == l2 * (sign_pow(n) * pow2(-n) * factorial(n)), lbl);
        APoly fwd, back;
        for (long m = 0; m <= n; ++m) {
            const AlphaScalar c = pochhammer(detail::a_plus(1 + m), n - m) / factorial(n - m);
            fwd += laguerre(m) * (c * (sign_pow(n + m) * pow2(m)));
            back += compose_scale(laguerre(m), Rational(2)) * (c * pow2(-n));
        }
        r.record("laguerre-sbo.doubling", "L_n(2x) over L_m(x) and L_n(x) over L_m(2x)",
                 fwd == l2 && back == laguerre(n), lbl);
        const APoly lp = derivative(laguerre(n));
        r.record("laguerre-sbo.i0-diff1", "2x L_n' = (n+1) L_{n+1} + (x-alpha-1) L_n - (n+alpha) L_{n-1}",
                 x * lp * Rational(2) == laguerre(n + 1) * Rational(n + 1) + (x - APoly(detail::a_plus(1))) * laguerre(n) -
                                             (n >= 1 ? laguerre(n - 1) * detail::a_plus(n) : APoly()),
                 lbl);
        if (n >= 1) {
            r.record("laguerre-sbo.doubled-expansion", "P_{1;n} over L_l(2x) with the n! leading factor",
                     sbo_l_doubled_expansion(n) == sbo_l_closed(1, n), lbl);
            if (n >= 2)
                r.expect_negative("laguerre-sbo.doubled-expansion-printed",
                                  "P_{1;n} over L_l(2x) without the n! leading factor",
                                  sbo_l_doubled_expansion(n, false) == sbo_l_closed(1, n), lbl);
        }
    }

    const auto table = sbo_l_four_term_table(n_max);
    for (long n = 0; n <= n_max; ++n)
        for (long i = 0; i <= n; ++i) {
            r.record("laguerre-sbo.four-term-table", "four-term table entry equals the closed form",
                     table[i][n] == sbo_l_closed(i, n), instance_label(i, n, sym));
            if (i < n)
                r.record("laguerre-sbo.four-term", "2P_{i+1;n} - 2P_{i;n} - (n-i-1) P_{i+1;n-1} + (alpha+i+n) P_{i;n-1} = 0",
                         (sbo_l_closed(i + 1, n) * Rational(2) - sbo_l_closed(i, n) * Rational(2) -
                          (n - i - 1 > 0 ? sbo_l_closed(i + 1, n - 1) * Rational(n - i - 1) : APoly()) +
                          sbo_l_closed(i, n - 1) * detail::a_plus(i + n))
                             .is_zero(),
                         instance_label(i, n, sym));
        }
    for (long i = 0; i <= 2; ++i)
        for (long n = i + 1; n <= n_max; ++n)
            r.record("laguerre-sbo.summed-step-in-i", "P_{i+1;n} from a weighted sum over P_{i;l}, l < n",
                     sbo_l_step_in_i(i, n) == sbo_l_closed(i + 1, n), instance_label(i, n, sym));

    // p-tables.
    const AlphaScalar a = alpha();
    for (long i = 0; i <= i_max; ++i) {
        const auto t = p_alpha_table(i, i + 8);
        const Rational ii(i);
        const std::string li = "i=" + std::to_string(i);
        r.record("laguerre-sbo.p-boundary", "p_{i;i} = 1 and p_{0;n} = (alpha+1)_n",
                 t.at(i) == AlphaScalar(Rational(1)) && p_alpha_table(0, i).at(i) == pochhammer(detail::a_plus(1), i),
                 li);
        const AlphaScalar two_i = AlphaScalar(Rational(2) * (Rational(1) + ii));
        bool rows = t.at(i + 1) == detail::a_plus(1) && t.at(i + 2) == a * a + a * Rational(3) + two_i &&
                    t.at(i + 3) == detail::a_plus(1) * (a * a + a * Rational(5) + AlphaScalar(Rational(6) * (Rational(1) + ii))) &&
                    t.at(i + 4) == a * a * a * a + a * a * a * Rational(10) + a * a * (Rational(35) + Rational(12) * ii) +
                                       a * (Rational(2) * (Rational(25) + Rational(18) * ii)) +
                                       AlphaScalar(Rational(12) * (Rational(1) + ii) * (Rational(2) + ii));
        r.record("laguerre-sbo.p-rows", "p_{i;i+1..i+4} match their polynomials in alpha and i", rows, li);
        bool shape = true;
        for (long m = 0; m <= 8; ++m) {
            const AlphaScalar& v = t.at(i + m);
            shape = shape && v.degree() == m && v.is_monic();
            for (const Rational& c : v.coeffs())
                shape = shape && c.is_integer() && c.sign() > 0;
        }
        r.record("laguerre-sbo.p-shape", "p_{i;i+m} is monic of degree m in alpha with positive integer coefficients",
                 shape, li);
        for (long n = i; n <= i + 8; ++n) {
            r.record("laguerre-sbo.hermite-p-relation", "p_{i;n} = 2^{n-i} p^{(-1/2)}_{i;n}",
                     p_table(i, n).at(n) == pow2(n - i) * eval(p_alpha_table(i, n).at(n), Rational(-1, 2)),
                     instance_label(i, n));
            r.record("laguerre-sbo.zero-boundary", "P_{i;i}(0) = (-1)^i (alpha+1)_i and P_{0;n}(0) = (-1)^n 2^{-n} (alpha+1)_n",
                     sbo_l_closed(i, i).coeff(0) == pochhammer(detail::a_plus(1), i) * sign_pow(i) &&
                         sbo_l_closed(0, n).coeff(0) == pochhammer(detail::a_plus(1), n) * (sign_pow(n) * pow2(-n)),
                     instance_label(i, n, sym));
            if (i == 0 && n >= 1)
                r.expect_negative("laguerre-sbo.zero-boundary-printed", "P_{0;n}(0) = (-1)^n 2^n (alpha+1)_n",
                                  sbo_l_closed(0, n).coeff(0) == pochhammer(detail::a_plus(1), n) * (sign_pow(n) * pow2(n)),
                                  instance_label(0, n, sym));
            if (n >= i + 1) {
                auto pv = [](long a_, long b_) {
                    return b_ < a_ ? AlphaScalar() : p_alpha_table(a_, b_).at(b_);
                };
                const AlphaScalar base = pv(i, n) * Rational(-1) +
                                         pv(i + 1, n - 1) * detail::a_plus(1 + i) * Rational(2 * (n - i - 1)) -
                                         pv(i, n - 1) * detail::a_plus(i + n);
                r.record("laguerre-sbo.p-cross-recurrence", "2(alpha+1+i) p_{i+1;n} - p_{i;n} + ... = 0",
                         (base + pv(i + 1, n) * detail::a_plus(1 + i) * Rational(2)).is_zero(),
                         instance_label(i, n, sym));
                r.expect_negative("laguerre-sbo.p-cross-recurrence-printed",
                                  "2(2 alpha+1+i) p_{i+1;n} - p_{i;n} + ... = 0",
                                  (base + pv(i + 1, n) * (a * Rational(2) + AlphaScalar(Rational(1 + i))) * Rational(2))
                                      .is_zero(),
                                  instance_label(i, n, sym));
            }
        }
    }

    // Connection matrices with L_m^{(alpha)}, and row re-expansion.
    for (long i = 0; i <= connection_n; ++i) {
        const auto b = laguerre_sbo_connection(i, connection_n);
        r.record("laguerre-sbo.connection-inverse", "SBO-to-Laguerre and Laguerre-to-SBO matrices are inverse",
                 matmul(b.forward, b.inverse) == identity_matrix<AlphaScalar>(connection_n - i + 1),
                 "i=" + std::to_string(i) + ",N=" + std::to_string(connection_n));
    }
    for (long i = 0; i <= std::min(i_max, n_max); ++i)
        for (long n = i; n <= n_max; ++n) {
            APoly back;
            for (const auto& [m, c] : laguerre_in_sbo(i, n))
                back += sbo_l_closed(i, m) * c;
            r.record("laguerre-sbo.laguerre-in-sbo", "L_n re-expands exactly from its SBO coefficients",
                     back == laguerre(n), instance_label(i, n, sym));
        }

    // Rescaled weights exp(-c x) x^alpha, exp(-2c x) x^alpha: c^{-n} P(c x), norms c^{-2n} H.
    for (const Rational& c : {Rational(2), Rational(3)})
        for (long i = 0; i <= std::min<long>(i_max, 3); ++i) {
            const long top = std::min<long>(n_max, i + 6);
            const auto o = oracle_laguerre(i, top, alpha(), Rational(2), c);
            for (long n = i; n <= top; ++n)
                r.record("laguerre-sbo.scaling", "rescaled weights give c^{-n} P_{i;n}(c x)",
                         o.at(n) == scale_arg_monic(sbo_l_closed(i, n), c, ScaleMode::linear) &&
                             o.norms[n - i] == sbo_l_norm(i, n) * pow(c, -2 * n),
                         instance_label(i, n, sym) + ",c=" + c.str());
        }
    return r;
}

/** Hermite members from Laguerre members at alpha = -1/2 (even) and 1/2 (odd):
 *  P^H_{2i;2n}(x) = P^L_{i;n}(x^2), P^H_{2i;2n+1}(x) = x P^L_{i;n}(x^2).
 */
inline Report hermite_laguerre_sbo_bridge(long i_max, long extra)
{
    Report r("bridge");
    const QPoly x = QPoly::x();
    for (long i = 0; i <= i_max; ++i)
        for (long n = i; n <= i + extra; ++n) {
            const APoly l = sbo_l_closed(i, n);
            r.record("bridge.sbo-even", "P^H_{2i;2n}(x) = P^L_{i;n}(x^2) at alpha = -1/2",
                     sbo_h_closed(2 * i, 2 * n) == compose_square(eval_alpha(l, Rational(-1, 2))) &&
                         (i == 0 || sbo_h_closed(2 * i - 1, 2 * n) == sbo_h_closed(2 * i, 2 * n)),
                     instance_label(i, n));
            r.record("bridge.sbo-odd", "P^H_{2i;2n+1}(x) = x P^L_{i;n}(x^2) at alpha = 1/2",
                     sbo_h_closed(2 * i, 2 * n + 1) == x * compose_square(eval_alpha(l, Rational(1, 2))),
                     instance_label(i, n));
            // Norms follow the same substitution up to the unit change: sqrt(pi/2) vs Gamma(alpha+1) 2^{-(alpha+1)}.
            // Gamma(1/2) 2^{-1/2} = sqrt(pi/2) and Gamma(3/2) 2^{-3/2} = sqrt(pi/2)/4.
            r.record("bridge.sbo-norms", "Hermite norms equal Laguerre norms at alpha = -1/2 and 1/2",
                     sbo_h_norm(2 * i, 2 * n) == eval(sbo_l_norm(i, n), Rational(-1, 2)) &&
                         sbo_h_norm(2 * i, 2 * n + 1) == eval(sbo_l_norm(i, n), Rational(1, 2)) * Rational(1, 4),
                     instance_label(i, n));
        }
    for (long n = 0; n <= 10; ++n) {
        const Rational k = sign_pow(n) * pow2(2 * n) * factorial(n);
        r.record("bridge.classical-even", "H_{2n}(x) = (-1)^n 4^n n! L_n^{(-1/2)}(x^2)",
                 hermite(2 * n) == compose_square(eval_alpha(laguerre(n), Rational(-1, 2))) * k, "n=" + std::to_string(n));
        r.record("bridge.classical-odd", "H_{2n+1}(x) = (-1)^n 2^{2n+1} n! x L_n^{(1/2)}(x^2)",
                 hermite(2 * n + 1) == x * compose_square(eval_alpha(laguerre(n), Rational(1, 2))) * (k * Rational(2)),
                 "n=" + std::to_string(n));
    }
    return r;
}

} // namespace sbo

#endif
