#ifndef SBO_SBO_HERMITE_HPP
#define SBO_SBO_HERMITE_HPP

#include "classical.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "memo.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "units.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sbo
{

/** Hermite SBO polynomials for w = exp(-x^2), w2 = exp(-2x^2).
 *
 *  Degree n = 2N + p. Members with i + n odd coincide with (i+1, n), so every
 *  pair reduces to the half-index I: P_{2I;2N} = P_{2I-1;2N} and
 *  P_{2I;2N+1} = P_{2I+1;2N+1}.
 */
struct HermiteIndex
{
    int parity = 0;
    long half_i = 0;
    long half_n = 0;
};

inline HermiteIndex hermite_index(long i, long n)
{
    check_index(i, n);
    const int p = static_cast<int>(n % 2);
    return {p, p == 0 ? (i + 1) / 2 : i / 2, n / 2};
}

/// Representative with i + n even.
inline long hermite_canonical_i(long i, long n)
{
    check_index(i, n);
    return (i + n) % 2 == 0 ? i : i + 1;
}

/// Connection coefficients with classical Hermite polynomials, degree-p class.
inline QPoly sbo_h_closed(long i, long n)
{
    static MemoTable<std::pair<long, long>, QPoly> memo;
    const auto [p, I, N] = hermite_index(i, n);
    return memo.get({2 * I + p, n}, [p = p, I = I, N = N, n] {
        const Rational c = Rational(1, 2) + Rational(p + I);
        QPoly r;
        for (long m = I; m <= N; ++m)
            r += hermite(2 * m + p) *
                 (pow2(-(p + N + m)) * binomial(N - I, m - I) * pochhammer(c + Rational(m), N - m));
        require(r.degree() == n && r.is_monic(), "Hermite SBO closed form is not monic");
        return r;
    });
}

/// Norm (P_{i;n}, P_{i;n})_2 in units sqrt(pi/2).
inline Rational sbo_h_norm(long i, long n)
{
    const auto [p, I, N] = hermite_index(i, n);
    return pow2(-(2 * N + p)) * factorial(N - I) * pochhammer(Rational(1, 2), I + N + p);
}

inline Quantity<Rational> sbo_h_norm_quantity(long i, long n)
{
    return {sbo_h_norm(i, n), Unit::gaussian(Rational(2))};
}

/** H_n over the same-parity members P_{i;m}, m <= n: pairs (m, coefficient). */
inline std::vector<std::pair<long, Rational>> hermite_in_sbo(long i, long n)
{
    const auto [p, I, N] = hermite_index(i, n);
    const Rational c = Rational(1, 2) + Rational(p + I);
    std::vector<std::pair<long, Rational>> row;
    for (long m = I; m <= N; ++m)
        row.emplace_back(2 * m + p, sign_pow(N - m) * pow2(p + N + m) * binomial(N - I, m - I) *
                                        pochhammer(c + Rational(m), N - m));
    return row;
}

/// Both triangular coefficient matrices between {H_{2m+p}} and {P_{2I+p;2m+p}}, I <= m <= N.
template <class S>
struct BasisChange
{
    Matrix<S> forward; ///< [m][n]: coefficient of the m-th classical polynomial in the n-th SBO member
    Matrix<S> inverse; ///< [m][n]: coefficient of the m-th SBO member in the n-th classical polynomial
};

inline BasisChange<Rational> hermite_sbo_connection(int p, long I, long N)
{
    const long d = N - I + 1;
    BasisChange<Rational> b{zero_matrix<Rational>(d, d), zero_matrix<Rational>(d, d)};
    for (long n = I; n <= N; ++n) {
        const long deg = 2 * n + p;
        const QPoly q = sbo_h_closed(2 * I + p, deg);
        // Read the forward column off the polynomial by peeling Hermite terms.
        QPoly rest = q;
        for (long m = n; m >= I; --m) {
            const Rational coef = rest.coeff(2 * m + p) / hermite(2 * m + p).leading();
            b.forward[m - I][n - I] = coef;
            rest -= hermite(2 * m + p) * coef;
        }
        require(rest.is_zero(), "SBO member leaves the Hermite span of its parity class");
        for (const auto& [m, coef] : hermite_in_sbo(2 * I + p, deg))
            b.inverse[(m - p) / 2 - I][n - I] = coef;
    }
    return b;
}

/// kappa_{i;n} = (n - (-1)^{i+n} i) / 2.
inline Rational kappa_h(long i, long n)
{
    check_index(i, n);
    return (Rational(n) - sign_pow(i + n) * Rational(i)) / Rational(2);
}

enum class Route { closed, diff1, five_term, four_term, oracle };

inline const char* to_string(Route r)
{
    switch (r) {
    case Route::closed: return "closed";
    case Route::diff1: return "diff1";
    case Route::five_term: return "five-term";
    case Route::four_term: return "four-term";
    case Route::oracle: return "oracle";
    }
    return "closed";
}

/// Members P_{i;i..n_max} with their norms (units sqrt(pi/2)).
struct HermiteSBOFamily
{
    long i = 0;
    std::vector<QPoly> polys; ///< polys[n - i]
    std::vector<Rational> norms;
    Route route = Route::closed;

    long n_max() const { return i + static_cast<long>(polys.size()) - 1; }
    const QPoly& at(long n) const { return polys.at(n - i); }
};

namespace detail
{

inline HermiteSBOFamily hermite_family_with_norms(long i, std::vector<QPoly> polys, Route route)
{
    HermiteSBOFamily f{i, std::move(polys), {}, route};
    for (long n = i; n <= f.n_max(); ++n)
        f.norms.push_back(sbo_h_norm(i, n));
    return f;
}

} // namespace detail

inline HermiteSBOFamily sbo_h_via_closed(long i, long n_max)
{
    std::vector<QPoly> polys;
    for (long n = i; n <= n_max; ++n)
        polys.push_back(sbo_h_closed(i, n));
    return detail::hermite_family_with_norms(i, std::move(polys), Route::closed);
}

/// P_{i;n+1} = (2x P_{i;n} + kappa_{i;n} P_{i;n-1} - P'_{i;n}) / 2 from P_{i;i} = 2^{-i} H_i.
inline HermiteSBOFamily sbo_h_via_diff1(long i, long n_max)
{
    check_index(i, n_max);
    const QPoly x = QPoly::x();
    std::vector<QPoly> polys{hermite_monic(i)};
    for (long n = i; n < n_max; ++n) {
        const QPoly& cur = polys.back();
        QPoly next = x * cur * Rational(2) - derivative(cur);
        if (n > i)
            next += polys[n - 1 - i] * kappa_h(i, n);
        polys.push_back(next / Rational(2));
    }
    return detail::hermite_family_with_norms(i, std::move(polys), Route::diff1);
}

/** P_{n+2} = x P_{n+1} - P_n/4 - (kappa_n/2) x P_{n-1} + (kappa_n kappa_{n-1}/4) P_{n-2},
 *  seeded with P_{i;i} = 2^{-i} H_i and P_{i;i+1} = 2^{-(i+1)} H_{i+1}.
 */
inline HermiteSBOFamily sbo_h_via_five_term(long i, long n_max)
{
    check_index(i, n_max);
    const QPoly x = QPoly::x();
    std::vector<QPoly> polys{hermite_monic(i)};
    if (n_max > i)
        polys.push_back(hermite_monic(i + 1));
    auto get = [&](long m) { return m < i ? QPoly() : polys[m - i]; };
    for (long n = i; n + 2 <= n_max; ++n) {
        const Rational k = kappa_h(i, n);
        const Rational kk = n > i ? k * kappa_h(i, n - 1) : Rational(0);
        polys.push_back(x * get(n + 1) - get(n) * Rational(1, 4) - x * get(n - 1) * (k / Rational(2)) +
                        get(n - 2) * (kk / Rational(4)));
    }
    return detail::hermite_family_with_norms(i, std::move(polys), Route::five_term);
}

/** Table T[i][n], 0 <= i <= n <= n_max, from the boundary P_{n;n} = 2^{-n} H_n:
 *
 *    P_{i;n} = P_{i+2;n} - ((n-i-2)/4) P_{i+2;n-2} + ((i+n-1)/4) P_{i;n-2},  i + n even,
 *
 *  and P_{i;n} = P_{i+1;n} when i + n is odd.
 */
inline std::vector<std::vector<QPoly>> sbo_h_four_term_table(long n_max)
{
    std::vector<std::vector<QPoly>> t(n_max + 1, std::vector<QPoly>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        t[n][n] = hermite_monic(n);
        for (long i = n - 2; i >= 0; i -= 2) {
            QPoly v = t[i + 2][n] + t[i][n - 2] * Rational(i + n - 1, 4);
            if (n - i - 2 > 0)
                v -= t[i + 2][n - 2] * Rational(n - i - 2, 4);
            t[i][n] = std::move(v);
        }
        for (long i = n - 1; i >= 0; i -= 2)
            t[i][n] = t[i + 1][n];
    }
    return t;
}

inline HermiteSBOFamily sbo_h_via_four_term(long i, long n_max)
{
    check_index(i, n_max);
    auto t = sbo_h_four_term_table(n_max);
    std::vector<QPoly> polys;
    for (long n = i; n <= n_max; ++n)
        polys.push_back(t[i][n]);
    return detail::hermite_family_with_norms(i, std::move(polys), Route::four_term);
}

/// The definitional construction; norms are the ones the oracle measured.
inline HermiteSBOFamily sbo_h_via_oracle(long i, long n_max)
{
    auto o = oracle_hermite(i, n_max);
    return {i, std::move(o.polys), std::move(o.norms), Route::oracle};
}

inline HermiteSBOFamily sbo_h_family(long i, long n_max, Route route = Route::four_term)
{
    switch (route) {
    case Route::closed: return sbo_h_via_closed(i, n_max);
    case Route::diff1: return sbo_h_via_diff1(i, n_max);
    case Route::five_term: return sbo_h_via_five_term(i, n_max);
    case Route::four_term: return sbo_h_via_four_term(i, n_max);
    case Route::oracle: return sbo_h_via_oracle(i, n_max);
    }
    return sbo_h_via_four_term(i, n_max);
}

/** Step in the half-index I, degree class p, 0 <= I < N:
 *  P_{I+1} = P_I - 2^{-N} (1/2 + p + 2I) (N-I-1)! sum_{l=I}^{N-1} 2^l/(l-I)! P_{I;l},
 *  with the right side built from closed forms of half-index I.
 */
inline QPoly sbo_h_step_in_i(int p, long I, long N)
{
    if (I < 0 || I >= N)
        throw IndexError("summed step needs 0 <= I < N");
    QPoly sum;
    for (long l = I; l < N; ++l)
        sum += sbo_h_closed(2 * I + p, 2 * l + p) * (pow2(l) / factorial(l - I));
    return sbo_h_closed(2 * I + p, 2 * N + p) -
           sum * (pow2(-N) * (Rational(1, 2) + Rational(p + 2 * I)) * factorial(N - I - 1));
}

/** Members P_{2;2N} (p = 0) and P_{3;2N+1} (p = 1), N >= 1, expanded over
 *  G_k = 2^{-k/2} H_k(sqrt(2) x).
 */
inline QPoly sbo_h_sqrt2_expansion(int p, long N)
{
    if (N < 1)
        throw IndexError("expansion over H_k(sqrt(2) x) needs N >= 1");
    QPoly sum;
    for (long l = 0; l < N; ++l)
        sum += hermite_sqrt2(2 * l + p) * (pow2(-l - p) / factorial(l));
    const Rational lead = p == 0 ? Rational(1) : Rational(3);
    return hermite_sqrt2(2 * N + p) * pow2(-(2 * N + p)) - sum * (pow2(-(N + 1)) * lead * factorial(N - 1));
}

/// p_{I;I..n_max} from p_{I;I} = 1, p_{I;I-1} = 0 and the three-term recurrence.
struct PZeroTable
{
    long i = 0;
    std::vector<Rational> values; ///< values[n - i]

    const Rational& at(long n) const { return values.at(n - i); }
};

inline PZeroTable p_table(long I, long n_max)
{
    check_index(I, n_max);
    PZeroTable t{I, {Rational(1)}};
    Rational prev(0);
    for (long n = I; n < n_max; ++n) {
        Rational next = t.values.back() + Rational(2 * (n - I) * (2 * n + 2 * I - 1)) * prev;
        prev = t.values.back();
        t.values.push_back(next);
    }
    return t;
}

/// P_{2I;2N}(0) = (-1)^N 2^{-2(N-I)} (1/2)_I p_{I;N}.
inline Rational sbo_h_zero_from_p(long I, long N)
{
    return sign_pow(N) * pow2(-2 * (N - I)) * pochhammer(Rational(1, 2), I) * p_table(I, N).at(N);
}

/** (-1)^I 2^{-(N-I)} (1/2)_I (1/2+2I)_{N-I} F(-(N-I), b; 1/2+2I; 2).
 *
 *  The value at zero needs b = 1/2 + I; b = 1/2 is kept callable so the
 *  discrepancy can be shown.
 */
inline Rational sbo_h_zero_hypergeometric(long I, long N, const Rational& b)
{
    check_index(I, N);
    const Rational c = Rational(1, 2) + Rational(2 * I);
    return sign_pow(I) * pow2(-(N - I)) * pochhammer(Rational(1, 2), I) * hyp2f1_scaled(N - I, b, c, Rational(2));
}

inline Rational sbo_h_zero_hypergeometric(long I, long N)
{
    return sbo_h_zero_hypergeometric(I, N, Rational(1, 2) + Rational(I));
}

/** P_{i;n}(0), computed directly, from the p-recurrence and from the
 *  hypergeometric sum; the three must agree.
 */
inline Rational sbo_h_zero_value(long i, long n)
{
    const auto [p, I, N] = hermite_index(i, n);
    const Rational direct = eval(sbo_h_closed(i, n), Rational(0));
    if (p == 1) {
        require(direct.is_zero(), "odd Hermite SBO member does not vanish at zero");
        return direct;
    }
    require(direct == sbo_h_zero_from_p(I, N), "value at zero disagrees with the p-recurrence");
    require(direct == sbo_h_zero_hypergeometric(I, N), "value at zero disagrees with the hypergeometric sum");
    return direct;
}

/** (x^m, P_{i;n}) = 0 for m < i in units sqrt(pi), and the second-product
 *  Gram of each family is diagonal with the closed norms, in units sqrt(pi/2).
 */
inline Report verify_sbo_h_orthogonality(long i_max, long n_max, long i_min = 0)
{
    Report r("sbo-hermite");
    const auto m1 = gaussian_moments(Rational(1), 2 * n_max + 2);
    const auto m2 = gaussian_moments(Rational(2), 2 * n_max + 2);
    for (long i = i_min; i <= i_max; ++i)
        for (long n = i; n <= n_max; ++n) {
            const QPoly pn = sbo_h_closed(i, n);
            bool ok = true;
            for (long m = 0; m < i; ++m)
                ok = ok && moment_against(pn, m, m1).value.is_zero();
            r.record("hermite-sbo.moment-constraints", "(x^m, P_{i;n}) = 0 for m < i", ok, instance_label(i, n));
            for (long k = i; k <= n; ++k) {
                const Quantity<Rational> g = inner_product(sbo_h_closed(i, k), pn, m2);
                const Quantity<Rational> expect =
                    k == n ? sbo_h_norm_quantity(i, n) : Quantity<Rational>{Rational(0), m2.unit};
                r.record("hermite-sbo.mutual-orthogonality", "(P_{i;k}, P_{i;n})_2 = H_{i;n} delta_{k,n}",
                         g == expect, instance_label(i, n) + ",k=" + std::to_string(k));
            }
        }
    return r;
}

/// Every identity for one family index i and degrees i..i+extra.
inline Report verify_sbo_hermite_family(long i, long extra)
{
    Report r("sbo-hermite");
    const long n_max = i + extra;
    const QPoly x = QPoly::x();
    const auto closed = sbo_h_via_closed(i, n_max + 2);
    const auto diff1 = sbo_h_via_diff1(i, n_max);
    const auto five = sbo_h_via_five_term(i, n_max);
    const auto four = sbo_h_via_four_term(i, n_max);
    const auto oracle = sbo_h_via_oracle(i, n_max);
    auto P = [&](long n) { return n < i ? QPoly() : closed.at(n); };

    for (long n = i; n <= n_max; ++n) {
        const std::string lbl = instance_label(i, n);
        const QPoly& pn = closed.at(n);
        r.record("hermite-sbo.route-diff1", "first-order differentiation route equals the closed form",
                 diff1.at(n) == pn, lbl);
        r.record("hermite-sbo.route-five-term", "five-term recurrence route equals the closed form",
                 five.at(n) == pn, lbl);
        r.record("hermite-sbo.route-four-term", "four-term recurrence route equals the closed form",
                 four.at(n) == pn, lbl);
        r.record("hermite-sbo.route-oracle", "Gram-system oracle equals the closed form", oracle.at(n) == pn, lbl);
        r.record("hermite-sbo.oracle-norm", "oracle norm equals the closed norm",
                 oracle.norms[n - i] == sbo_h_norm(i, n), lbl);
        r.record("hermite-sbo.norm-positive", "norms are positive", sbo_h_norm(i, n).sign() > 0, lbl);

        const Parity want = n % 2 == 0 ? Parity::even : Parity::odd;
        r.record("hermite-sbo.parity", "P_{i;n}(-x) = (-1)^n P_{i;n}(x)", parity(pn) == want, lbl);
        if (i >= 1 && (i + n) % 2 == 0)
            r.record("hermite-sbo.parity-index", "P_{i-1;n} = P_{i;n} when i + n is even",
                     sbo_h_closed(i - 1, n) == pn, lbl);

        const auto [p, I, N] = hermite_index(i, n);
        const Rational s_expect = p == 0 ? Rational(-1, 4) * Rational(I * (2 * I - 1) + N * (2 * N - 1))
                                         : Rational(-1, 4) * Rational(I * (2 * I + 1) + N * (2 * N + 1));
        r.record("hermite-sbo.subleading", "coefficient of x^{n-1} vanishes and x^{n-2} matches the closed value",
                 (n < 1 || pn.coeff(n - 1).is_zero()) && (n < 2 || pn.coeff(n - 2) == s_expect), lbl);

        const Rational k = kappa_h(i, n);
        if (n > i)
            r.record("hermite-sbo.kappa-norm-ratio", "kappa_{i;n} = 2 H_{i;n} / H_{i;n-1}",
                     k == Rational(2) * sbo_h_norm(i, n) / sbo_h_norm(i, n - 1), lbl);
        else
            r.record("hermite-sbo.kappa-boundary", "kappa_{i;i} = 0", k.is_zero(), lbl);
        const Rational kk = n > i ? k * kappa_h(i, n - 1) : Rational(0);
        const QPoly d1 = derivative(pn), d2 = derivative(d1);
        r.record("hermite-sbo.diff1", "P' = -2 P_{n+1} + 2x P_n + kappa P_{n-1}",
                 d1 == P(n + 1) * Rational(-2) + x * pn * Rational(2) + P(n - 1) * k, lbl);
        r.record("hermite-sbo.x-derivative", "x P' = -2 P_{n+2} + (4x^2-1)/2 P_n + (kappa kappa'/2) P_{n-2}",
                 x * d1 == P(n + 2) * Rational(-2) + (x * x * Rational(2) - QPoly(Rational(1, 2))) * pn +
                               P(n - 2) * (kk / Rational(2)),
                 lbl);
        r.record("hermite-sbo.second-order", "P'' - 2x P' + 2n P = 2 kappa kappa' P_{n-2}",
                 d2 - x * d1 * Rational(2) + pn * Rational(2 * n) == P(n - 2) * (kk * Rational(2)), lbl);
        r.record("hermite-sbo.five-term", "P_{n+2} - x P_{n+1} + P_n/4 + (kappa/2) x P_{n-1} - (kappa kappa'/4) P_{n-2} = 0",
                 (P(n + 2) - x * P(n + 1) + pn * Rational(1, 4) + x * P(n - 1) * (k / Rational(2)) -
                  P(n - 2) * (kk / Rational(4)))
                     .is_zero(),
                 lbl);

        // Values at zero, three ways.
        r.attempt("hermite-sbo.zero-value", "value at zero agrees directly, by recurrence and by the 2F1 sum", lbl,
                  [&] {
                      sbo_h_zero_value(i, n);
                      return true;
                  });
    }

    // Seeds and low members.
    r.record("hermite-sbo.boundary", "P_{i;i} = 2^{-i} H_i and P_{i;i+1} = 2^{-(i+1)} H_{i+1}",
             closed.at(i) == hermite_monic(i) && closed.at(i + 1) == hermite_monic(i + 1), instance_label(i, i));
    r.record("hermite-sbo.seed-gap-two", "P_{i;i+2} = 2^{-(i+2)} (H_{i+2} + (1+2i) H_i)",
             closed.at(i + 2) == (hermite(i + 2) + hermite(i) * Rational(1 + 2 * i)) * pow2(-(i + 2)),
             instance_label(i, i + 2));
    if (i + 3 <= n_max + 2)
        r.record("hermite-sbo.seed-gap-three", "P_{i;i+3} = 2^{-(i+3)} (H_{i+3} + (3+2i) H_{i+1})",
                 sbo_h_closed(i, i + 3) == (hermite(i + 3) + hermite(i + 1) * Rational(3 + 2 * i)) * pow2(-(i + 3)),
                 instance_label(i, i + 3));
    return r;
}

/** Identities that span several family indices: degeneracies at small i,
 *  summed steps in i, the four-term table, p-tables, connection inverses
 *  and the rescaled-weight law.
 */
inline Report verify_sbo_hermite_global(long i_max, long n_max)
{
    Report r("sbo-hermite");
    const QPoly x = QPoly::x();
    for (long n = 0; n <= n_max; ++n) {
        const std::string lbl = "n=" + std::to_string(n);
        r.record("hermite-sbo.i0-degeneracy", "P_{0;n} = 2^{-3n/2} H_n(sqrt(2) x)",
                 sbo_h_closed(0, n) == hermite_sqrt2(n) * pow2(-n), lbl);
        if (n % 2 == 1)
            r.record("hermite-sbo.i1-odd-degeneracy", "P_{1;2N+1} = P_{0;2N+1}", sbo_h_closed(1, n) == sbo_h_closed(0, n),
                     lbl);
        // Classical consequences at i = 0.
        const QPoly h = hermite(n), hp = derivative(h);
        const QPoly hm1 = n >= 1 ? hermite(n - 1) : QPoly(), hm2 = n >= 2 ? hermite(n - 2) : QPoly();
        r.record("hermite-sbo.i0-diff1", "H_n' = -H_{n+1}/2 + x H_n + n H_{n-1}",
                 hp == hermite(n + 1) * Rational(-1, 2) + x * h + hm1 * Rational(n), lbl);
        r.record("hermite-sbo.i0-x-derivative", "4x H_n' = -H_{n+2} + 2(2x^2-1) H_n + 4n(n-1) H_{n-2}",
                 x * hp * Rational(4) ==
                     -hermite(n + 2) + (x * x * Rational(4) - QPoly(Rational(2))) * h + hm2 * Rational(4 * n * (n - 1)),
                 lbl);
        r.record("hermite-sbo.i0-second-order", "H_n'' - x H_n' + n H_n = 2n(n-1) H_{n-2}",
                 derivative(hp) - x * hp + h * Rational(n) == hm2 * Rational(2 * n * (n - 1)), lbl);
        r.record("hermite-sbo.i0-five-term", "H_{n+2} - 2x H_{n+1} + 2 H_n + 4n x H_{n-1} - 4n(n-1) H_{n-2} = 0",
                 (hermite(n + 2) - x * hermite(n + 1) * Rational(2) + h * Rational(2) + x * hm1 * Rational(4 * n) -
                  hm2 * Rational(4 * n * (n - 1)))
                     .is_zero(),
                 lbl);
        r.record("hermite-sbo.sqrt2-connection", "H_n(sqrt(2)x) = sum 2^{(n-2m)/2} n!/(m!(n-2m)!) H_{n-2m}(x)",
                 [&] {
                     // Compare 2^{-n/2} H_n(sqrt(2) x) with both sides divided by 2^{n/2}.
                     QPoly s;
                     for (long m = 0; 2 * m <= n; ++m)
                         s += hermite(n - 2 * m) * (pow2(-m) * factorial(n) / (factorial(m) * factorial(n - 2 * m)));
                     QPoly back;
                     for (long m = 0; 2 * m <= n; ++m)
                         back += hermite_sqrt2(n - 2 * m) *
                                 (sign_pow(m) * pow2(-m) * factorial(n) / (factorial(m) * factorial(n - 2 * m)));
                     return s == hermite_sqrt2(n) && back == h;
                 }(),
                 lbl);
    }

    // Four-term table against closed forms, and the stepping sums.
    const auto table = sbo_h_four_term_table(n_max);
    for (long n = 0; n <= n_max; ++n)
        for (long i = 0; i <= n; ++i) {
            r.record("hermite-sbo.four-term-table", "four-term table entry equals the closed form",
                     table[i][n] == sbo_h_closed(i, n), instance_label(i, n));
            if ((i + n) % 2 == 0 && i + 2 <= n)
                r.record("hermite-sbo.four-term", "4P_{i+2;n} - 4P_{i;n} - (n-i-2) P_{i+2;n-2} + (i+n-1) P_{i;n-2} = 0",
                         (sbo_h_closed(i + 2, n) * Rational(4) - sbo_h_closed(i, n) * Rational(4) -
                          (n - i - 2 > 0 ? sbo_h_closed(i + 2, n - 2) * Rational(n - i - 2) : QPoly()) +
                          sbo_h_closed(i, n - 2) * Rational(i + n - 1))
                             .is_zero(),
                         instance_label(i, n));
        }
    for (int p = 0; p <= 1; ++p)
        for (long I = 0; I <= 2; ++I)
            for (long N = I + 1; 2 * N + p <= n_max; ++N)
                r.record("hermite-sbo.summed-step-in-i", "P_{I+1;N} from a weighted sum over P_{I;l}, l < N",
                         sbo_h_step_in_i(p, I, N) == sbo_h_closed(2 * (I + 1) + p, 2 * N + p),
                         "parity=" + std::to_string(p) + ",I=" + std::to_string(I) + ",N=" + std::to_string(N));
    for (int p = 0; p <= 1; ++p)
        for (long N = 1; 2 * N + p <= n_max; ++N)
            r.record("hermite-sbo.sqrt2-expansion", "P_{2;2N} and P_{3;2N+1} over H_k(sqrt(2) x)",
                     sbo_h_sqrt2_expansion(p, N) == sbo_h_closed(2 + p, 2 * N + p),
                     "parity=" + std::to_string(p) + ",N=" + std::to_string(N));

    // p-table: boundary values, closed low rows, and the cross recurrence.
    const long half = n_max / 2;
    for (long I = 0; I <= half; ++I) {
        const auto t = p_table(I, half + 1);
        const Rational ii(I);
        r.record("hermite-sbo.p-boundary", "p_{i;i} = 1 and p_{0;n} = 2^n (1/2)_n",
                 t.at(I) == Rational(1) && p_table(0, I).at(I) == pow2(I) * pochhammer(Rational(1, 2), I),
                 "i=" + std::to_string(I));
        bool rows = t.at(I + 1) == Rational(1);
        if (I + 2 <= half + 1)
            rows = rows && t.at(I + 2) == Rational(8) * ii + Rational(3);
        if (I + 3 <= half + 1)
            rows = rows && t.at(I + 3) == Rational(24) * ii + Rational(15);
        if (I + 4 <= half + 1)
            rows = rows && t.at(I + 4) == Rational(192) * ii * ii + Rational(336) * ii + Rational(105);
        r.record("hermite-sbo.p-rows", "p_{i;i+1..i+4} match their polynomials in i", rows, "i=" + std::to_string(I));
        r.record("hermite-sbo.zero-boundary", "P_{2i;2i}(0) = (-1)^i (1/2)_i and P_{0;2i}(0) = (-1)^i (2i)!/(2^{3i} i!)",
                 eval(sbo_h_closed(2 * I, 2 * I), Rational(0)) == sign_pow(I) * pochhammer(Rational(1, 2), I) &&
                     eval(sbo_h_closed(0, 2 * I), Rational(0)) ==
                         sign_pow(I) * factorial(2 * I) / (pow2(3 * I) * factorial(I)),
                 "i=" + std::to_string(I));
        for (long N = I + 1; N <= half; ++N) {
            auto pv = [](long a, long b) { return b < a ? Rational(0) : p_table(a, b).at(b); };
            const Rational lhs = Rational(2 * (2 * I + 1)) * pv(I + 1, N) - pv(I, N) +
                                 Rational(4 * (2 * I + 1) * (N - I - 1)) * pv(I + 1, N - 1) -
                                 Rational(2 * I + 2 * N - 1) * pv(I, N - 1);
            r.record("hermite-sbo.p-cross-recurrence", "cross recurrence of p in (i, n) holds", lhs.is_zero(),
                     instance_label(I, N));
        }
    }
    // The printed lower-parameter variant of the 2F1 value.
    r.expect_negative("hermite-sbo.zero-value-printed-parameter",
                      "2F1 with second parameter 1/2 reproduces P_{2;4}(0) = 1/8",
                      sbo_h_zero_hypergeometric(1, 2, Rational(1, 2)) == Rational(1, 8), "i=1,n=2");
    r.annotate("hermite-sbo.zero-value-printed-parameter",
               "parameter 1/2 gives " + sbo_h_zero_hypergeometric(1, 2, Rational(1, 2)).str() +
                   "; parameter 1/2+i gives " + sbo_h_zero_hypergeometric(1, 2).str());

    // Connection matrices with classical Hermite polynomials.
    for (int p = 0; p <= 1; ++p)
        for (long I = 0; 2 * I + p <= 20; ++I) {
            const long N = (20 - p) / 2;
            const auto b = hermite_sbo_connection(p, I, N);
            r.record("hermite-sbo.connection-inverse", "SBO-to-Hermite and Hermite-to-SBO matrices are inverse",
                     matmul(b.forward, b.inverse) == identity_matrix<Rational>(N - I + 1),
                     "parity=" + std::to_string(p) + ",I=" + std::to_string(I) + ",N=" + std::to_string(N));
        }
    for (long i = 0; i <= std::min<long>(i_max, n_max); ++i)
        for (long n = i; n <= n_max; ++n) {
            QPoly back;
            for (const auto& [m, c] : hermite_in_sbo(i, n))
                back += sbo_h_closed(i, m) * c;
            r.record("hermite-sbo.hermite-in-sbo", "H_n re-expands exactly from its SBO coefficients",
                     back == hermite(n), instance_label(i, n));
        }

    // Rescaled weights exp(-c x^2), exp(-2c x^2): c^{-n/2} P(sqrt(c) x), norms c^{-n} H in sqrt(pi/(2c)).
    for (const Rational& c : {Rational(4), Rational(1, 4), Rational(9, 4)})
        for (long i = 0; i <= std::min<long>(i_max, 3); ++i) {
            const long top = std::min<long>(n_max, i + 6);
            const auto o = oracle_hermite(i, top, Rational(2), c);
            for (long n = i; n <= top; ++n)
                r.record("hermite-sbo.scaling", "rescaled weights give c^{-n/2} P_{i;n}(sqrt(c) x)",
                         o.at(n) == scale_arg_monic(sbo_h_closed(i, n), c, ScaleMode::sqrt) &&
                             o.norms[n - i] == pow(c, -n) * sbo_h_norm(i, n),
                         instance_label(i, n) + ",c=" + c.str());
        }
    return r;
}

} // namespace sbo

#endif
