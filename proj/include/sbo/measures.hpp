#ifndef SBO_MEASURES_HPP
#define SBO_MEASURES_HPP

#include "classical.hpp"
#include "exact.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "units.hpp"

#include <string>
#include <vector>

namespace sbo
{

enum class Family { hermite, laguerre };

/// Weight pair (w, w2): w2 is w with the exponential rate multiplied by mu.
struct MeasureSpec
{
    Family family = Family::hermite;
    Rational mu{2};
};

/// Gram matrix of a basis under the second scalar product, in a fixed unit.
template <class S>
struct GramMatrix
{
    Matrix<S> entries;
    Unit unit;

    std::size_t size() const { return entries.size(); }
    Quantity<S> at(std::size_t j, std::size_t k) const { return {entries[j][k], unit}; }
};

/** (H_j, H_k) under exp(-mu x^2).
 *
 *  Even pairs come out in sqrt(pi/mu), odd pairs in sqrt(pi/mu^3), and mixed
 *  parity pairs vanish.
 */
inline Quantity<Rational> hermite_gamma(long j, long k, const Rational& mu)
{
    if (mu.sign() <= 0)
        throw std::domain_error("mu must be positive");
    const Rational z = Rational(-1) / mu;
    if ((j + k) % 2 != 0)
        return {Rational(0), Unit::gaussian(mu)};
    const long a = j / 2, b = k / 2;
    if (j % 2 == 0)
        return {sign_pow(a + b) * pow2(2 * (a + b)) * s_func_scaled(a, b, Rational(1, 2), z, z),
                Unit::gaussian(mu)};
    return {sign_pow(a + b) * pow2(2 * (a + b + 1)) * Rational(1, 2) * s_func_scaled(a, b, Rational(3, 2), z, z),
            Unit::gaussian(mu, 3)};
}

/// (L_j, L_k) under exp(-mu x) x^alpha in units Gamma(alpha+1) mu^{-(alpha+1)}.
inline Quantity<AlphaScalar> laguerre_gamma(long j, long k, const Rational& mu)
{
    if (mu.sign() <= 0)
        throw std::domain_error("mu must be positive");
    const Rational z = Rational(-1) / mu;
    const AlphaScalar c = alpha() + AlphaScalar(Rational(1));
    return {s_func_scaled(j, k, c, z, z) / (factorial(j) * factorial(k)), Unit::gamma(mu)};
}

/// Gram matrix of H_0..H_{size-1}, every entry in sqrt(pi/mu).
inline GramMatrix<Rational> hermite_gram(std::size_t size, const Rational& mu)
{
    GramMatrix<Rational> g{zero_matrix<Rational>(size, size), Unit::gaussian(mu)};
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = 0; k < size; ++k)
            g.entries[j][k] = to_base_gaussian(hermite_gamma(j, k, mu)).value;
    return g;
}

inline GramMatrix<AlphaScalar> laguerre_gram(std::size_t size, const Rational& mu)
{
    GramMatrix<AlphaScalar> g{zero_matrix<AlphaScalar>(size, size), Unit::gamma(mu)};
    for (std::size_t j = 0; j < size; ++j)
        for (std::size_t k = j; k < size; ++k)
            g.entries[j][k] = g.entries[k][j] = laguerre_gamma(j, k, mu).value;
    return g;
}

/// Gram block [(H_{2j+p}, H_{2k+p})_2]_{j,k=i..n} at mu = 2 in its native unit.
inline GramMatrix<Rational> hermite_parity_block(int p, long i, long n)
{
    const long d = n - i + 1;
    GramMatrix<Rational> g{zero_matrix<Rational>(d, d), Unit::gaussian(Rational(2), p == 0 ? 1 : 3)};
    for (long j = 0; j < d; ++j)
        for (long k = 0; k < d; ++k)
            g.entries[j][k] = hermite_gamma(2 * (i + j) + p, 2 * (i + k) + p, Rational(2)).value;
    return g;
}

/** Determinant Z of the parity-p Hermite Gram block for half-indices i..n
 *  at mu = 2, from the gamma Hankel product; checked against a direct
 *  determinant of the block. Unit is the block unit to the power n-i+1.
 */
inline Quantity<Rational> z_quantity_hermite(int p, long i, long n)
{
    const long d = n - i + 1;
    const Unit unit = Unit::gaussian(Rational(2), p == 0 ? 1 : 3).to_the(std::max<long>(d, 1));
    if (d <= 0)
        return {Rational(1), unit};
    // Gamma(c + a) with c = 1/2 + p + 2i, reduced by sqrt(pi): (1/2)_{2i+p} (c)_a.
    const Rational c = Rational(1, 2) + Rational(p + 2 * i);
    Rational value = pow2((i + n + 2 * p) * d) * pow(pochhammer(Rational(1, 2), 2 * i + p), d) *
                     det_gamma_reduced(c, d);
    require(bareiss_det(hermite_parity_block(p, i, n).entries) == value,
            "Hermite Gram block determinant disagrees with its product form");
    return {value, unit};
}

/// Laguerre analogue at mu = 2 over Q[alpha].
inline Quantity<AlphaScalar> z_quantity_laguerre(long i, long n)
{
    const long d = n - i + 1;
    const Unit unit = Unit::gamma(Rational(2)).to_the(std::max<long>(d, 1));
    if (d <= 0)
        return {AlphaScalar(Rational(1)), unit};
    const AlphaScalar a1 = alpha() + AlphaScalar(Rational(1));
    Rational fact_sq(1);
    for (long j = i; j <= n; ++j)
        fact_sq *= factorial(j) * factorial(j);
    AlphaScalar value = pochhammer(a1, 2 * i) * det_gamma_reduced(a1 + AlphaScalar(Rational(2 * i)), d);
    AlphaScalar power = pochhammer(a1, 2 * i);
    for (long k = 1; k < d; ++k)
        value = value * power;
    value = value * (pow2(-(i + n) * d) / fact_sq);

    auto block = zero_matrix<AlphaScalar>(d, d);
    for (long j = 0; j < d; ++j)
        for (long k = 0; k < d; ++k)
            block[j][k] = laguerre_gamma(i + j, i + k, Rational(2)).value;
    require(bareiss_det(block) == value, "Laguerre Gram block determinant disagrees with its product form");
    return {value, unit};
}

/// Bivariate truncated series: coeff[j][k] multiplies s^j t^k, j + k <= order.
template <class S>
using BiSeries = Matrix<S>;

template <class S>
BiSeries<S> bi_mul(const BiSeries<S>& a, const BiSeries<S>& b, std::size_t order)
{
    auto r = zero_matrix<S>(order + 1, order + 1);
    for (std::size_t j1 = 0; j1 <= order; ++j1)
        for (std::size_t k1 = 0; j1 + k1 <= order; ++k1) {
            if (is_zero(a[j1][k1]))
                continue;
            for (std::size_t j2 = 0; j1 + j2 <= order; ++j2)
                for (std::size_t k2 = 0; j1 + k1 + j2 + k2 <= order; ++k2)
                    if (!is_zero(b[j2][k2]))
                        r[j1 + j2][k1 + k2] += a[j1][k1] * b[j2][k2];
        }
    return r;
}

/** Compares Gram entries with the expansion of (F_s, F_t)_2 for the
 *  classical generating functions, for total order <= `order`.
 *
 *  Hermite: sqrt(pi/mu) exp((2st + (1-mu)(s^2+t^2))/mu), entry gamma/(j!k!).
 *  Laguerre: Gamma(alpha+1) mu^{-alpha-1} (1-u)^{-alpha-1} with
 *  u = ((mu-1)(s+t) - (mu-2) st)/mu, entry gamma.
 */
inline Report generating_function_gamma_check(std::size_t order, const std::vector<Rational>& mus)
{
    Report r("generating-functions");
    for (const Rational& mu : mus) {
        const std::string tag = "mu=" + mu.str();
        {
            auto e = zero_matrix<Rational>(order + 1, order + 1);
            if (order >= 2) {
                e[1][1] = Rational(2) / mu;
                e[2][0] = e[0][2] = (Rational(1) - mu) / mu;
            } else if (order >= 1) {
                // nothing: 2st already exceeds total order 1
            }
            auto term = zero_matrix<Rational>(order + 1, order + 1);
            term[0][0] = Rational(1);
            auto sum = term;
            for (std::size_t n = 1; n <= order; ++n) {
                term = bi_mul(term, e, order);
                for (auto& row : term)
                    for (auto& v : row)
                        v = v / Rational(static_cast<long>(n));
                for (std::size_t j = 0; j <= order; ++j)
                    for (std::size_t k = 0; j + k <= order; ++k)
                        sum[j][k] += term[j][k];
            }
            for (std::size_t j = 0; j <= order; ++j)
                for (std::size_t k = 0; j + k <= order; ++k) {
                    Rational g = to_base_gaussian(hermite_gamma(j, k, mu)).value;
                    r.record("hermite.gram-generating-function",
                             "Hermite Gram entries match the generating-function product",
                             g == sum[j][k] * factorial(j) * factorial(k),
                             tag + ",j=" + std::to_string(j) + ",k=" + std::to_string(k));
                }
        }
        {
            auto u = zero_matrix<AlphaScalar>(order + 1, order + 1);
            if (order >= 1)
                u[1][0] = u[0][1] = AlphaScalar((mu - Rational(1)) / mu);
            if (order >= 2)
                u[1][1] = AlphaScalar(-(mu - Rational(2)) / mu);
            auto term = zero_matrix<AlphaScalar>(order + 1, order + 1);
            term[0][0] = AlphaScalar(Rational(1));
            auto sum = term;
            const AlphaScalar a1 = alpha() + AlphaScalar(Rational(1));
            for (std::size_t n = 1; n <= order; ++n) {
                term = bi_mul(term, u, order);
                const AlphaScalar coef = pochhammer(a1, n) / factorial(n);
                for (std::size_t j = 0; j <= order; ++j)
                    for (std::size_t k = 0; j + k <= order; ++k)
                        sum[j][k] += term[j][k] * coef;
            }
            for (std::size_t j = 0; j <= order; ++j)
                for (std::size_t k = 0; j + k <= order; ++k)
                    r.record("laguerre.gram-generating-function",
                             "Laguerre Gram entries match the generating-function product",
                             laguerre_gamma(j, k, mu).value == sum[j][k],
                             tag + ",j=" + std::to_string(j) + ",k=" + std::to_string(k));
        }
    }
    return r;
}

/// Exact positivity of all leading principal minors.
template <class S>
bool leading_minors_positive(const Matrix<S>& m)
{
    for (std::size_t k = 1; k <= m.size(); ++k) {
        Matrix<S> sub(k);
        for (std::size_t j = 0; j < k; ++j)
            sub[j].assign(m[j].begin(), m[j].begin() + k);
        if (bareiss_det(sub).sign() <= 0)
            return false;
    }
    return true;
}

inline GramMatrix<Rational> eval_alpha(const GramMatrix<AlphaScalar>& g, const Rational& a0)
{
    GramMatrix<Rational> r{zero_matrix<Rational>(g.size(), g.size()), g.unit};
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t k = 0; k < g.size(); ++k)
            r.entries[j][k] = eval(g.entries[j][k], a0);
    return r;
}

/** Closed values at mu = 2, special cases mu = 1, the determinant layer
 *  and positive definiteness.
 */
inline Report verify_measures(long n_max)
{
    Report r("measures");
    const Rational two(2);
    const AlphaScalar a1 = alpha() + AlphaScalar(Rational(1));
    for (long j = 0; j <= n_max; ++j)
        for (long k = 0; k <= n_max; ++k) {
            const std::string lbl = "j=" + std::to_string(j) + ",k=" + std::to_string(k);
            // mu = 2: (-1)^{[j/2]+[k/2]} 2^s (1/2)_s in sqrt(pi/2), j + k = 2s.
            Rational expect(0);
            if ((j + k) % 2 == 0) {
                const long s = (j + k) / 2;
                expect = sign_pow(j / 2 + k / 2) * pow2(s) * pochhammer(Rational(1, 2), s);
            }
            r.record("hermite.gram-at-two", "Hermite Gram entries at mu=2 match the closed gamma form",
                     to_base_gaussian(hermite_gamma(j, k, two)).value == expect, lbl);
            r.record("laguerre.gram-at-two", "Laguerre Gram entries at mu=2 equal 2^{-(j+k)} (alpha+1)_{j+k}/(j!k!)",
                     laguerre_gamma(j, k, two).value ==
                         pochhammer(a1, j + k) * (pow2(-(j + k)) / (factorial(j) * factorial(k))),
                     lbl);
            // mu = 1 reduces to classical orthogonality: h_n = 2^n n! sqrt(pi), (alpha+1)_n/n!.
            const Rational hexp = j == k ? pow2(j) * factorial(j) : Rational(0);
            r.record("hermite.gram-at-one", "Hermite Gram at mu=1 is the classical norm diagonal",
                     to_base_gaussian(hermite_gamma(j, k, Rational(1))).value == hexp, lbl);
            const AlphaScalar lexp = j == k ? pochhammer(a1, j) / factorial(j) : AlphaScalar();
            r.record("laguerre.gram-at-one", "Laguerre Gram at mu=1 is the classical norm diagonal",
                     laguerre_gamma(j, k, Rational(1)).value == lexp, lbl);
        }

    // Block determinants and their ratios, which are the norms times k_n^2.
    for (long i = 0; 2 * i <= n_max; ++i)
        for (long n = i; 2 * n + 1 <= n_max + 1; ++n)
            for (int p = 0; p <= 1; ++p) {
                const std::string lbl = "parity=" + std::to_string(p) + "," + instance_label(i, n);
                r.attempt("hermite.block-determinant", "Hermite Gram block determinant equals its product form", lbl,
                          [&] {
                              auto z = z_quantity_hermite(p, i, n);
                              Rational ratio = z.value / (n > i ? z_quantity_hermite(p, i, n - 1).value : Rational(1));
                              // Norm of the monic member in sqrt(pi/2): Z ratio / k^2, odd unit halves.
                              Rational norm = ratio * pow2(-2 * (2 * n + p)) * (p == 1 ? Rational(1, 2) : Rational(1));
                              Rational expect = pow2(-(2 * n + p)) * factorial(n - i) *
                                                pochhammer(Rational(1, 2), i + n + p);
                              return norm == expect;
                          });
            }
    for (long i = 0; i <= n_max; ++i)
        for (long n = i; n <= n_max; ++n)
            r.attempt("laguerre.block-determinant", "Laguerre Gram block determinant equals its product form",
                      instance_label(i, n), [&] {
                          auto z = z_quantity_laguerre(i, n);
                          AlphaScalar prev =
                              n > i ? z_quantity_laguerre(i, n - 1).value : AlphaScalar(Rational(1));
                          // Z_n = k_n^2 H_n Z_{n-1}, k_n^2 = 1/(n!)^2.
                          AlphaScalar norm = pochhammer(a1, i + n) * (pow2(-2 * n) * factorial(n - i));
                          return z.value == prev * norm / (factorial(n) * factorial(n));
                      });

    r.record("hermite.gram-positive-definite", "leading minors of the mu=2 Hermite Gram matrix are positive",
             leading_minors_positive(hermite_gram(8, two).entries), "size<=8");
    const auto lg = laguerre_gram(8, two);
    for (const Rational& a0 : {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(3, 2)})
        r.record("laguerre.gram-positive-definite", "leading minors of the mu=2 Laguerre Gram matrix are positive",
                 leading_minors_positive(eval_alpha(lg, a0).entries), "size<=8,alpha=" + a0.str());
    return r;
}

} // namespace sbo

#endif
