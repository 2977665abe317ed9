#ifndef SBO_EXACT_HPP
#define SBO_EXACT_HPP

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "report.hpp"

#include <random>
#include <string>
#include <vector>

namespace sbo
{

/// The indeterminate alpha as an element of Q[alpha].
inline AlphaScalar alpha() { return AlphaScalar::x(); }

inline bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

/// Rising factorial (z)_n = z (z+1) ... (z+n-1), with (z)_0 = 1.
template <class S>
S pochhammer(const S& z, long n)
{
    if (n < 0)
        throw std::domain_error("negative Pochhammer length");
    S acc = from_int<S>(1);
    for (long k = 0; k < n; ++k)
        acc = acc * (z + from_int<S>(k));
    return acc;
}

/// Gamma(c+j) / Gamma(c+k) for integers j, k, evaluated as a finite product.
inline Rational gamma_ratio(const Rational& c, long j, long k)
{
    if (is_nonpositive_integer(c + Rational(j)) || is_nonpositive_integer(c + Rational(k)))
        throw PoleError("gamma argument at a pole: c=" + c.str());
    if (j >= k)
        return pochhammer(c + Rational(k), j - k);
    return Rational(1) / pochhammer(c + Rational(j), k - j);
}

/** Alternating sum over l of (-1)^{k-l} C(k,l) (c)_{j+l}/(c)_l.
 *
 *  The ratio (c)_{j+l}/(c)_l is the polynomial (c+l)_j, so the sum lives in
 *  any commutative ring. The closed form k! C(j,k) (c+k)_{j-k} is checked.
 */
template <class S>
S lemma_c1_sum(long j, long k, const S& c)
{
    S sum = from_int<S>(0);
    for (long l = 0; l <= k; ++l)
        sum += pochhammer(c + from_int<S>(l), j) * (sign_pow(k - l) * binomial(k, l));
    S closed = j < k ? from_int<S>(0)
                     : pochhammer(c + from_int<S>(k), j - k) * (factorial(k) * binomial(j, k));
    require(sum == closed, "alternating Pochhammer sum disagrees with its closed form");
    return sum;
}

/** Gamma(c) S(j,k,c;z,w) from the single-sum representation. */
inline Rational s_func_single_sum(long j, long k, const Rational& c, const Rational& z,
                                  const Rational& w)
{
    Rational sum(0);
    for (long p = 0; p <= std::min(j, k); ++p)
        sum += binomial(j, p) * binomial(k, p) * factorial(p) / pochhammer(c, p) *
               pow(z * w, p) * pow(Rational(1) + z, j - p) * pow(Rational(1) + w, k - p);
    return sum;
}

/** Gamma(c) S(j,k,c;z,w) from the double-sum representation. */
inline Rational s_func_double_sum(long j, long k, const Rational& c, const Rational& z,
                                  const Rational& w)
{
    Rational sum(0);
    for (long p = 0; p <= j; ++p)
        for (long q = 0; q <= k; ++q)
            sum += binomial(j, p) * binomial(k, q) * pochhammer(c, p + q) /
                   (pochhammer(c, p) * pochhammer(c, q)) * pow(z, p) * pow(w, q);
    return sum;
}

/** Two-variable sum in reduced form, Gamma(c) S(j,k,c;z,w).
 *
 *  Both representations are evaluated and must agree exactly.
 */
inline Rational s_func_reduced(long j, long k, const Rational& c, const Rational& z,
                               const Rational& w)
{
    if (is_nonpositive_integer(c))
        throw PoleError("S-function parameter c at a pole: " + c.str());
    Rational single = s_func_single_sum(j, k, c, z, w);
    Rational twofold = s_func_double_sum(j, k, c, z, w);
    require(single == twofold, "single and double S-sums disagree at j=" + std::to_string(j) +
                                   " k=" + std::to_string(k));
    return single;
}

/** (c)_j (c)_k Gamma(c) S(j,k,c;z,w), which is a polynomial in c.
 *
 *  Valid over Q[alpha]; both representations are evaluated and compared.
 */
template <class S>
S s_func_scaled(long j, long k, const S& c, const Rational& z, const Rational& w)
{
    S single = from_int<S>(0);
    for (long p = 0; p <= std::min(j, k); ++p)
        single += pochhammer(c + from_int<S>(p), j - p) * pochhammer(c, k) *
                  (binomial(j, p) * binomial(k, p) * factorial(p) * pow(z * w, p) *
                   pow(Rational(1) + z, j - p) * pow(Rational(1) + w, k - p));
    S twofold = from_int<S>(0);
    for (long p = 0; p <= j; ++p)
        for (long q = 0; q <= k; ++q)
            twofold += pochhammer(c, p + q) * pochhammer(c + from_int<S>(p), j - p) *
                       pochhammer(c + from_int<S>(q), k - q) *
                       (binomial(j, p) * binomial(k, q) * pow(z, p) * pow(w, q));
    require(single == twofold, "scaled single and double S-sums disagree");
    return single;
}

/// 2F1(-m, b; c; x), a terminating series; throws when some (c)_q vanishes.
inline Rational hyp2f1_terminating(long m, const Rational& b, const Rational& c, const Rational& x)
{
    Rational term(1), sum(1);
    for (long q = 0; q < m; ++q) {
        Rational cq = c + Rational(q);
        if (cq.is_zero())
            throw PoleError("2F1 lower parameter hits zero");
        term = term * Rational(q - m) * (b + Rational(q)) / (cq * Rational(q + 1)) * x;
        sum += term;
    }
    return sum;
}

/** (c)_m 2F1(-m, b; c; x), which is polynomial in b and c.
 *
 *  Term q is (-m)_q (b)_q (c+q)_{m-q} x^q / q!.
 */
template <class S>
S hyp2f1_scaled(long m, const S& b, const S& c, const Rational& x)
{
    S sum = from_int<S>(0);
    for (long q = 0; q <= m; ++q)
        sum += pochhammer(b, q) * pochhammer(c + from_int<S>(q), m - q) *
               (pochhammer(Rational(-m), q) / factorial(q) * pow(x, q));
    return sum;
}

/// Gauss summation at unit argument: 2F1(-m,b;c;1) = (c-b)_m / (c)_m.
inline Rational gauss_sum(long m, const Rational& b, const Rational& c)
{
    return pochhammer(c - b, m) / pochhammer(c, m);
}

/// Hankel matrix [(c)_{j+k}] for 0 <= j, k < n.
template <class S>
Matrix<S> gamma_hankel(const S& c, long n)
{
    auto m = zero_matrix<S>(n, n);
    for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k)
            m[j][k] = pochhammer(c, j + k);
    return m;
}

/** det[Gamma(c+j+k)] / Gamma(c)^n = prod_{j<n} j! (c)_j.
 *
 *  Cross-checked against a fraction-free determinant of the Hankel matrix.
 */
template <class S>
S det_gamma_reduced(const S& c, long n)
{
    S prod = from_int<S>(1);
    for (long j = 0; j < n; ++j)
        prod = prod * pochhammer(c, j) * factorial(j);
    require(bareiss_det(gamma_hankel(c, n)) == prod,
            "gamma Hankel determinant disagrees with its product form");
    return prod;
}

/** Reduced determinant of the gamma Hankel matrix whose last row is replaced
 *  by `last_row` (entries divided by Gamma(c)).
 */
inline Rational det_gamma_lastrow_reduced(const Rational& c, long n,
                                          const std::vector<Rational>& last_row)
{
    if (n < 1 || static_cast<long>(last_row.size()) != n)
        throw std::invalid_argument("last row length must equal the matrix size");
    Rational prod(1);
    for (long j = 0; j <= n - 2; ++j)
        prod *= factorial(j) * pochhammer(c, j);
    Rational alt(0);
    for (long l = 0; l < n; ++l)
        alt += sign_pow(n - 1 - l) * binomial(n - 1, l) * last_row[l] / pochhammer(c, l);
    Rational value = prod * pochhammer(c, n - 1) * alt;

    auto m = gamma_hankel(c, n);
    m[n - 1] = last_row;
    require(bareiss_det(m) == value, "last-row gamma determinant disagrees with brute force");
    return value;
}

/** Both S representations and their closed special cases, the alternating
 *  Pochhammer sum, Gauss summation, the Pochhammer binomial formula and the
 *  gamma Hankel determinants against brute force.
 */
inline Report verify_exact_layer(long jk_max = 6, long det_max = 8)
{
    Report r("exact");
    const std::vector<Rational> cs{Rational(1, 2), Rational(3, 2), Rational(1), Rational(7, 3)};
    const std::vector<Rational> zs{Rational(-1), Rational(1), Rational(2), Rational(-1, 3)};
    for (const Rational& c : cs)
        for (long j = 0; j <= jk_max; ++j)
            for (long k = 0; k <= jk_max; ++k) {
                const std::string base = "j=" + std::to_string(j) + ",k=" + std::to_string(k) + ",c=" + c.str();
                for (const Rational& z : zs) {
                    for (const Rational& w : zs)
                        r.record("exact.s-single-equals-double", "single-sum and double-sum S agree",
                                 s_func_single_sum(j, k, c, z, w) == s_func_double_sum(j, k, c, z, w),
                                 base + ",z=" + z.str() + ",w=" + w.str());
                    const Rational at_w1 = j < k ? Rational(0)
                                                 : binomial(j, k) * factorial(k) / pochhammer(c, k) * pow(-z, k) *
                                                       pow(Rational(1) + z, j - k);
                    r.record("exact.s-at-w-minus-one", "Gamma(c) S(j,k,c;z,-1) = C(j,k) k!/(c)_k (-z)^k (1+z)^{j-k}",
                             s_func_reduced(j, k, c, z, Rational(-1)) == at_w1, base + ",z=" + z.str());
                    const Rational at_wz = pow(Rational(1) + z, j) * pow(-z, k) * pochhammer(c, j + k) /
                                           (pochhammer(c, j) * pochhammer(c, k));
                    r.record("exact.s-at-w-minus-z-minus-one",
                             "Gamma(c) S(j,k,c;z,-z-1) = (1+z)^j (-z)^k (c)_{j+k}/((c)_j (c)_k)",
                             s_func_reduced(j, k, c, z, -z - Rational(1)) == at_wz, base + ",z=" + z.str());
                }
                r.record("exact.s-orthogonality", "Gamma(c) S(j,k,c;-1,-1) = j!/(c)_j delta_{j,k}",
                         s_func_reduced(j, k, c, Rational(-1), Rational(-1)) ==
                             (j == k ? factorial(j) / pochhammer(c, j) : Rational(0)),
                         base);
                r.attempt("exact.alternating-pochhammer", "alternating Pochhammer sum equals k! C(j,k) (c)_j/(c)_k", base, [&] {
                    const Rational direct = lemma_c1_sum(j, k, c);
                    return direct == factorial(k) * binomial(j, k) * gamma_ratio(c, j, k);
                });
            }
    for (long m = 0; m <= 10; ++m)
        for (const Rational& b : {Rational(1, 2), Rational(3, 2), Rational(-2, 3), Rational(2)})
            for (const Rational& c : {Rational(5, 2), Rational(1, 3), Rational(4)})
                r.record("exact.gauss-summation", "terminating 2F1 at x = 1 equals (c-b)_m/(c)_m",
                         hyp2f1_terminating(m, b, c, Rational(1)) == gauss_sum(m, b, c),
                         "m=" + std::to_string(m) + ",b=" + b.str() + ",c=" + c.str());
    std::mt19937 gen(20070531);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    for (long n = 0; n <= 10; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const Rational z(num(gen), den(gen)), w(num(gen), den(gen));
            Rational sum(0);
            for (long l = 0; l <= n; ++l)
                sum += binomial(n, l) * pochhammer(z, l) * pochhammer(w, n - l);
            r.record("exact.pochhammer-binomial", "(z+w)_n = sum_l C(n,l) (z)_l (w)_{n-l}",
                     pochhammer(z + w, n) == sum, "n=" + std::to_string(n) + ",z=" + z.str() + ",w=" + w.str());
        }
    for (const Rational& c : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(7, 3)})
        for (long n = 1; n <= det_max; ++n) {
            const std::string lbl = "n=" + std::to_string(n) + ",c=" + c.str();
            r.attempt("exact.hankel-determinant", "det[(c)_{j+k}] = prod_j j! (c)_j", lbl, [&] {
                det_gamma_reduced(c, n);
                return true;
            });
            std::vector<Rational> last(n);
            for (long l = 0; l < n; ++l)
                last[l] = Rational(l * l + 1, n + 2) - c;
            r.attempt("exact.last-row-determinant", "last-row replaced gamma determinant matches brute force", lbl, [&] {
                det_gamma_lastrow_reduced(c, n, last);
                return true;
            });
        }
    return r;
}

} // namespace sbo

#endif
