#ifndef SBO_ORACLE_HPP
#define SBO_ORACLE_HPP

#include "errors.hpp"
#include "linalg.hpp"
#include "measures.hpp"
#include "poly.hpp"
#include "units.hpp"

#include <string>
#include <vector>

namespace sbo
{

/** Defining constraints for the monic degree-n member of the i-th family:
 *  (x^m, P) = 0 for m < i under the first weight, and (P_k, P)_2 = 0 for the
 *  accepted members P_k, i <= k < n, under the second weight.
 *
 *  Unknowns are the coefficients of x^0..x^{n-1}; `matrix` is n x n.
 */
template <class S>
struct ConstraintSystem
{
    long i = 0;
    long n = 0;
    Matrix<S> matrix;
    std::vector<S> rhs;
};

template <class S>
ConstraintSystem<S> build_constraints(long i, long n, const MomentSequence<S>& first,
                                      const MomentSequence<S>& second,
                                      const std::vector<Poly<S, XVar>>& previously)
{
    if (static_cast<long>(previously.size()) != n - i)
        throw std::invalid_argument("constraint system needs exactly the members of degree i..n-1");
    ConstraintSystem<S> sys{i, n, zero_matrix<S>(n, n), std::vector<S>(n, from_int<S>(0))};
    for (long m = 0; m < i; ++m) {
        for (long j = 0; j < n; ++j)
            sys.matrix[m][j] = first.m.at(m + j);
        sys.rhs[m] = -first.m.at(m + n);
    }
    for (long k = i; k < n; ++k) {
        auto v = moment_vector(previously[k - i], second, n + 1);
        for (long j = 0; j < n; ++j)
            sys.matrix[k][j] = v[j];
        sys.rhs[k] = -v[n];
    }
    return sys;
}

/// Monic solution of a constraint system by a single fraction-free solve.
template <class S>
Poly<S, XVar> solve_constraints(const ConstraintSystem<S>& sys)
{
    std::vector<S> c = sys.n == 0 ? std::vector<S>{} : bareiss_solve(sys.matrix, sys.rhs);
    c.push_back(from_int<S>(1));
    return Poly<S, XVar>(std::move(c));
}

/// A family built from the definitions, with the Gram diagonal it produced.
template <class S>
struct OracleFamily
{
    long i = 0;
    std::vector<Poly<S, XVar>> polys; ///< polys[n - i]
    std::vector<S> norms;             ///< (P_n, P_n)_2 in the second weight's unit
    Unit unit;

    const Poly<S, XVar>& at(long n) const { return polys.at(n - i); }
};

enum class OracleMethod {
    direct, ///< one n x n fraction-free solve per degree
    block   ///< i x i moment solve, then exact projections on accepted members
};

/** Builds P_{i;i..n_max} from the two moment sequences.
 *
 *  `block` writes P = x^n + sum_{m<i} a_m x^m + sum_k b_k P_k: the a_m solve a
 *  Hankel system under the first weight, and each b_k is a projection under
 *  the second weight. Both methods check every defining constraint on the
 *  result, so a wrong intermediate cannot pass silently.
 */
template <class S>
OracleFamily<S> oracle_family(long i, long n_max, const MomentSequence<S>& first,
                              const MomentSequence<S>& second, OracleMethod method = OracleMethod::direct)
{
    using P = Poly<S, XVar>;
    OracleFamily<S> fam{i, {}, {}, second.unit};
    const std::size_t need = 2 * static_cast<std::size_t>(n_max) + 2;
    if (first.m.size() < need || second.m.size() < need)
        throw std::out_of_range("oracle needs moments up to degree 2 n_max + 1");
    // w[k][b] = (P_k, x^b)_2 for accepted members.
    std::vector<std::vector<S>> w;

    for (long n = i; n <= n_max; ++n) {
        P p;
        if (method == OracleMethod::direct) {
            p = solve_constraints(build_constraints(i, n, first, second, fam.polys));
        } else {
            std::vector<S> c(n + 1, from_int<S>(0));
            c[n] = from_int<S>(1);
            if (i > 0) {
                Matrix<S> h = zero_matrix<S>(i, i);
                std::vector<S> rhs(i);
                for (long m = 0; m < i; ++m) {
                    for (long j = 0; j < i; ++j)
                        h[m][j] = first.m[m + j];
                    rhs[m] = -first.m[m + n];
                }
                auto a = bareiss_solve(h, rhs);
                for (long m = 0; m < i; ++m)
                    c[m] = a[m];
            }
            P r{std::vector<S>(c)};
            p = r;
            for (long k = i; k < n; ++k) {
                S proj = from_int<S>(0);
                for (long b = 0; b <= n; ++b)
                    if (!is_zero(c[b]))
                        proj += w[k - i][b] * c[b];
                if (!is_zero(proj))
                    p -= fam.polys[k - i] * exact_div(proj, fam.norms[k - i]);
            }
        }
        require(p.degree() == n && p.is_monic(), "oracle produced a non-monic member");

        std::vector<S> wp = moment_vector(p, second, static_cast<std::size_t>(n_max) + 1);
        for (long m = 0; m < i; ++m)
            require(is_zero(moment_against(p, m, first).value),
                    "oracle member violates a moment constraint at " + instance_label(i, n));
        for (long k = i; k < n; ++k) {
            S dot = from_int<S>(0);
            const auto& q = fam.polys[k - i].coeffs();
            for (std::size_t b = 0; b < q.size(); ++b)
                dot += q[b] * wp[b];
            require(is_zero(dot), "oracle member is not orthogonal to a lower member at " + instance_label(i, n));
        }
        S norm = from_int<S>(0);
        for (std::size_t b = 0; b < p.coeffs().size(); ++b)
            norm += p.coeffs()[b] * wp[b];
        fam.polys.push_back(std::move(p));
        fam.norms.push_back(std::move(norm));
        w.push_back(std::move(wp));
    }
    return fam;
}

/// Hermite pair exp(-a x^2), exp(-mu a x^2).
inline OracleFamily<Rational> oracle_hermite(long i, long n_max, const Rational& mu = Rational(2),
                                             const Rational& a = Rational(1),
                                             OracleMethod method = OracleMethod::direct)
{
    const std::size_t count = 2 * static_cast<std::size_t>(n_max) + 2;
    return oracle_family(i, n_max, gaussian_moments(a, count), gaussian_moments(mu * a, count), method);
}

/// Laguerre pair exp(-a x) x^alpha, exp(-mu a x) x^alpha; alpha symbolic or numeric.
template <class S>
OracleFamily<S> oracle_laguerre(long i, long n_max, const S& alpha_value, const Rational& mu = Rational(2),
                                const Rational& a = Rational(1), OracleMethod method = OracleMethod::block)
{
    const std::size_t count = 2 * static_cast<std::size_t>(n_max) + 2;
    return oracle_family(i, n_max, gamma_moments(alpha_value, a, count), gamma_moments(alpha_value, mu * a, count),
                         method);
}

/// Single member of the family for one measure pair.
inline QPoly oracle_sbo(const MeasureSpec& spec, long i, long n)
{
    if (spec.family != Family::hermite)
        throw std::invalid_argument("use oracle_sbo_laguerre for the Laguerre family");
    return oracle_hermite(i, n, spec.mu).at(n);
}

inline APoly oracle_sbo_laguerre(const MeasureSpec& spec, long i, long n)
{
    return oracle_laguerre(i, n, alpha(), spec.mu).at(n);
}

/// Full second-product Gram matrix of a family, for diagonality checks.
template <class S>
Matrix<S> family_gram(const OracleFamily<S>& fam, const MomentSequence<S>& second)
{
    const std::size_t d = fam.polys.size();
    Matrix<S> g = zero_matrix<S>(d, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            g[a][b] = inner_product(fam.polys[a], fam.polys[b], second).value;
    return g;
}

template <class S>
bool is_diagonal(const Matrix<S>& g)
{
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (a != b && !is_zero(g[a][b]))
                return false;
    return true;
}

} // namespace sbo

#endif
