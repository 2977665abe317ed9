#ifndef SBO_LINALG_HPP
#define SBO_LINALG_HPP

#include "errors.hpp"
#include "poly.hpp"

#include <utility>
#include <vector>

namespace sbo
{

template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
Matrix<S> zero_matrix(std::size_t rows, std::size_t cols)
{
    return Matrix<S>(rows, std::vector<S>(cols, from_int<S>(0)));
}

template <class S>
Matrix<S> identity_matrix(std::size_t n)
{
    auto m = zero_matrix<S>(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m[k][k] = from_int<S>(1);
    return m;
}

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b)
{
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    auto r = zero_matrix<S>(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (is_zero(a[i][k]))
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!is_zero(b[k][j]))
                    r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

/** Fraction-free Gaussian elimination over an integral domain.
 *
 *  Every division is by the previous pivot and is exact, so entries stay in
 *  the domain. Returns the determinant; `rhs` columns, if given, are carried
 *  along and `m` is left upper triangular.
 */
template <class S>
S bareiss_eliminate(Matrix<S>& m, Matrix<S>* rhs = nullptr)
{
    const std::size_t n = m.size();
    S prev = from_int<S>(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && is_zero(m[r][k]))
                ++r;
            if (r == n)
                return from_int<S>(0);
            std::swap(m[k], m[r]);
            if (rhs)
                std::swap((*rhs)[k], (*rhs)[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        if (rhs) {
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t c = 0; c < (*rhs)[i].size(); ++c)
                    (*rhs)[i][c] =
                        exact_div((*rhs)[i][c] * m[k][k] - m[i][k] * (*rhs)[k][c], prev);
        }
        for (std::size_t i = k + 1; i < n; ++i)
            m[i][k] = from_int<S>(0);
        prev = m[k][k];
    }
    S det = n == 0 ? from_int<S>(1) : m[n - 1][n - 1];
    return negate ? -det : det;
}

template <class S>
S bareiss_det(Matrix<S> m)
{
    return bareiss_eliminate(m);
}

/** Solves A x = b by fraction-free elimination and exact back substitution.
 *
 *  Over Q[alpha] every back-substitution quotient divides exactly whenever
 *  the solution itself has polynomial entries; otherwise
 *  InexactDivisionError propagates to the caller.
 */
template <class S>
std::vector<S> bareiss_solve(Matrix<S> a, const std::vector<S>& b)
{
    const std::size_t n = a.size();
    Matrix<S> rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] = {b[i]};
    S det = bareiss_eliminate(a, &rhs);
    if (is_zero(det))
        throw SingularSystemError("constraint matrix is singular");
    std::vector<S> x(n, from_int<S>(0));
    for (std::size_t i = n; i-- > 0;) {
        S acc = rhs[i][0];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(a[i][j]))
                acc -= a[i][j] * x[j];
        x[i] = exact_div(acc, a[i][i]);
    }
    return x;
}

} // namespace sbo

#endif
