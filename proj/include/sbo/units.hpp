#ifndef SBO_UNITS_HPP
#define SBO_UNITS_HPP

#include "errors.hpp"
#include "exact.hpp"
#include "poly.hpp"

#include <string>
#include <vector>

namespace sbo
{

/** Transcendental factor divided out of a scalar product.
 *
 *  gaussian:  sqrt(pi / scale^power)
 *  gamma:     Gamma(alpha+1) scale^{-(alpha+1)}
 *
 *  `exponent` counts how many such factors multiply together, as in a
 *  determinant of a Gram block.
 */
struct Unit
{
    enum class Kind { gaussian, gamma };
    Kind kind = Kind::gaussian;
    Rational scale{1};
    int power = 1;
    int exponent = 1;

    static Unit gaussian(const Rational& scale, int power = 1) { return {Kind::gaussian, scale, power, 1}; }
    static Unit gamma(const Rational& scale) { return {Kind::gamma, scale, 1, 1}; }

    Unit to_the(int e) const
    {
        Unit u = *this;
        u.exponent *= e;
        return u;
    }

    friend bool operator==(const Unit&, const Unit&) = default;

    std::string str() const
    {
        std::string base;
        if (kind == Kind::gaussian) {
            base = "sqrt(pi/" + scale.str() + (power == 1 ? "" : "^" + std::to_string(power)) + ")";
        } else {
            base = "Gamma(alpha+1)*" + scale.str() + "^(-alpha-1)";
        }
        return exponent == 1 ? base : "(" + base + ")^" + std::to_string(exponent);
    }
};

/// A reduced value paired with the unit it is expressed in.
template <class S>
struct Quantity
{
    S value;
    Unit unit;

    friend Quantity operator+(const Quantity& a, const Quantity& b)
    {
        check_same(a, b);
        return {a.value + b.value, a.unit};
    }
    friend Quantity operator-(const Quantity& a, const Quantity& b)
    {
        check_same(a, b);
        return {a.value - b.value, a.unit};
    }
    /// Equality of the underlying quantities; comparing across units throws.
    friend bool operator==(const Quantity& a, const Quantity& b)
    {
        check_same(a, b);
        return a.value == b.value;
    }

private:
    static void check_same(const Quantity& a, const Quantity& b)
    {
        if (!(a.unit == b.unit))
            throw UnitMismatchError("combining " + a.unit.str() + " with " + b.unit.str());
    }
};

/** Re-expresses a Gaussian quantity in sqrt(pi/scale^1) units:
 *  sqrt(pi/s^3) = sqrt(pi/s) / s.
 */
template <class S>
Quantity<S> to_base_gaussian(const Quantity<S>& q)
{
    if (q.unit.kind != Unit::Kind::gaussian || q.unit.exponent != 1)
        throw UnitMismatchError("not a single Gaussian unit: " + q.unit.str());
    const int extra = (q.unit.power - 1) / 2;
    return {q.value * pow(q.unit.scale, -extra), Unit::gaussian(q.unit.scale)};
}

/// Reduced moments m[k] of a weight, i.e. the integral of w x^k in `unit`.
template <class S>
struct MomentSequence
{
    std::vector<S> m;
    Unit unit;
};

/// Moments of exp(-a x^2) on the real line in units sqrt(pi/a).
inline MomentSequence<Rational> gaussian_moments(const Rational& a, std::size_t count)
{
    MomentSequence<Rational> ms{std::vector<Rational>(count, Rational(0)), Unit::gaussian(a)};
    for (std::size_t k = 0; 2 * k < count; ++k)
        ms.m[2 * k] = pochhammer(Rational(1, 2), static_cast<long>(k)) * pow(a, -static_cast<long>(k));
    return ms;
}

/// Moments of exp(-a x) x^alpha on [0, inf) in units Gamma(alpha+1) a^{-(alpha+1)}.
template <class S>
MomentSequence<S> gamma_moments(const S& alpha_value, const Rational& a, std::size_t count)
{
    MomentSequence<S> ms{std::vector<S>(count, from_int<S>(0)), Unit::gamma(a)};
    const S a1 = alpha_value + from_int<S>(1);
    S run = from_int<S>(1);
    for (std::size_t k = 0; k < count; ++k) {
        ms.m[k] = run * pow(a, -static_cast<long>(k));
        run = run * (a1 + from_int<S>(static_cast<long>(k)));
    }
    return ms;
}

/// v[b] = (p, x^b) for b < count.
template <class S>
std::vector<S> moment_vector(const Poly<S, XVar>& p, const MomentSequence<S>& ms, std::size_t count)
{
    std::vector<S> v(count, from_int<S>(0));
    if (p.degree() + count > ms.m.size())
        throw std::out_of_range("moment sequence too short");
    for (std::size_t b = 0; b < count; ++b)
        for (std::size_t a = 0; a < p.coeffs().size(); ++a)
            if (!is_zero(p.coeffs()[a]) && !is_zero(ms.m[a + b]))
                v[b] += p.coeffs()[a] * ms.m[a + b];
    return v;
}

/// (p, q) as a reduced quantity.
template <class S>
Quantity<S> inner_product(const Poly<S, XVar>& p, const Poly<S, XVar>& q, const MomentSequence<S>& ms)
{
    S sum = from_int<S>(0);
    if (!p.is_zero() && !q.is_zero()) {
        auto v = moment_vector(p, ms, q.coeffs().size());
        for (std::size_t b = 0; b < q.coeffs().size(); ++b)
            if (!is_zero(q.coeffs()[b]))
                sum += v[b] * q.coeffs()[b];
    }
    return {sum, ms.unit};
}

/// (x^m, p) as a reduced quantity.
template <class S>
Quantity<S> moment_against(const Poly<S, XVar>& p, std::size_t m, const MomentSequence<S>& ms)
{
    S sum = from_int<S>(0);
    for (std::size_t a = 0; a < p.coeffs().size(); ++a)
        sum += p.coeffs()[a] * ms.m.at(a + m);
    return {sum, ms.unit};
}

} // namespace sbo

#endif
