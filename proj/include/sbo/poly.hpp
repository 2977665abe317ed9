#ifndef SBO_POLY_HPP
#define SBO_POLY_HPP

#include "errors.hpp"
#include "rational.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace sbo
{

/// Variable tags keep polynomials in x and elements of Q[alpha] distinct types.
struct XVar
{
    static constexpr const char* name = "x";
    static constexpr const char* latex = "x";
};

struct AlphaVar
{
    static constexpr const char* name = "α";
    static constexpr const char* latex = "\\alpha";
};

/** Dense univariate polynomial with coefficients in S, stored in ascending
 *  degree with no trailing zeros. The zero polynomial has degree -1.
 */
template <class S, class Var = XVar>
class Poly;

using AlphaScalar = Poly<Rational, AlphaVar>; ///< element of Q[alpha]
using QPoly = Poly<Rational, XVar>;           ///< polynomial in x over Q
using APoly = Poly<AlphaScalar, XVar>;        ///< polynomial in x over Q[alpha]

inline bool is_zero(const Rational& r) { return r.is_zero(); }

template <class S, class V>
bool is_zero(const Poly<S, V>& p);

template <class S, class Var>
class Poly
{
public:
    using scalar_type = S;
    using var_type = Var;

    Poly() = default;
    Poly(const S& c)
    {
        if (!sbo::is_zero(c))
            c_.push_back(c);
    }
    template <class R>
        requires(std::is_same_v<R, Rational> && !std::is_same_v<S, Rational>)
    explicit Poly(const R& r) : Poly(S(r))
    {
    }
    explicit Poly(int c) : Poly(S(Rational(c))) {}
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(S(Rational(1)), 1); }
    static Poly monomial(const S& coeff, std::size_t k)
    {
        if (sbo::is_zero(coeff))
            return Poly();
        std::vector<S> c(k + 1, S(Rational(0)));
        c[k] = coeff;
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }

    /// Coefficient of var^k, zero beyond the degree.
    S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(Rational(0)); }
    S leading() const { return c_.empty() ? S(Rational(0)) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == S(Rational(1)); }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), S(Rational(0)));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), S(Rational(0)));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.c_.empty() || b.c_.empty())
            return Poly();
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sbo::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const S& s)
    {
        for (auto& c : a.c_)
            c *= s;
        a.trim();
        return a;
    }
    friend Poly operator*(const S& s, Poly a) { return std::move(a) * s; }

    /// Division by a nonzero rational constant.
    friend Poly operator/(Poly a, const Rational& r)
    {
        if (r.is_zero())
            throw std::domain_error("polynomial division by zero");
        for (auto& c : a.c_)
            c = c / r;
        return a;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p)
    {
        os << '[';
        for (std::size_t k = 0; k < p.c_.size(); ++k)
            os << (k ? ", " : "") << p.c_[k];
        return os << ']';
    }

private:
    void trim()
    {
        while (!c_.empty() && sbo::is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<S> c_;
};

template <class S, class V>
bool is_zero(const Poly<S, V>& p)
{
    return p.is_zero();
}

template <class S>
S from_int(long k)
{
    return S(Rational(k));
}

/// Scaling of a polynomial over Q[alpha] by a rational.
inline APoly operator*(const APoly& p, const Rational& r) { return p * AlphaScalar(r); }
inline APoly operator*(const Rational& r, const APoly& p) { return p * AlphaScalar(r); }

template <class S, class V>
Poly<S, V> derivative(const Poly<S, V>& p)
{
    if (p.degree() < 1)
        return {};
    std::vector<S> r(p.coeffs().size() - 1);
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        r[k - 1] = p.coeffs()[k] * from_int<S>(static_cast<long>(k));
    return Poly<S, V>(std::move(r));
}

/// Horner evaluation at a rational point.
template <class S, class V>
S eval(const Poly<S, V>& p, const Rational& x)
{
    S acc = from_int<S>(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline double eval_double(const QPoly& p, double x)
{
    double acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

/// Substitutes alpha = a0 in every coefficient.
inline QPoly eval_alpha(const APoly& p, const Rational& a0)
{
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs())
        c.push_back(eval(a, a0));
    return QPoly(std::move(c));
}

/// Embeds a polynomial over Q into polynomials over Q[alpha].
inline APoly to_alpha(const QPoly& p)
{
    std::vector<AlphaScalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& r : p.coeffs())
        c.emplace_back(r);
    return APoly(std::move(c));
}

/// Multiplies by var^k.
template <class S, class V>
Poly<S, V> shift(const Poly<S, V>& p, std::size_t k)
{
    if (p.is_zero())
        return p;
    std::vector<S> c(k, from_int<S>(0));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly<S, V>(std::move(c));
}

/// p(c x).
template <class S, class V>
Poly<S, V> compose_scale(const Poly<S, V>& p, const Rational& c)
{
    std::vector<S> r = p.coeffs();
    Rational ck(1);
    for (auto& coeff : r) {
        coeff = coeff * ck;
        ck *= c;
    }
    return Poly<S, V>(std::move(r));
}

/// p(x^2).
template <class S, class V>
Poly<S, V> compose_square(const Poly<S, V>& p)
{
    if (p.is_zero())
        return p;
    std::vector<S> r(2 * p.coeffs().size() - 1, from_int<S>(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        r[2 * k] = p.coeffs()[k];
    return Poly<S, V>(std::move(r));
}

/// Inverse of compose_square; throws unless p is even.
template <class S, class V>
Poly<S, V> decompose_square(const Poly<S, V>& p)
{
    std::vector<S> r;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k % 2 == 0)
            r.push_back(p.coeffs()[k]);
        else if (!is_zero(p.coeffs()[k]))
            throw std::domain_error("polynomial is not even");
    }
    return Poly<S, V>(std::move(r));
}

enum class Parity { even, odd, none };

/// The zero polynomial counts as even.
template <class S, class V>
Parity parity(const Poly<S, V>& p)
{
    bool has_even = false, has_odd = false;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (is_zero(p.coeffs()[k]))
            continue;
        (k % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_even && has_odd)
        return Parity::none;
    return has_odd ? Parity::odd : Parity::even;
}

template <class S, class V>
S coeff_at(const Poly<S, V>& p, std::size_t k)
{
    return p.coeff(k);
}

enum class ScaleMode { sqrt, linear };

/** Monic rescaling c^{-n/2} p(sqrt(c) x) (sqrt mode) or c^{-n} p(c x)
 *  (linear mode), where n = deg p. Coefficient k is multiplied by
 *  c^{(k-n)/2} or c^{k-n} respectively.
 */
template <class S, class V>
Poly<S, V> scale_arg_monic(const Poly<S, V>& p, const Rational& c, ScaleMode mode)
{
    if (c.sign() <= 0)
        throw std::domain_error("scale factor must be positive");
    const long n = p.degree();
    std::vector<S> r = p.coeffs();
    Rational root;
    const bool square = exact_sqrt(c, root);
    for (long k = 0; k <= n; ++k) {
        if (is_zero(r[k]))
            continue;
        const long gap = n - k;
        if (mode == ScaleMode::linear) {
            r[k] = r[k] * pow(c, -gap);
        } else if (gap % 2 == 0) {
            r[k] = r[k] * pow(c, -gap / 2);
        } else {
            if (!square)
                throw IrrationalScaleError("odd degree gap with a non-square scale factor");
            r[k] = r[k] * pow(root, -gap);
        }
    }
    return Poly<S, V>(std::move(r));
}

/// Exact scalar division in Q.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

/// Euclidean division over Q: a = q b + r with deg r < deg b.
template <class V>
std::pair<Poly<Rational, V>, Poly<Rational, V>> divmod(const Poly<Rational, V>& a,
                                                       const Poly<Rational, V>& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly<Rational, V>(), a};
    std::vector<Rational> rem = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> q(rem.size() - db);
    const Rational lead = b.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational f = rem[k + db] / lead;
        q[k] = f;
        if (f.is_zero())
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    return {Poly<Rational, V>(std::move(q)), Poly<Rational, V>(std::move(rem))};
}

/// Quotient a / b, which must leave no remainder.
template <class V>
Poly<Rational, V> exact_div(const Poly<Rational, V>& a, const Poly<Rational, V>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw InexactDivisionError("polynomial does not divide exactly");
    return q;
}

/// Coefficientwise exact division of a polynomial by a scalar.
template <class S, class V>
Poly<S, V> exact_div_scalar(const Poly<S, V>& p, const S& d)
{
    std::vector<S> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        r.push_back(exact_div(c, d));
    return Poly<S, V>(std::move(r));
}

template <class V>
Poly<Rational, V> make_monic(const Poly<Rational, V>& p)
{
    if (p.is_zero())
        return p;
    return p / p.leading();
}

/// Monic gcd over Q; gcd(0, 0) = 0.
template <class V>
Poly<Rational, V> gcd(Poly<Rational, V> a, Poly<Rational, V> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

template <class S, class V>
std::string to_debug_string(const Poly<S, V>& p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

} // namespace sbo

#endif
