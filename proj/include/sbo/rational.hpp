#ifndef SBO_RATIONAL_HPP
#define SBO_RATIONAL_HPP

#include <cmath>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbo
{

/** Exact rational number with value semantics, always in lowest terms. */
class Rational
{
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(mpz_class(std::to_string(v))) {}
    Rational(unsigned long v) : v_(v) {}
    Rational(long num, long den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Exact value of a finite double.
    static Rational from_double(double d)
    {
        if (!std::isfinite(d))
            throw std::domain_error("rational from a non-finite double");
        return Rational(mpq_class(d));
    }

    /// Parses "p", "p/q" or a finite decimal such as "-1.25".
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
        if (s.empty())
            throw bad();
        try {
            if (auto dot = s.find('.'); dot != std::string::npos) {
                if (s.find('/') != std::string::npos)
                    throw bad();
                std::string digits = s.substr(0, dot) + s.substr(dot + 1);
                std::size_t frac = s.size() - dot - 1;
                if (digits.empty() || digits == "-" || digits == "+")
                    throw bad();
                if (digits[0] == '+')
                    digits.erase(0, 1);
                mpz_class den;
                mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
                return Rational(mpq_class(mpz_class(digits, 10), den));
            }
            if (s[0] == '+')
                s.erase(0, 1);
            mpq_class q;
            if (q.set_str(s, 10) != 0 || q.get_den() == 0)
                throw bad();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw bad();
        }
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }

    /// Canonical "p/q" form; integers keep the "/1".
    std::string to_fraction() const
    {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    /// Short form: "p" for integers, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for any integer e; 0^e with e < 0 throws.
inline Rational pow(const Rational& r, long e)
{
    if (e < 0) {
        if (r.is_zero())
            throw std::domain_error("zero to a negative power");
        return pow(Rational(1) / r, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

/// Exact square root when r is the square of a rational, else false.
inline bool exact_sqrt(const Rational& r, Rational& out)
{
    if (r.sign() < 0)
        return false;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(mpq_class(sn, sd));
    return true;
}

inline Rational factorial(long n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// C(n, k) for integers; zero outside 0 <= k <= n.
inline Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

inline Rational pow2(long e) { return pow(Rational(2), e); }
inline Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace sbo

#endif
