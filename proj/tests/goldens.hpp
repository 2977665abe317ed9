#ifndef SBO_TESTS_GOLDENS_HPP
#define SBO_TESTS_GOLDENS_HPP

#include <sbo/exact.hpp>
#include <sbo/poly.hpp>

#include <algorithm>
#include <initializer_list>
#include <vector>

// Low-degree SBO members transcribed term by term from the published tables.
namespace golden
{

using sbo::AlphaScalar;
using sbo::APoly;
using sbo::QPoly;
using sbo::Rational;

/// Integer polynomial in alpha, coefficients in descending powers.
inline AlphaScalar al(std::initializer_list<long> desc)
{
    std::vector<Rational> c;
    for (long v : desc)
        c.emplace_back(v);
    std::reverse(c.begin(), c.end());
    return AlphaScalar(std::move(c));
}

inline AlphaScalar ap(long k) { return al({1, k}); }
inline AlphaScalar r(long num, long den = 1) { return AlphaScalar(Rational(num, den)); }

/// Polynomial in x, coefficients in descending powers.
template <class S>
sbo::Poly<S, sbo::XVar> desc(std::initializer_list<S> cs)
{
    std::vector<S> c(cs);
    std::reverse(c.begin(), c.end());
    return sbo::Poly<S, sbo::XVar>(std::move(c));
}

struct HermiteCase
{
    long i, n;
    QPoly p;
};

struct LaguerreCase
{
    long i, n;
    APoly p;
};

inline std::vector<HermiteCase> hermite()
{
    using R = Rational;
    return {
        {0, 1, desc<R>({1, 0})},
        {0, 2, desc<R>({1, 0, R(-1, 4)})},
        {0, 3, desc<R>({1, 0, R(-3, 4), 0})},
        {0, 4, desc<R>({1, 0, R(-3, 2), 0, R(3, 16)})},
        {0, 5, desc<R>({1, 0, R(-5, 2), 0, R(15, 16), 0})},
        {1, 2, desc<R>({1, 0, R(-1, 2)})},
        {1, 4, desc<R>({1, 0, R(-7, 4), 0, R(1, 8)})},
        {1, 6, desc<R>({1, 0, -4, 0, R(47, 16), 0, R(-11, 32)})},
        {2, 3, desc<R>({1, 0, R(-3, 2), 0})},
        {2, 5, desc<R>({1, 0, R(-13, 4), 0, R(9, 8), 0})},
    };
}

inline std::vector<LaguerreCase> laguerre()
{
    using A = AlphaScalar;
    const A one = r(1);
    return {
        {0, 1, desc<A>({one, r(-1, 2) * ap(1)})},
        {0, 2, desc<A>({one, -ap(2), r(1, 4) * ap(1) * ap(2)})},
        {0, 3, desc<A>({one, r(-3, 2) * ap(3), r(3, 4) * ap(2) * ap(3), r(-1, 8) * ap(1) * ap(2) * ap(3)})},
        {0, 4,
         desc<A>({one, r(-2) * ap(4), r(3, 2) * ap(3) * ap(4), r(-1, 2) * ap(2) * ap(3) * ap(4),
                  r(1, 16) * ap(1) * ap(2) * ap(3) * ap(4)})},
        {1, 1, desc<A>({one, -ap(1)})},
        {1, 2, desc<A>({one, r(-1, 2) * al({3, 5}), r(1, 2) * ap(1) * ap(1)})},
        {1, 3,
         desc<A>({one, -al({2, 5}), r(1, 4) * al({5, 19, 20}), r(-1, 4) * ap(1) * al({1, 3, 4})})},
        {1, 4,
         desc<A>({one, r(-1, 2) * al({5, 17}), r(3, 4) * al({3, 17, 26}), r(-1, 8) * al({7, 48, 125, 108}),
                  r(1, 8) * ap(1) * ap(1) * al({1, 5, 12})})},
        {1, 5,
         desc<A>({one, -al({3, 13}), r(1, 2) * al({7, 53, 106}), r(-1, 2) * al({4, 39, 137, 162}),
                  r(1, 16) * al({9, 98, 447, 886, 648}), r(-1, 16) * ap(1) * al({1, 10, 47, 86, 72})})},
        {2, 2, desc<A>({one, r(-2) * ap(2), ap(1) * ap(2)})},
        {2, 3,
         desc<A>({one, r(-1, 2) * al({5, 13}), r(2) * ap(2) * ap(2), r(-1, 2) * ap(1) * ap(1) * ap(2)})},
        {2, 4,
         desc<A>({one, -al({3, 10}), r(1, 4) * al({13, 71, 102}), r(-1, 2) * ap(2) * al({3, 13, 18}),
                  r(1, 4) * ap(1) * ap(2) * al({1, 3, 6})})},
        {2, 5,
         desc<A>({one, r(-1, 2) * al({7, 29}), r(1, 4) * al({19, 135, 254}), r(-1, 8) * al({25, 222, 719, 810}),
                  r(1, 2) * ap(2) * ap(2) * al({2, 11, 27}), r(-1, 8) * ap(1) * ap(1) * ap(2) * al({1, 5, 18})})},
        {2, 6,
         desc<A>({one, r(-4) * ap(5), r(1, 2) * al({13, 115, 268}), r(-1, 2) * al({11, 127, 526, 752}),
                  r(1, 16) * al({41, 538, 2947, 7418, 7056}), r(-1, 8) * ap(2) * al({5, 58, 319, 770, 720}),
                  r(1, 16) * ap(1) * ap(2) * al({1, 10, 59, 122, 144})})},
    };
}

} // namespace golden

#endif
