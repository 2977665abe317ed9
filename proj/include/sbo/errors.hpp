#ifndef SBO_ERRORS_HPP
#define SBO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sbo
{

/// A gamma or Pochhammer argument hit a nonpositive integer.
struct PoleError : std::domain_error
{
    using std::domain_error::domain_error;
};

/// A square-root rescaling would leave the rationals.
struct IrrationalScaleError : std::domain_error
{
    using std::domain_error::domain_error;
};

/// Two independent evaluations of the same exact quantity disagreed.
struct VerificationFailure : std::logic_error
{
    using std::logic_error::logic_error;
};

/// A constraint system had no unique solution.
struct SingularSystemError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Reduced quantities with different transcendental units were combined.
struct UnitMismatchError : std::logic_error
{
    using std::logic_error::logic_error;
};

/// Division in an integral domain that does not divide exactly.
struct InexactDivisionError : std::domain_error
{
    using std::domain_error::domain_error;
};

/// An (i, n) pair outside 0 <= i <= n.
struct IndexError : std::out_of_range
{
    using std::out_of_range::out_of_range;
};

inline void check_index(long i, long n)
{
    if (i < 0 || n < i)
        throw IndexError("need 0 <= i <= n, got i=" + std::to_string(i) + ", n=" + std::to_string(n));
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw VerificationFailure(what);
}

} // namespace sbo

#endif
