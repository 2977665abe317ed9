#ifndef SBO_FORMAT_HPP
#define SBO_FORMAT_HPP

#include "poly.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace sbo
{

enum class PolyFamily { hermite_sbo, laguerre_sbo, hermite, laguerre };

inline std::string to_string(PolyFamily f)
{
    switch (f) {
    case PolyFamily::hermite_sbo: return "hermite-sbo";
    case PolyFamily::laguerre_sbo: return "laguerre-sbo";
    case PolyFamily::hermite: return "hermite";
    case PolyFamily::laguerre: return "laguerre";
    }
    return "hermite";
}

inline PolyFamily parse_family(const std::string& s)
{
    for (PolyFamily f : {PolyFamily::hermite_sbo, PolyFamily::laguerre_sbo, PolyFamily::hermite, PolyFamily::laguerre})
        if (to_string(f) == s)
            return f;
    throw std::invalid_argument("unknown family '" + s + "'");
}

inline bool is_sbo(PolyFamily f) { return f == PolyFamily::hermite_sbo || f == PolyFamily::laguerre_sbo; }
inline bool is_laguerre(PolyFamily f) { return f == PolyFamily::laguerre_sbo || f == PolyFamily::laguerre; }

/** One generated polynomial with its provenance. `alpha` is "symbolic" or a
 *  rational string for Laguerre families and absent for Hermite ones; the
 *  polynomial is over Q[alpha] exactly when alpha is symbolic.
 */
struct PolySerialization
{
    PolyFamily family = PolyFamily::hermite_sbo;
    std::optional<long> i;
    long n = 0;
    std::optional<std::string> alpha;
    std::variant<QPoly, APoly> poly;

    bool symbolic() const { return std::holds_alternative<APoly>(poly); }

    friend bool operator==(const PolySerialization&, const PolySerialization&) = default;
};

// ---------------------------------------------------------------- pretty

namespace detail
{

inline std::string power(const char* var, long k)
{
    if (k == 0)
        return "";
    return k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
}

/// Element of Q[alpha] with integer coefficients, ascending powers joined without spaces: "α^2+3α+2".
inline std::string integer_alpha_poly(const AlphaScalar& p, bool latex)
{
    const char* var = latex ? AlphaVar::latex : AlphaVar::name;
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c.is_zero())
            continue;
        const Rational m = abs(c);
        if (!out.empty() || c.sign() < 0)
            out += c.sign() < 0 ? "-" : "+";
        std::string pw = power(var, k);
        if (latex && k > 1)
            pw = std::string(var) + "^{" + std::to_string(k) + "}";
        out += (k > 0 && m == Rational(1)) ? pw : m.str() + pw;
    }
    return out.empty() ? "0" : out;
}

/// Splits c into content q > 0 (sign returned separately) and a primitive integer polynomial with positive lead.
inline std::pair<Rational, AlphaScalar> content_split(const AlphaScalar& c, int& sign)
{
    mpz_class g = 0, l = 1;
    for (const auto& a : c.coeffs()) {
        if (a.is_zero())
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
    }
    sign = c.leading().sign();
    const Rational q = Rational(mpq_class(g, l));
    return {q, c / (q * Rational(sign))};
}

} // namespace detail

/// Univariate polynomial over Q, descending: "x^4 - 7/4 x^2 + 1/8", "x^6 - 4x^4 + ...".
inline std::string pretty(const QPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c.is_zero())
            continue;
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        const Rational m = abs(c);
        const std::string pw = detail::power(XVar::name, k);
        if (k == 0)
            out += m.str();
        else if (m == Rational(1))
            out += pw;
        else
            out += m.str() + (m.is_integer() ? "" : " ") + pw;
    }
    return out;
}

/// Element of Q[alpha] as "(α+1)/2", "3α^2/2", "-7/4".
inline std::string pretty(const AlphaScalar& c)
{
    if (c.degree() <= 0)
        return c.coeff(0).str();
    int sign = 1;
    auto [q, prim] = detail::content_split(c, sign);
    std::string body = detail::integer_alpha_poly(prim, false);
    const bool multi = std::count_if(prim.coeffs().begin(), prim.coeffs().end(),
                                     [](const Rational& a) { return !a.is_zero(); }) > 1;
    if (multi && !(q == Rational(1)))
        body = "(" + body + ")";
    const mpz_class num = q.num(), den = q.den();
    std::string s = (num == 1 ? "" : num.get_str()) + body + (den == 1 ? "" : "/" + den.get_str());
    return sign < 0 ? "-" + s : s;
}

/// Polynomial over Q[alpha]: "x - (α+1)/2", "x^2 - (α+2) x + (α^2+3α+2)/4".
inline std::string pretty(const APoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const AlphaScalar& c = p.coeff(k);
        if (c.is_zero())
            continue;
        if (c.degree() == 0) {
            // Rational coefficient: same layout as over Q.
            const Rational r = c.coeff(0);
            out += out.empty() ? (r.sign() < 0 ? "-" : "") : (r.sign() < 0 ? " - " : " + ");
            const Rational m = abs(r);
            const std::string pw = detail::power(XVar::name, k);
            out += k == 0 ? m.str() : (m == Rational(1) ? pw : m.str() + (m.is_integer() ? "" : " ") + pw);
            continue;
        }
        const bool neg = c.leading().sign() < 0;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string body = pretty(neg ? -c : c);
        int sign = 1;
        const bool bare_sum = detail::content_split(c, sign).first == Rational(1) &&
                              std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                            [](const Rational& a) { return !a.is_zero(); }) > 1;
        if (bare_sum)
            body = "(" + body + ")";
        out += k == 0 ? body : body + " " + detail::power(XVar::name, k);
    }
    return out;
}

// ---------------------------------------------------------------- LaTeX

namespace detail
{

inline std::string latex_rational(const Rational& m)
{
    return m.is_integer() ? m.str() : "\\frac{" + m.num().get_str() + "}{" + m.den().get_str() + "}";
}

inline std::string latex_power(long k)
{
    if (k == 0)
        return "";
    return k == 1 ? "x" : "x^{" + std::to_string(k) + "}";
}

} // namespace detail

/// Descending-degree LaTeX fragment, rational content in front: "x - \frac{1}{2}\,(\alpha+1)".
inline std::string latex(const QPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c.is_zero())
            continue;
        out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        const Rational m = abs(c);
        if (k == 0)
            out += detail::latex_rational(m);
        else if (m == Rational(1))
            out += detail::latex_power(k);
        else
            out += detail::latex_rational(m) + (m.is_integer() ? "" : "\\,") + detail::latex_power(k);
    }
    return out;
}

inline std::string latex(const APoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const AlphaScalar& c = p.coeff(k);
        if (c.is_zero())
            continue;
        int sign = 1;
        auto [q, prim] = detail::content_split(c, sign);
        out += out.empty() ? (sign < 0 ? "-" : "") : (sign < 0 ? " - " : " + ");
        std::string term;
        if (prim.degree() == 0) {
            term = k == 0 || !(q == Rational(1)) ? detail::latex_rational(q) : "";
            if (!term.empty() && k > 0 && !q.is_integer())
                term += "\\,";
        } else {
            const bool multi = std::count_if(prim.coeffs().begin(), prim.coeffs().end(),
                                             [](const Rational& a) { return !a.is_zero(); }) > 1;
            const std::string body = detail::integer_alpha_poly(prim, true);
            term = q == Rational(1) ? "" : detail::latex_rational(q) + "\\,";
            term += multi ? "(" + body + ")" : body;
            if (k > 0)
                term += "\\,";
        }
        out += term + detail::latex_power(k);
    }
    return out;
}

// ---------------------------------------------------------------- JSON

inline nlohmann::json to_json(const PolySerialization& s)
{
    nlohmann::json j;
    j["family"] = to_string(s.family);
    j["i"] = s.i ? nlohmann::json(*s.i) : nlohmann::json(nullptr);
    j["n"] = s.n;
    j["alpha"] = s.alpha ? nlohmann::json(*s.alpha) : nlohmann::json(nullptr);
    nlohmann::json coeffs = nlohmann::json::array();
    if (const auto* q = std::get_if<QPoly>(&s.poly)) {
        for (const auto& c : q->coeffs())
            coeffs.push_back(c.to_fraction());
    } else {
        for (const auto& c : std::get<APoly>(s.poly).coeffs()) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& a : c.coeffs())
                row.push_back(a.to_fraction());
            coeffs.push_back(row);
        }
    }
    j["coeffs"] = coeffs;
    return j;
}

inline PolySerialization poly_from_json(const nlohmann::json& j)
{
    PolySerialization s;
    s.family = parse_family(j.at("family").get<std::string>());
    if (!j.at("i").is_null())
        s.i = j.at("i").get<long>();
    s.n = j.at("n").get<long>();
    if (!j.at("alpha").is_null())
        s.alpha = j.at("alpha").get<std::string>();
    const auto& cs = j.at("coeffs");
    if (s.alpha && *s.alpha == "symbolic") {
        std::vector<AlphaScalar> v;
        for (const auto& row : cs) {
            std::vector<Rational> a;
            for (const auto& e : row)
                a.push_back(Rational::parse(e.get<std::string>()));
            v.emplace_back(std::move(a));
        }
        s.poly = APoly(std::move(v));
    } else {
        std::vector<Rational> v;
        for (const auto& e : cs)
            v.push_back(Rational::parse(e.get<std::string>()));
        s.poly = QPoly(std::move(v));
    }
    return s;
}

// ---------------------------------------------------------------- CSV

inline std::string csv_header() { return "family,i,n,alpha,degree,coeff_index,coeff"; }

inline std::string format_float(const Rational& r, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, r.to_double());
    return buf;
}

/// One row per coefficient, floats with `digits` significant digits; numeric alpha only.
inline std::vector<std::string> csv_rows(const PolySerialization& s, int digits = 12)
{
    const auto* q = std::get_if<QPoly>(&s.poly);
    if (!q)
        throw std::invalid_argument("CSV output needs a numeric alpha");
    std::vector<std::string> rows;
    const std::string head = to_string(s.family) + "," + (s.i ? std::to_string(*s.i) : "") + "," +
                             std::to_string(s.n) + "," + s.alpha.value_or("") + "," + std::to_string(q->degree());
    for (std::size_t k = 0; k < q->coeffs().size(); ++k)
        rows.push_back(head + "," + std::to_string(k) + "," + format_float(q->coeffs()[k], digits));
    return rows;
}

} // namespace sbo

#endif
