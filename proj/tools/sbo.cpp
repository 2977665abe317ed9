#include <sbo/format.hpp>
#include <sbo/verify.hpp>
#include <sbo/zeros.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

using namespace sbo;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct Options
{
    std::string format = "pretty";
    std::optional<std::string> alpha;
    long i = 0;
    std::optional<long> n;
    std::optional<long> n_max;
    int float_digits = 12;
};

/// Parsed --alpha: nullopt means symbolic.
std::optional<Rational> numeric_alpha(const Options& o)
{
    if (!o.alpha || *o.alpha == "symbolic")
        return std::nullopt;
    const Rational a = Rational::parse(*o.alpha);
    if (!(a > Rational(-1)))
        throw UsageError("alpha must exceed -1");
    return a;
}

PolySerialization make_poly(PolyFamily f, long i, long n, const Options& o)
{
    PolySerialization s;
    s.family = f;
    s.n = n;
    if (is_sbo(f)) {
        check_index(i, n);
        s.i = i;
    } else if (n < 0) {
        throw IndexError("degree must be nonnegative");
    }
    if (!is_laguerre(f)) {
        s.poly = f == PolyFamily::hermite ? hermite(n) : sbo_h_closed(i, n);
        return s;
    }
    const APoly p = f == PolyFamily::laguerre ? laguerre(n) : sbo_l_closed(i, n);
    if (const auto a = numeric_alpha(o)) {
        s.alpha = a->to_fraction();
        s.poly = eval_alpha(p, *a);
    } else {
        s.alpha = "symbolic";
        s.poly = p;
    }
    return s;
}

std::string label(const PolySerialization& s, bool latex)
{
    const std::string idx = s.i ? std::to_string(*s.i) + ";" + std::to_string(s.n) : std::to_string(s.n);
    std::string name;
    switch (s.family) {
    case PolyFamily::hermite_sbo:
    case PolyFamily::laguerre_sbo: name = latex ? "\\widehat P" : "P"; break;
    case PolyFamily::hermite: name = "H"; break;
    case PolyFamily::laguerre: name = "L"; break;
    }
    if (s.family == PolyFamily::laguerre)
        name += latex ? "^{(\\alpha)}" : "^(α)";
    return name + "_{" + idx + "}";
}

int cmd_gen(const std::string& family, const Options& o)
{
    const PolyFamily f = parse_family(family);
    const long lo = is_sbo(f) ? o.i : 0;
    const long hi = o.n_max ? *o.n_max : (o.n ? *o.n : lo);
    if (hi < lo)
        throw UsageError("--n-max must be at least --i");
    std::vector<PolySerialization> polys;
    for (long n = lo; n <= hi; ++n)
        polys.push_back(make_poly(f, o.i, n, o));

    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : polys)
            arr.push_back(to_json(p));
        std::cout << arr.dump(2) << "\n";
    } else if (o.format == "csv") {
        for (const auto& p : polys)
            if (p.symbolic())
                throw UsageError("csv output needs a numeric --alpha");
        std::cout << csv_header() << "\n";
        for (const auto& p : polys) {
            for (const auto& row : csv_rows(p, o.float_digits))
                std::cout << row << "\n";
        }
    } else if (o.format == "latex") {
        for (const auto& p : polys)
            std::cout << label(p, true) << " &= "
                      << std::visit([](const auto& q) { return latex(q); }, p.poly) << " \\\\\n";
    } else if (o.format == "pretty") {
        for (const auto& p : polys)
            std::cout << label(p, false) << " = " << std::visit([](const auto& q) { return pretty(q); }, p.poly)
                      << "\n";
    } else {
        throw UsageError("unknown format '" + o.format + "'");
    }
    return exit_ok;
}

/// "p/q" and integers evaluate exactly; anything else is read as a double.
int cmd_eval(const std::string& family, const std::string& at, const Options& o)
{
    if (!o.n)
        throw UsageError("eval needs --n");
    const PolySerialization s = make_poly(parse_family(family), o.i, *o.n, o);
    const bool exact_input = at.find_first_of(".eE") == std::string::npos;
    if (exact_input) {
        const Rational x = Rational::parse(at);
        if (const auto* q = std::get_if<QPoly>(&s.poly))
            std::cout << eval(*q, x).str() << "\n";
        else
            std::cout << pretty(eval(std::get<APoly>(s.poly), x)) << "\n";
        return exit_ok;
    }
    const auto* q = std::get_if<QPoly>(&s.poly);
    if (!q)
        throw UsageError("float evaluation needs a numeric --alpha");
    double x = 0;
    try {
        x = std::stod(at);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + at + "'");
    }
    std::cout << format_float(Rational::from_double(eval_double(*q, x)), o.float_digits) << "\n";
    return exit_ok;
}

int cmd_zeros(const std::string& family, const Options& o)
{
    if (!o.n)
        throw UsageError("zeros needs --n");
    const PolyFamily f = parse_family(family);
    if (is_laguerre(f) && !numeric_alpha(o))
        throw UsageError("zeros needs a numeric --alpha");
    const PolySerialization s = make_poly(f, o.i, *o.n, o);
    const QPoly& p = std::get<QPoly>(s.poly);
    const RootReport rep = isolate_roots(p);

    if (o.format == "csv") {
        std::cout << "index,lo,hi,value\n";
        for (std::size_t k = 0; k < rep.roots.size(); ++k) {
            const auto& r = rep.roots[k];
            std::cout << k << "," << r.lo.to_fraction() << "," << r.hi.to_fraction() << ","
                      << format_float(Rational::from_double(r.value), o.float_digits) << "\n";
        }
        return exit_ok;
    }
    if (o.format == "pretty") {
        for (const auto& r : rep.roots)
            std::cout << format_float(Rational::from_double(r.value), o.float_digits) << "\n";
        return exit_ok;
    }
    if (o.format != "json")
        throw UsageError("zeros supports json, csv and pretty");
    nlohmann::json j;
    j["polynomial"] = to_json(s);
    j["degree"] = rep.degree;
    j["real_root_count"] = rep.real_root_count;
    j["all_simple"] = rep.all_simple;
    j["all_nonnegative"] = rep.all_nonnegative;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : rep.roots)
        roots.push_back({{"lo", r.lo.to_fraction()}, {"hi", r.hi.to_fraction()}, {"value", r.value}});
    j["roots"] = roots;
    std::cout << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_verify(const std::string& suite, std::optional<long> i_max, std::optional<long> n_max, bool serial)
{
    VerifyOptions vo;
    vo.i_max = i_max;
    vo.n_max = n_max;
    vo.parallel = !serial;
    Report r;
    try {
        r = run_suite(parse_suite(suite), vo);
    } catch (const ZeroStructureCounterexample& ex) {
        std::cerr << "counterexample: " << ex.what() << "\n";
        return exit_failure;
    }
    std::cout << report_json(r).dump(2) << "\n";
    if (!r.ok())
        for (const auto& e : r.entries())
            if (e.status == CheckStatus::fail)
                std::cerr << "FAIL " << e.id << ": " << (e.failures.empty() ? "" : e.failures.front()) << "\n";
    return r.ok() ? exit_ok : exit_failure;
}

int cmd_table_p0(const std::string& family, const Options& o)
{
    const long hi = o.n_max ? *o.n_max : (o.n ? *o.n : o.i + 4);
    check_index(o.i, hi);
    const bool hermite_family = family == "hermite" || family == "hermite-sbo";
    if (!hermite_family && family != "laguerre" && family != "laguerre-sbo")
        throw UsageError("table-p0 family must be hermite or laguerre");
    nlohmann::json rows = nlohmann::json::array();
    for (long n = o.i; n <= hi; ++n) {
        std::string value;
        nlohmann::json jv;
        if (hermite_family) {
            const Rational v = p_table(o.i, hi).at(n);
            value = v.str();
            jv = v.to_fraction();
        } else if (const auto a = numeric_alpha(o)) {
            const Rational v = eval(p_alpha_table(o.i, hi).at(n), *a);
            value = v.str();
            jv = v.to_fraction();
        } else {
            const AlphaScalar v = p_alpha_table(o.i, hi).at(n);
            value = detail::integer_alpha_poly(v, false);
            jv = nlohmann::json::array();
            for (const auto& c : v.coeffs())
                jv.push_back(c.to_fraction());
        }
        if (o.format == "json")
            rows.push_back({{"i", o.i}, {"n", n}, {"p", jv}});
        else
            std::cout << "p_{" << o.i << ";" << n << "} = " << value << "\n";
    }
    if (o.format == "json")
        std::cout << rows.dump(2) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hermite and Laguerre standard block orthogonal polynomials"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "json, csv, latex or pretty")
        ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
    app.add_option("--alpha", o.alpha, "Laguerre parameter: a rational > -1 or 'symbolic'");
    app.add_option("--i", o.i, "block index i")->check(CLI::NonNegativeNumber);
    app.add_option("--n", o.n, "degree n");
    app.add_option("--n-max", o.n_max, "largest degree to emit");
    app.add_option("--float-digits", o.float_digits, "significant digits for float output")
        ->check(CLI::Range(1, 17));

    const std::vector<std::string> families{"hermite-sbo", "laguerre-sbo", "hermite", "laguerre"};
    std::string family, at, suite = "all";
    std::optional<long> i_max;
    bool serial = false;

    auto* gen = app.add_subcommand("gen", "emit P_{i;i} .. P_{i;n_max}");
    gen->add_option("family", family)->required()->check(CLI::IsMember(families));
    auto* ev = app.add_subcommand("eval", "evaluate P_{i;n} at a point");
    ev->add_option("family", family)->required()->check(CLI::IsMember(families));
    ev->add_option("--at", at, "evaluation point")->required();
    auto* zs = app.add_subcommand("zeros", "isolate the real zeros of P_{i;n}");
    zs->add_option("family", family)->required()->check(CLI::IsMember(families));
    auto* vf = app.add_subcommand("verify", "run a verification suite and print a JSON report");
    vf->add_option("--suite", suite)
        ->check(CLI::IsMember({"exact", "classical", "measures", "sbo-hermite", "sbo-laguerre", "bridge", "zeros", "all"}));
    vf->add_option("--i-max", i_max, "largest family index");
    vf->add_flag("--serial", serial, "run on one thread");
    auto* tp = app.add_subcommand("table-p0", "values p_{i;n} that fix P_{i;n}(0)");
    tp->alias("table_p0");
    tp->add_option("family", family)->required()->check(CLI::IsMember({"hermite", "laguerre", "hermite-sbo", "laguerre-sbo"}));
    for (auto* sub : {gen, ev, zs, vf, tp})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen)
            return cmd_gen(family, o);
        if (*ev)
            return cmd_eval(family, at, o);
        if (*zs)
            return cmd_zeros(family, o);
        if (*vf)
            return cmd_verify(suite, i_max, o.n_max, serial);
        if (*tp)
            return cmd_table_p0(family, o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const IndexError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
