#ifndef SBO_VERIFY_HPP
#define SBO_VERIFY_HPP

#include "classical.hpp"
#include "exact.hpp"
#include "measures.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "sbo_hermite.hpp"
#include "sbo_laguerre.hpp"
#include "zeros.hpp"

#include <json.hpp>

#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbo
{

enum class Suite { exact, classical, measures, sbo_hermite, sbo_laguerre, bridge, zeros, all };

inline std::string to_string(Suite s)
{
    switch (s) {
    case Suite::exact: return "exact";
    case Suite::classical: return "classical";
    case Suite::measures: return "measures";
    case Suite::sbo_hermite: return "sbo-hermite";
    case Suite::sbo_laguerre: return "sbo-laguerre";
    case Suite::bridge: return "bridge";
    case Suite::zeros: return "zeros";
    case Suite::all: return "all";
    }
    return "all";
}

inline Suite parse_suite(const std::string& s)
{
    for (Suite v : {Suite::exact, Suite::classical, Suite::measures, Suite::sbo_hermite, Suite::sbo_laguerre,
                    Suite::bridge, Suite::zeros, Suite::all})
        if (to_string(v) == s)
            return v;
    throw std::invalid_argument("unknown suite '" + s + "'");
}

/** Grid bounds; unset fields take the per-suite defaults. `n_max` is the
 *  largest degree checked, so family i covers degrees i..n_max.
 */
struct VerifyOptions
{
    std::optional<long> i_max;
    std::optional<long> n_max;
    bool parallel = true;
};

/** Runs `work(i)` for i = 0..i_max, concurrently when allowed, and merges
 *  the reports in increasing i so the result does not depend on scheduling.
 */
inline Report fan_out(const std::string& suite, long i_max, const std::function<Report(long)>& work, bool parallel)
{
    std::vector<Report> parts(i_max + 1);
    if (parallel) {
        std::vector<std::future<Report>> futures;
        for (long i = 0; i <= i_max; ++i)
            futures.push_back(std::async(std::launch::async, work, i));
        for (long i = 0; i <= i_max; ++i)
            parts[i] = futures[i].get();
    } else {
        for (long i = 0; i <= i_max; ++i)
            parts[i] = work(i);
    }
    Report r(suite);
    for (const auto& p : parts)
        r.merge(p);
    return r;
}

/** Gram-system oracle at a weight ratio with no closed form: the second-product
 *  Gram of each family must still be diagonal. Laguerre runs at sample alphas.
 */
inline Report verify_oracle_diagonal(const Rational& mu, long i_max = 3, long extra = 6)
{
    Report r("oracle");
    for (long i = 0; i <= i_max; ++i) {
        const long top = i + extra;
        const auto h = oracle_hermite(i, top, mu);
        r.record("oracle.hermite-gram-diagonal", "oracle family has a diagonal second-product Gram",
                 is_diagonal(family_gram(h, gaussian_moments(mu, 2 * top + 2))),
                 instance_label(i, top) + ",mu=" + mu.str());
        // Away from mu = 2 the Laguerre coefficients are rational in alpha, so sample it.
        for (const Rational& a0 : {Rational(-1, 2), Rational(0), Rational(3, 2)}) {
            const auto l = oracle_laguerre(i, top, a0, mu);
            r.record("oracle.laguerre-gram-diagonal", "oracle family has a diagonal second-product Gram",
                     is_diagonal(family_gram(l, gamma_moments(a0, mu, 2 * top + 2))),
                     instance_label(i, top, a0.str()) + ",mu=" + mu.str());
        }
        bool direct_agrees = true;
        const auto hd = oracle_hermite(i, top, mu, Rational(1), OracleMethod::direct);
        const auto hb = oracle_hermite(i, top, mu, Rational(1), OracleMethod::block);
        for (long n = i; n <= top; ++n)
            direct_agrees = direct_agrees && hd.at(n) == hb.at(n);
        r.record("oracle.methods-agree", "direct and block oracle methods give the same family", direct_agrees,
                 instance_label(i, top) + ",mu=" + mu.str());
    }
    return r;
}

/// Norms at sample numeric alpha are positive, and numeric orthogonality holds there.
inline Report verify_sbo_laguerre_numeric(long i_max, long n_max)
{
    Report r("sbo-laguerre");
    for (const Rational& a0 : {Rational(-1, 2), Rational(0), Rational(1, 2), Rational(3, 2)}) {
        bool positive = true;
        for (long i = 0; i <= i_max; ++i)
            for (long n = i; n <= n_max; ++n)
                positive = positive && eval(sbo_l_norm(i, n), a0).sign() > 0;
        r.record("laguerre-sbo.norm-positive", "H_{i;n}(alpha) > 0 for numeric alpha > -1", positive,
                 "alpha=" + a0.str());
    }
    r.merge(verify_sbo_l_orthogonality(std::min<long>(i_max, 3), std::min<long>(n_max, 9), Rational(3, 2)));
    return r;
}

inline Report run_suite(Suite suite, const VerifyOptions& opt = {})
{
    auto pick = [&](const std::optional<long>& v, long d) { return v.value_or(d); };
    switch (suite) {
    case Suite::exact: return verify_exact_layer();
    case Suite::classical: return verify_classical_identities(pick(opt.n_max, 20));
    case Suite::measures: {
        Report r = verify_measures(pick(opt.n_max, 8));
        r.merge(generating_function_gamma_check(12, {Rational(1), Rational(2), Rational(3), Rational(1, 2)}));
        return r;
    }
    case Suite::sbo_hermite: {
        const long i_max = pick(opt.i_max, 8), n_max = std::max(pick(opt.n_max, 20), i_max);
        Report r = fan_out(
            "sbo-hermite", i_max, [&](long i) { return verify_sbo_hermite_family(i, n_max - i); }, opt.parallel);
        r.merge(verify_sbo_hermite_global(i_max, n_max));
        r.merge(fan_out(
            "sbo-hermite", i_max, [&](long i) { return verify_sbo_h_orthogonality(i, n_max, i); }, opt.parallel));
        r.merge(verify_oracle_diagonal(Rational(3)));
        return r;
    }
    case Suite::sbo_laguerre: {
        const long i_max = pick(opt.i_max, 6), n_max = std::max(pick(opt.n_max, 16), i_max);
        Report r = fan_out(
            "sbo-laguerre", i_max, [&](long i) { return verify_sbo_laguerre_family(i, n_max - i); }, opt.parallel);
        r.merge(verify_sbo_laguerre_global(i_max, n_max));
        r.merge(fan_out(
            "sbo-laguerre", i_max, [&](long i) { return verify_sbo_l_orthogonality(i, n_max, std::nullopt, i); },
            opt.parallel));
        r.merge(verify_sbo_laguerre_numeric(i_max, n_max));
        return r;
    }
    case Suite::bridge: {
        const long i_max = pick(opt.i_max, 6);
        return hermite_laguerre_sbo_bridge(i_max, std::max(pick(opt.n_max, i_max + 8) - i_max, 0L));
    }
    case Suite::zeros: {
        Report r = verify_zeros_structure();
        r.merge(verify_zeros_empirical());
        return r;
    }
    case Suite::all: {
        Report r("all");
        for (Suite s : {Suite::exact, Suite::classical, Suite::measures, Suite::sbo_hermite, Suite::sbo_laguerre,
                        Suite::bridge, Suite::zeros})
            r.merge(run_suite(s, opt));
        return r;
    }
    }
    return Report();
}

inline nlohmann::json report_json(const Report& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : r.entries()) {
        nlohmann::json c;
        c["id"] = e.id;
        c["description"] = e.description;
        c["status"] = to_string(e.status);
        c["instances"] = e.instances;
        c["failures"] = e.failures;
        if (!e.note.empty())
            c["note"] = e.note;
        checks.push_back(c);
    }
    nlohmann::json j;
    j["suite"] = r.suite();
    j["ok"] = r.ok();
    j["instances"] = r.instance_count();
    j["checks"] = checks;
    return j;
}

} // namespace sbo

#endif
