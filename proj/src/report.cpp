#include "npg/report.hpp"

#include "npg/errors.hpp"

#include <cstdio>

namespace npg {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Json rational_pair(const Rational& q)
{
    return Json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

namespace {

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw ConfigError("interval set JSON: endpoint parts must be integers");
}

Json rational_json(const Rational& q)
{
    return to_string(q);
}

}  // namespace

Json to_json(const IntervalSet& set)
{
    Json pieces = Json::array();
    for (const auto& p : set.intervals()) {
        Json row = Json::array({integer_json(p.lo.get_num()), integer_json(p.lo.get_den())});
        if (p.hi) {
            row.push_back(integer_json(p.hi->get_num()));
            row.push_back(integer_json(p.hi->get_den()));
        } else {
            row.push_back(1);
            row.push_back(0);
        }
        pieces.push_back(std::move(row));
    }
    return Json{{"intervals", pieces}};
}

IntervalSet interval_set_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("intervals") || !j["intervals"].is_array())
        throw ConfigError("interval set JSON: expected {\"intervals\": [...]}");
    std::vector<Interval> pieces;
    for (const auto& row : j["intervals"]) {
        if (!row.is_array() || row.size() != 4)
            throw ConfigError("interval set JSON: each interval is [lo_num, lo_den, hi_num, hi_den]");
        const Integer lo_den = integer_from_json(row[1]);
        const Integer hi_den = integer_from_json(row[3]);
        if (lo_den == 0)
            throw ConfigError("interval set JSON: zero lower denominator");
        const Rational lo = make_ratio(integer_from_json(row[0]), lo_den);
        std::optional<Rational> hi;
        if (hi_den != 0) {
            hi = make_ratio(integer_from_json(row[2]), hi_den);
        }
        pieces.push_back({lo, hi});
    }
    return IntervalSet::from(std::move(pieces));
}

Json to_json(const GreedyTrace& trace)
{
    Json levels = Json::array();
    for (std::size_t j = 0; j < trace.r.size(); ++j) {
        Json level{{"level", j}, {"r", rational_json(trace.r[j])}};
        if (j > 0) {
            level["s"] = rational_json(trace.s[j - 1]);
            level["infimum_attained"] = static_cast<bool>(trace.infimum_attained[j - 1]);
        }
        levels.push_back(std::move(level));
    }
    Json out{{"k", trace.k},
             {"epsilon", rational_json(trace.epsilon)},
             {"window", rational_json(trace.window)},
             {"levels", levels}};
    if (trace.s.size() == trace.r.size())
        out["next_infimum_beyond_window"] = rational_json(trace.s.back());
    if (trace.verdict == Verdict::Witness)
        out["terminated_level"] = nullptr;
    else
        out["terminated_level"] =
            trace.terminated_level ? Json(*trace.terminated_level) : Json("window-exhausted");
    out["verdict"] = std::string(to_string(trace.verdict));
    return out;
}

Json to_json(const MeasureCheck& check)
{
    return Json{{"lambda", check.lambda},
                {"measure", rational_json(check.measure)},
                {"bound", rational_json(check.bound)},
                {"weak_bound", rational_json(check.weak_bound)},
                {"coverings_ok", check.coverings_ok},
                {"bound_ok", check.bound_ok}};
}

Json to_json(const SieveConstants& c)
{
    // Doubles as strings keep 17 digits independent of the JSON library's formatter.
    return Json{{"alpha", format_double(c.params.alpha)},
                {"beta", format_double(c.params.beta)},
                {"omega1", format_double(c.omega1)},
                {"omega2", format_double(c.omega2)},
                {"omega3", format_double(c.omega3)},
                {"omega3_error_estimate", format_double(c.omega3_error)},
                {"total", format_double(c.total)},
                {"quad_tol", format_double(c.quad_tol)},
                {"certified_below", "3.99"},
                {"certified", c.certified()}};
}

Json to_json(const ErdosRankinResult& r)
{
    Json residues = Json::object();
    for (const auto& [p, a] : r.residues)
        residues[std::to_string(p)] = a;
    return Json{{"status", std::string(to_string(r.status))},
                {"blocking_prime", r.blocking_prime ? Json(*r.blocking_prime) : Json(nullptr)},
                {"shifts", r.tuple.shifts},
                {"admissible", r.admissible},
                {"p_plus_diffs", r.p_plus},
                {"targets", r.targets},
                {"max_deviation", r.max_deviation},
                {"survivors", r.tuple.size()},
                {"size_matches_k", r.size_matches_k},
                {"residues", residues}};
}

}  // namespace npg
