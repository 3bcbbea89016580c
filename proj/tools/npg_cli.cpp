// npg: command-line front end. One subcommand per invocation; every output
// carries the resolved configuration (a "config" object in JSON, leading
// "# key=value" lines in CSV and text reports).

#include "npg/chen_combinatorics.hpp"
#include "npg/constants_pipeline.hpp"
#include "npg/errors.hpp"
#include "npg/limit_point_sets.hpp"
#include "npg/prime_engine.hpp"
#include "npg/report.hpp"
#include "npg/sieve_functions.hpp"
#include "npg/tuples.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using npg::Json;

struct Common {
    std::string output;
    unsigned threads = 1;
};

unsigned default_threads()
{
    if (const char* env = std::getenv("NPG_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<unsigned>(v);
    }
    return 1;
}

void emit(const Common& common, const std::string& text)
{
    if (common.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(common.output, std::ios::binary);
    if (!out)
        throw npg::ConfigError("cannot open output file " + common.output);
    out << text;
}

std::string config_comment(const Json& config)
{
    std::string out;
    for (const auto& [key, value] : config.items())
        out += "# " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    return out;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::vector<npg::Rational> parse_rational_list(const std::string& text)
{
    std::vector<npg::Rational> out;
    for (const auto& item : split(text, ','))
        out.push_back(npg::parse_rational(item));
    return out;
}

// --- gaps ---------------------------------------------------------------

struct GapsArgs {
    std::uint64_t limit = 10'000'000;
    std::string edges = "0,0.5,1,1.5,2,2.5,3,3.5,4,5,6";
    std::uint64_t segment = npg::kDefaultSegmentSize;
};

int run_gaps(const Common& common, const GapsArgs& args)
{
    std::vector<double> edges;
    for (const auto& e : split(args.edges, ','))
        edges.push_back(npg::to_double(npg::parse_rational(e)));
    npg::SieveOptions opts{args.segment, common.threads};
    const auto report = npg::normalized_histogram(args.limit, edges, opts);
    // threads do not change the output; leave them out of the embedded config
    Json config{{"subcommand", "gaps"}, {"limit", args.limit}, {"edges", args.edges},
                {"segment_size", args.segment}, {"normalization", "gap/ln(p_left)"}};
    std::ostringstream out;
    out << config_comment(config);
    npg::write_histogram_csv(out, report);
    emit(common, out.str());
    return 0;
}

// --- sievefun -----------------------------------------------------------

struct SievefunArgs {
    std::string kind = "buchstab";
    double step = npg::kDefaultStep;
    double s_max = npg::kDefaultSMax;
};

int run_sievefun(const Common& common, const SievefunArgs& args)
{
    std::ostringstream out;
    Json config{{"subcommand", "sievefun"}, {"kind", args.kind}, {"step", npg::format_double(args.step)},
                {"s_max", npg::format_double(args.s_max)}};
    out << config_comment(config);
    if (args.kind == "buchstab") {
        npg::solve_buchstab(args.s_max, args.step).write_csv(out);
    } else if (args.kind == "F_lin" || args.kind == "f_lin") {
        const auto sol = npg::solve_linear_sieve(args.s_max, args.step);
        (args.kind == "F_lin" ? sol.upper : sol.lower).write_csv(out);
    } else {
        throw npg::ConfigError("--kind must be one of F_lin, f_lin, buchstab");
    }
    emit(common, out.str());
    return 0;
}

// --- constants / sweep ----------------------------------------------------

struct ConstantsArgs {
    std::string alpha = "1/7";
    std::string beta = "3/14";
    double quad_tol = npg::kDefaultQuadTol;
    double step = npg::kDefaultStep;
    double s_max = npg::kDefaultSMax;
};

int run_constants(const Common& common, const ConstantsArgs& args)
{
    const auto params =
        npg::ChenParameters::from_rationals(npg::parse_rational(args.alpha), npg::parse_rational(args.beta));
    const auto products = npg::SolverProducts::solve(args.s_max, args.step);
    const auto c = npg::total_bound(params, products, args.quad_tol);
    Json out{{"config",
              {{"subcommand", "constants"},
               {"alpha", args.alpha},
               {"beta", args.beta},
               {"quad_tol", npg::format_double(args.quad_tol)},
               {"omega3_tol", npg::format_double(args.quad_tol * npg::kOmega3TolFactor)},
               {"step", npg::format_double(args.step)},
               {"s_max", npg::format_double(args.s_max)}}}};
    out.update(npg::to_json(c));
    out["certificate"] = std::string("omega1 - omega2 + omega3 = ") + npg::format_double(c.total) +
                         (c.certified() ? " < " : " >= ") + "3.99";
    emit(common, out.dump(2) + "\n");
    return c.certified() ? 0 : 1;
}

struct SweepArgs {
    std::string alpha_range = "0.12:0.16:9";
    std::string beta_range = "0.19:0.24:11";
    double quad_tol = 1e-5;
    double step = npg::kDefaultStep;
    double s_max = npg::kDefaultSMax;
};

std::vector<double> parse_range(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        throw npg::ConfigError("range must be lo:hi:count, got '" + text + "'");
    const double lo = npg::to_double(npg::parse_rational(parts[0]));
    const double hi = npg::to_double(npg::parse_rational(parts[1]));
    const long n = std::stol(parts[2]);
    if (n < 1 || n > 10000 || hi < lo)
        throw npg::ConfigError("range '" + text + "' needs lo <= hi and 1 <= count <= 10000");
    std::vector<double> out;
    for (long i = 0; i < n; ++i)
        out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

int run_sweep(const Common& common, const SweepArgs& args)
{
    const auto products = npg::SolverProducts::solve(args.s_max, args.step);
    const auto result = npg::sweep_optimizer(parse_range(args.alpha_range), parse_range(args.beta_range),
                                             products, args.quad_tol, common.threads);
    Json points = Json::array();
    for (const auto& pt : result.evaluated)
        points.push_back(npg::to_json(pt.constants));
    Json out{{"config",
              {{"subcommand", "sweep"},
               {"alpha_range", args.alpha_range},
               {"beta_range", args.beta_range},
               {"quad_tol", npg::format_double(args.quad_tol)},
               {"step", npg::format_double(args.step)},
               {"s_max", npg::format_double(args.s_max)}}},
             {"best", npg::to_json(result.best.constants)},
             {"evaluated", result.evaluated.size()},
             {"skipped", result.skipped},
             {"points", points}};
    emit(common, out.dump(2) + "\n");
    return result.best.constants.certified() ? 0 : 1;
}

// --- verify -------------------------------------------------------------

struct VerifyArgs {
    bool all = false;
    bool chen = false;
    bool mu = false;
    bool quant = false;
    bool frak = false;
    bool pigeonhole = false;
    std::uint64_t n_max = 100'000;
};

class Report {
  public:
    void add(bool pass, const std::string& name, const std::string& params, const std::string& extra = {})
    {
        text_ += (pass ? "PASS " : "FAIL ") + name + " " + params;
        if (!extra.empty())
            text_ += " " + extra;
        text_ += "\n";
        all_ = all_ && pass;
    }
    const std::string& text() const { return text_; }
    bool all_pass() const { return all_; }

  private:
    std::string text_;
    bool all_ = true;
};

int run_verify(const Common& common, VerifyArgs args)
{
    if (!(args.chen || args.mu || args.quant || args.frak || args.pigeonhole))
        args.all = true;
    if (args.all)
        args.chen = args.mu = args.quant = args.frak = args.pigeonhole = true;

    Report report;
    if (args.chen) {
        for (auto [y, z] : {std::pair<std::uint64_t, std::uint64_t>{10, 30}, {20, 80}}) {
            const std::string params =
                "n_max=" + std::to_string(args.n_max) + " Y=" + std::to_string(y) + " Z=" + std::to_string(z);
            const auto r = npg::verify_chen_range(args.n_max, y, z, common.threads);
            report.add(r.holds, "chen_range", params,
                       r.counterexample ? "counterexample=" + std::to_string(*r.counterexample) +
                                              " failures=" + std::to_string(r.failures)
                                        : std::string{});
            const auto sq = npg::verify_chen_range_squarefree(args.n_max, y, z);
            report.add(sq.holds, "chen_range_squarefree_mid", params,
                       sq.counterexample ? "counterexample=" + std::to_string(*sq.counterexample) : std::string{});
        }
        report.add(npg::verify_chen_abstract(50), "chen_abstract", "k_max=50");
    }
    if (args.mu) {
        bool ok = true;
        std::string bad;
        for (long l = 1; l <= 100 && ok; ++l) {
            const auto m = npg::mu_prime(npg::Rational(1, l));
            const std::vector<std::uint64_t> want{static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(l + 1)};
            ok = m.value == npg::make_ratio(1 + l, 2) && m.argmax == want;
            if (!ok)
                bad = "L=" + std::to_string(l);
        }
        report.add(ok, "mu_prime", "mu=1/L L=1..100", bad);
    }
    if (args.quant) {
        for (const char* mu_text : {"1/2", "1/3", "1/5"}) {
            bool ok = true;
            bool tight = true;
            for (unsigned m = 2; m <= 6; ++m)
                for (unsigned a = 1; a < m; ++a) {
                    const auto q = npg::quant_bound_check(m, a, npg::parse_rational(mu_text), 8);
                    ok = ok && q.holds;
                    tight = tight && q.tight;
                }
            report.add(ok && tight, "quant_bound", std::string("M<=6 a<M c_max=8 mu=") + mu_text,
                       tight ? "tight" : "not_tight");
        }
    }
    if (args.frak) {
        const std::uint64_t a = 100;
        const std::uint64_t m = npg::partition_count(a);
        const npg::Rational x = npg::make_ratio(static_cast<long>(a * m), static_cast<long>(m - 1));
        const auto relaxed = npg::frak_S_relaxed(a, m, x, m);
        const auto closed = npg::frak_S_closed_bound(a, m);
        const double relaxed_d = npg::frak_S_relaxed(a, m, npg::to_double(x), m);
        const bool ok = m == 4 * a && relaxed == closed && closed > 0 &&
                        std::fabs(relaxed_d - npg::to_double(closed)) <= 1e-12;
        report.add(ok, "frak_S_bound", "a=100 M=" + std::to_string(m) + " L=M X=aL/(M-1)",
                   "bound=" + npg::to_string(closed));
    }
    if (args.pigeonhole) {
        bool ok = true;
        for (unsigned a = 1; a <= 4; ++a)
            ok = ok && npg::pigeonhole_check(a);
        report.add(ok, "pigeonhole", "a=1..4 exhaustive");
        report.add(npg::pigeonhole_check(100), "pigeonhole", "a=100 counting");
    }

    Json config{{"subcommand", "verify"}, {"n_max", args.n_max},
                {"checks", std::string(args.chen ? "chen " : "") + (args.mu ? "mu " : "") +
                               (args.quant ? "quant " : "") + (args.frak ? "frak " : "") +
                               (args.pigeonhole ? "pigeonhole" : "")}};
    emit(common, config_comment(config) + report.text());
    return report.all_pass() ? 0 : 1;
}

// --- measure ------------------------------------------------------------

struct MeasureArgs {
    std::string set_file;
    std::string intervals;  // "lo:hi,lo:hi,..." with hi = inf allowed
    unsigned k = 4;
    std::string epsilon = "0";
    std::string window = "100";
    std::string t;
};

npg::IntervalSet parse_intervals(const std::string& text)
{
    std::vector<npg::Interval> pieces;
    for (const auto& item : split(text, ',')) {
        const auto ends = split(item, ':');
        if (ends.size() != 2)
            throw npg::ConfigError("interval '" + item + "' must be lo:hi");
        std::optional<npg::Rational> hi;
        if (ends[1] != "inf")
            hi = npg::parse_rational(ends[1]);
        pieces.push_back({npg::parse_rational(ends[0]), hi});
    }
    return npg::IntervalSet::from(std::move(pieces));
}

int run_measure(const Common& common, const MeasureArgs& args)
{
    npg::IntervalSet set;
    if (!args.set_file.empty()) {
        std::ifstream in(args.set_file);
        if (!in)
            throw npg::ConfigError("cannot read " + args.set_file);
        set = npg::interval_set_from_json(Json::parse(in));
    } else {
        set = parse_intervals(args.intervals);
    }
    const auto eps = npg::parse_rational(args.epsilon);
    const auto window = npg::parse_rational(args.window);
    const auto trace = npg::greedy_witness(set, args.k, eps, window);

    Json out{{"config",
              {{"subcommand", "measure"},
               {"set", npg::to_json(set)},
               {"k", args.k},
               {"epsilon", npg::to_string(eps)},
               {"window", npg::to_string(window)},
               {"T", args.t.empty() ? Json(nullptr) : Json(args.t)}}},
             {"trace", npg::to_json(trace)}};
    bool ok = true;
    if (!args.t.empty() && trace.verdict == npg::Verdict::Certificate) {
        const auto check = npg::measure_bound_verify(set, trace, npg::parse_rational(args.t));
        out["measure_check"] = npg::to_json(check);
        ok = check.holds();
    }
    emit(common, out.dump(2) + "\n");
    return ok ? 0 : 1;
}

// --- tuples -------------------------------------------------------------

struct TuplesArgs {
    std::string shifts;
    std::string x = "1";
    std::uint64_t y = 7;
    std::uint64_t z = 40;
    std::string betas = "0,12/7";
    std::uint64_t k = 2;
};

int run_tuples(const Common& common, const TuplesArgs& args)
{
    Json out;
    bool ok = true;
    if (!args.shifts.empty()) {
        std::vector<std::uint64_t> shifts;
        for (const auto& s : split(args.shifts, ','))
            shifts.push_back(std::stoull(s));
        const auto h = npg::KTuple::from(shifts);
        const auto adm = npg::is_admissible(h);
        out = Json{{"config", {{"subcommand", "tuples"}, {"shifts", args.shifts}}},
                   {"shifts", h.shifts},
                   {"admissible", adm.admissible},
                   {"failing_prime", adm.failing_prime ? Json(*adm.failing_prime) : Json(nullptr)},
                   {"p_plus_diffs", h.size() >= 2 ? Json(npg::diff_smoothness(h)) : Json(nullptr)}};
        ok = adm.admissible;
    } else {
        const auto result = npg::erdos_rankin_construct(npg::parse_rational(args.x), args.y, args.z,
                                                        parse_rational_list(args.betas), args.k);
        out = Json{{"config",
                    {{"subcommand", "tuples"},
                     {"x", args.x},
                     {"y", args.y},
                     {"z", args.z},
                     {"betas", args.betas},
                     {"K", args.k}}}};
        out.update(npg::to_json(result));
        ok = result.status == npg::ConstructionStatus::Success;
    }
    emit(common, out.dump(2) + "\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerics for prime gaps: sieve constants, combinatorial checks, interval sets, tuples"};
    app.require_subcommand(0, 1);

    Common common;
    common.threads = default_threads();
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", common.output, "output file (default stdout)");
        sub->add_option("--threads", common.threads, "worker threads (default $NPG_THREADS or 1)")
            ->check(CLI::Range(1u, 1024u));
    };

    GapsArgs gaps;
    auto* s_gaps = app.add_subcommand("gaps", "normalized prime-gap histogram (CSV)");
    s_gaps->add_option("--limit", gaps.limit, "sieve limit")->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 40));
    s_gaps->add_option("--edges", gaps.edges, "comma-separated bin edges");
    s_gaps->add_option("--segment-size", gaps.segment, "sieve segment size")
        ->check(CLI::Range(std::uint64_t{1024}, std::uint64_t{1} << 30));
    add_common(s_gaps);

    SievefunArgs sf;
    auto* s_sf = app.add_subcommand("sievefun", "tabulate F_lin, f_lin or the Buchstab function (CSV)");
    s_sf->add_option("--kind", sf.kind, "F_lin | f_lin | buchstab");
    s_sf->add_option("--step", sf.step, "grid step (1/step an even integer, <= 1e-2)");
    s_sf->add_option("--s-max", sf.s_max, "upper end of the grid");
    add_common(s_sf);

    ConstantsArgs ca;
    auto* s_const = app.add_subcommand("constants", "Omega1, Omega2, Omega3 and the 3.99 certificate (JSON)");
    s_const->add_option("--alpha", ca.alpha, "Y = N^alpha, as num/den");
    s_const->add_option("--beta", ca.beta, "Z = N^beta, as num/den");
    s_const->add_option("--quad-tol", ca.quad_tol, "quadrature tolerance (Omega3 uses 10x)");
    s_const->add_option("--step", ca.step, "sieve-function grid step");
    s_const->add_option("--s-max", ca.s_max, "sieve-function grid end");
    add_common(s_const);

    SweepArgs sw;
    auto* s_sweep = app.add_subcommand("sweep", "minimize the total over an (alpha, beta) grid (JSON)");
    s_sweep->add_option("--alpha-range", sw.alpha_range, "lo:hi:count");
    s_sweep->add_option("--beta-range", sw.beta_range, "lo:hi:count");
    s_sweep->add_option("--quad-tol", sw.quad_tol, "quadrature tolerance");
    s_sweep->add_option("--step", sw.step, "sieve-function grid step");
    s_sweep->add_option("--s-max", sw.s_max, "sieve-function grid end");
    add_common(s_sweep);

    VerifyArgs va;
    auto* s_verify = app.add_subcommand("verify", "exhaustive combinatorial checks (PASS/FAIL report)");
    s_verify->add_flag("--all", va.all, "run every check (default when none selected)");
    s_verify->add_flag("--chen", va.chen, "pointwise Chen sieve inequality");
    s_verify->add_flag("--mu", va.mu, "mu' maximum");
    s_verify->add_flag("--quant", va.quant, "(quant) bound");
    s_verify->add_flag("--frak", va.frak, "frak-S lower bound");
    s_verify->add_flag("--pigeonhole", va.pigeonhole, "pigeonhole step");
    s_verify->add_option("--n-max", va.n_max, "range for the Chen check")
        ->check(CLI::Range(std::uint64_t{80}, std::uint64_t{100'000'000}));
    add_common(s_verify);

    MeasureArgs ma;
    auto* s_measure = app.add_subcommand("measure", "greedy witness / measure certificate (JSON)");
    auto* set_opt = s_measure->add_option("--set", ma.set_file, "interval set JSON file");
    s_measure->add_option("--intervals", ma.intervals, "lo:hi,... (hi may be inf)")->excludes(set_opt);
    s_measure->add_option("--k", ma.k, "number of betas")->check(CLI::Range(2u, 1000u));
    s_measure->add_option("--epsilon", ma.epsilon, "slack, num/den");
    s_measure->add_option("--window", ma.window, "search window, num/den");
    s_measure->add_option("--T", ma.t, "check mu(B ∩ [0,T)) >= T/(lambda+1) - epsilon");
    add_common(s_measure);

    TuplesArgs ta;
    auto* s_tuples = app.add_subcommand("tuples", "admissibility or Erdős–Rankin construction (JSON)");
    s_tuples->add_option("--shifts", ta.shifts, "check this tuple instead of constructing one");
    s_tuples->add_option("--x", ta.x, "x, num/den");
    s_tuples->add_option("--y", ta.y, "sieve primes p <= y");
    s_tuples->add_option("--z", ta.z, "interval (0, z]");
    s_tuples->add_option("--betas", ta.betas, "comma-separated betas, num/den");
    s_tuples->add_option("--K", ta.k, "expected tuple size");
    add_common(s_tuples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "npg: " << e.what() << "\n";
        return 2;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 2;
    }

    try {
        if (s_gaps->parsed())
            return run_gaps(common, gaps);
        if (s_sf->parsed())
            return run_sievefun(common, sf);
        if (s_const->parsed())
            return run_constants(common, ca);
        if (s_sweep->parsed())
            return run_sweep(common, sw);
        if (s_verify->parsed())
            return run_verify(common, va);
        if (s_measure->parsed())
            return run_measure(common, ma);
        if (s_tuples->parsed())
            return run_tuples(common, ta);
    } catch (const std::exception& e) {
        std::cerr << "npg: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
