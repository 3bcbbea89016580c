#include "npg/constants_pipeline.hpp"

#include "npg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

namespace npg {

void ChenParameters::validate() const
{
    if (!(alpha > 0.0 && alpha < beta && beta < 0.25))
        throw DomainError("ChenParameters: need 0 < alpha < beta < 1/4 (alpha=" + std::to_string(alpha) +
                          ", beta=" + std::to_string(beta) + ")");
}

bool ChenParameters::lower_argument_ok() const
{
    return (0.5 - beta) / alpha >= 2.0 - 1e-12;
}

ChenParameters ChenParameters::from_rationals(const Rational& alpha, const Rational& beta)
{
    ChenParameters p{to_double(alpha), to_double(beta)};
    if (!(alpha > 0 && alpha < beta && beta < Rational(1, 4)))
        throw DomainError("ChenParameters: need 0 < alpha < beta < 1/4 (alpha=" + to_string(alpha) +
                          ", beta=" + to_string(beta) + ")");
    return p;
}

SolverProducts SolverProducts::solve(double s_max, double step)
{
    return {solve_linear_sieve(s_max, step), solve_buchstab(s_max, step)};
}

double omega1(const ChenParameters& params, const LinearSieveSolution& sol)
{
    params.validate();
    const double s = 1.0 / (2.0 * params.alpha);
    if (s > sol.upper.s_max())
        throw DomainError("omega1: 1/(2 alpha) = " + std::to_string(s) + " beyond solved F_lin range");
    return sol.upper(s) / (params.alpha * exp_gamma());
}

double omega1_closed(const ChenParameters& params, double tol)
{
    params.validate();
    const double s = 1.0 / (2.0 * params.alpha);
    if (s > 4.0)
        throw DomainError("omega1_closed: needs 1/(2 alpha) <= 4");
    double integral = 0.0;
    if (s > 3.0)
        integral = adaptive_simpson([](double t) { return std::log(t - 2.0) / (t - 1.0); }, 3.0, s,
                                    tol * s * params.alpha / 2.0)
                       .value;
    return (2.0 + 2.0 * integral) / (s * params.alpha);
}

double omega2(const ChenParameters& params, const LinearSieveSolution& sol, double tol, LowerPath path)
{
    params.validate();
    const double a = params.alpha;
    const double b = params.beta;
    const double arg_lo = (0.5 - b) / a;
    const double arg_hi = (0.5 - a) / a;
    if (arg_lo < sol.lower.s_min() - 1e-12 || arg_hi > sol.lower.s_max())
        throw DomainError("omega2: f_lin argument range [" + std::to_string(arg_lo) + ", " +
                          std::to_string(arg_hi) + "] outside solved range");

    auto f_lower = [&](double arg) {
        arg = std::max(arg, 2.0);
        if (path == LowerPath::Auto && arg <= 4.0)
            return closed_form_flin_lower(arg);
        return sol.lower(arg);
    };
    const double prefactor = 1.0 / (2.0 * a * exp_gamma());
    // f_lin has kinks at integer arguments: t = 1/2 - k alpha.
    std::vector<double> cuts;
    for (double k = std::ceil(arg_lo); k <= arg_hi; k += 1.0)
        cuts.push_back(0.5 - k * a);
    std::sort(cuts.begin(), cuts.end());
    auto r = adaptive_simpson([&](double t) { return f_lower((0.5 - t) / a) / t; }, a, b, tol / prefactor, cuts);
    return prefactor * r.value;
}

namespace {

void check_omega_range(const ChenParameters& params, const PiecewiseSolution& buchstab)
{
    const double lo = (1.0 - 3.0 * params.beta) / params.beta;
    const double hi = (1.0 - 3.0 * params.alpha) / params.alpha;
    if (lo < buchstab.s_min() || hi > buchstab.s_max())
        throw DomainError("omega3: Buchstab argument range [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] outside solved range");
}

// Integer values k of the Buchstab argument that can occur for the parameters.
std::vector<double> argument_integers(const ChenParameters& params)
{
    std::vector<double> ks;
    const double lo = (1.0 - 3.0 * params.beta) / params.beta;
    const double hi = (1.0 - 3.0 * params.alpha) / params.alpha;
    for (double k = std::ceil(lo); k <= hi; k += 1.0)
        ks.push_back(k);
    return ks;
}

std::vector<double> sorted_inside(std::vector<double> xs, double lo, double hi)
{
    std::erase_if(xs, [&](double x) { return !(x > lo && x < hi); });
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace

QuadratureResult omega3(const ChenParameters& params, const PiecewiseSolution& buchstab, double tol)
{
    params.validate();
    check_omega_range(params, buchstab);
    const double a = params.alpha;
    const double b = params.beta;
    if (b - a <= 0.0)
        return {};
    const double width = b - a;
    // Factors 1/u are bounded by 1/alpha on the slab; assert rather than assume.
    if (!(a > 0.0) || !std::isfinite(1.0 / (a * a * a * a)))
        throw DomainError("omega3: integrand unbounded on the slab");

    // Per-level tolerances so that each level contributes at most tol/3 to 2*integral.
    const double outer_tol = tol / 3.0;
    const double middle_tol = tol / 3.0 * a / (2.0 * width);
    const double inner_tol = tol / 3.0 * a * a * a / (2.0 * width * width);
    const auto ks = argument_integers(params);

    double middle_err = 0.0;
    double inner_err = 0.0;
    long evaluations = 0;

    auto inner = [&](double u1, double u2) {
        std::vector<double> cuts;
        for (double k : ks)
            cuts.push_back(1.0 - u1 - (k + 1.0) * u2);
        cuts = sorted_inside(std::move(cuts), u2, b);
        auto r = adaptive_simpson(
            [&](double u3) { return buchstab((1.0 - u1 - u2 - u3) / u2) / u3; }, u2, b, inner_tol, cuts);
        inner_err = std::max(inner_err, r.error_estimate);
        evaluations += r.evaluations;
        return r.value / (u2 * u2);
    };
    auto middle = [&](double u1) {
        std::vector<double> cuts;
        for (double k : ks) {
            cuts.push_back((1.0 - u1) / (k + 2.0));
            cuts.push_back((1.0 - u1 - b) / (k + 1.0));
        }
        cuts = sorted_inside(std::move(cuts), u1, b);
        auto r = adaptive_simpson([&](double u2) { return inner(u1, u2); }, u1, b, middle_tol, cuts);
        middle_err = std::max(middle_err, r.error_estimate);
        return 2.0 * r.value / u1;
    };
    std::vector<double> cuts;
    for (double k : ks) {
        cuts.push_back(1.0 / (k + 3.0));
        cuts.push_back(1.0 - (k + 2.0) * b);
        cuts.push_back((1.0 - b) / (k + 2.0));
    }
    cuts = sorted_inside(std::move(cuts), a, b);
    auto outer = adaptive_simpson(middle, a, b, outer_tol, cuts);

    QuadratureResult result;
    result.value = outer.value;
    result.error_estimate = outer.error_estimate + 2.0 * width / a * middle_err +
                            2.0 * width * width / (a * a * a) * inner_err;
    result.evaluations = evaluations;
    return result;
}

double omega3_grid(const ChenParameters& params, const PiecewiseSolution& buchstab, int cells)
{
    params.validate();
    check_omega_range(params, buchstab);
    if (cells < 1)
        throw ConfigError("omega3_grid: need at least one cell");
    const double a = params.alpha;
    const double h = (params.beta - a) / cells;
    auto f = [&](double u1, double u2, double u3) {
        return buchstab((1.0 - u1 - u2 - u3) / u2) / (u1 * u2 * u2 * u3);
    };
    auto at = [&](int cell, double frac) { return a + (cell + frac) * h; };

    long double sum = 0.0L;
    for (int i = 0; i < cells; ++i)
        for (int j = i; j < cells; ++j)
            for (int k = j; k < cells; ++k) {
                if (i < j && j < k)
                    sum += f(at(i, 0.5), at(j, 0.5), at(k, 0.5));
                else if (i == j && j < k)
                    sum += 0.5L * f(at(i, 1.0 / 3.0), at(j, 2.0 / 3.0), at(k, 0.5));
                else if (i < j && j == k)
                    sum += 0.5L * f(at(i, 0.5), at(j, 1.0 / 3.0), at(k, 2.0 / 3.0));
                else
                    sum += f(at(i, 0.25), at(j, 0.5), at(k, 0.75)) / 6.0L;
            }
    return static_cast<double>(2.0L * sum * h * h * h);
}

SieveConstants total_bound(const ChenParameters& params, const SolverProducts& products, double quad_tol)
{
    if (!(quad_tol > 0.0))
        throw ConfigError("total_bound: quad_tol must be positive");
    SieveConstants c;
    c.params = params;
    c.quad_tol = quad_tol;
    c.omega1 = omega1(params, products.linear);
    c.omega2 = omega2(params, products.linear, quad_tol);
    auto o3 = omega3(params, products.buchstab, quad_tol * kOmega3TolFactor);
    c.omega3 = o3.value;
    c.omega3_error = o3.error_estimate;
    c.total = c.omega1 - c.omega2 + c.omega3;
    return c;
}

bool sweep_feasible(const ChenParameters& params, const SolverProducts& products)
{
    const double a = params.alpha;
    const double b = params.beta;
    if (!(a > 0.0 && a < b && b < 0.25) || !params.lower_argument_ok())
        return false;
    return 1.0 / (2.0 * a) <= products.linear.upper.s_max() &&
           (0.5 - a) / a <= products.linear.lower.s_max() &&
           (1.0 - 3.0 * a) / a <= products.buchstab.s_max();
}

SweepResult sweep_optimizer(const std::vector<double>& alpha_grid, const std::vector<double>& beta_grid,
                            const SolverProducts& products, double quad_tol, unsigned threads)
{
    SweepResult result;
    std::vector<ChenParameters> points;
    for (double a : alpha_grid)
        for (double b : beta_grid) {
            ChenParameters p{a, b};
            if (sweep_feasible(p, products))
                points.push_back(p);
            else
                ++result.skipped;
        }
    if (points.empty())
        throw DomainError("sweep_optimizer: no feasible grid point");

    result.evaluated.resize(points.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(points.size());
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                result.evaluated[i] = {points[i], total_bound(points[i], products, quad_tol)};
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(points.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (const auto& failure : failures)
        if (failure)
            std::rethrow_exception(failure);

    result.best = result.evaluated.front();
    for (const auto& pt : result.evaluated) {
        const double t = pt.constants.total;
        const double best = result.best.constants.total;
        if (t < best || (t == best && pt.params.alpha > result.best.params.alpha))
            result.best = pt;
    }
    return result;
}

}  // namespace npg
