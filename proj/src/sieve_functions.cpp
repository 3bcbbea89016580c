#include "npg/sieve_functions.hpp"

#include "npg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace npg {

double exp_gamma()
{
    static const double value = std::exp(kEulerGamma);
    return value;
}

std::string_view to_string(SolutionKind kind)
{
    switch (kind) {
    case SolutionKind::UpperLinear:
        return "F_lin";
    case SolutionKind::LowerLinear:
        return "f_lin";
    case SolutionKind::Buchstab:
        return "buchstab";
    }
    return "unknown";
}

PiecewiseSolution::PiecewiseSolution(SolutionKind kind, double s_min, int nodes_per_unit,
                                     std::vector<double> values)
    : kind_(kind), s_min_(s_min), per_unit_(nodes_per_unit), values_(std::move(values))
{
    if (values_.size() < 2 || per_unit_ < 1)
        throw ConfigError("PiecewiseSolution: need at least two nodes");
}

double PiecewiseSolution::operator()(double s) const
{
    constexpr double kSnap = 1e-9;
    const double pos = (s - s_min_) * per_unit_;
    const auto last = static_cast<double>(values_.size() - 1);
    if (!(pos >= -kSnap && pos <= last + kSnap))
        throw DomainError("PiecewiseSolution(" + std::string(to_string(kind_)) + "): s = " +
                          std::to_string(s) + " outside solved range");
    const double nearest = std::round(pos);
    if (std::fabs(pos - nearest) <= kSnap)
        return values_[static_cast<std::size_t>(nearest)];

    // Unit interval [m, m+1] holding s; never interpolate across an integer.
    const double m = std::floor(s);
    const auto n = static_cast<long>(values_.size());
    const long piece_lo = std::max(0L, std::lround((m - s_min_) * per_unit_));
    const long piece_hi = std::min(n - 1, std::lround((m + 1.0 - s_min_) * per_unit_));
    const long width = piece_hi - piece_lo + 1;
    const int points = static_cast<int>(std::min(4L, width));
    long first = static_cast<long>(std::floor(pos)) - (points == 4 ? 1 : 0);
    first = std::clamp(first, piece_lo, piece_hi - points + 1);

    double result = 0.0;
    for (int j = 0; j < points; ++j) {
        double weight = 1.0;
        const double xj = static_cast<double>(first + j);
        for (int k = 0; k < points; ++k)
            if (k != j)
                weight *= (pos - static_cast<double>(first + k)) / (xj - static_cast<double>(first + k));
        result += weight * values_[static_cast<std::size_t>(first + j)];
    }
    return result;
}

void PiecewiseSolution::write_csv(std::ostream& out) const
{
    out << "s,value\n";
    char line[96];
    for (std::size_t i = 0; i < values_.size(); ++i) {
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", node(i), values_[i]);
        out << line;
    }
}

namespace {

int nodes_per_unit(double step)
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw ConfigError("step must be positive");
    if (step > kMaxStep)
        throw ConfigError("step " + std::to_string(step) + " too large to resolve (max 1e-2)");
    const double inv = 1.0 / step;
    const long n = std::lround(inv);
    if (std::fabs(inv - static_cast<double>(n)) > 1e-6 * inv || n % 2 != 0)
        throw ConfigError("1/step must be an even integer so that integers are Simpson pair boundaries");
    return static_cast<int>(n);
}

std::size_t node_count(double s_min, double s_max, int per_unit)
{
    return static_cast<std::size_t>(std::floor((s_max - s_min) * per_unit + 1e-9)) + 1;
}

// Running integral of g over nodes 0, h, 2h, ...: Simpson on pairs, and a
// third-order one-panel rule inside a pair for odd nodes. Pairs start at even
// indices, so a kink at an even node never sits inside a Simpson panel.
class CumulativeSimpson {
  public:
    explicit CumulativeSimpson(double h) : h_(h) {}

    // Integral from node 0 to node m; g(i) must be available for i <= m + 1.
    template <typename G>
    long double at(long m, const G& g)
    {
        if (m == 0)
            return 0.0L;
        if (m % 2 == 0) {
            even_ += static_cast<long double>(h_) / 3.0L *
                     (static_cast<long double>(g(m - 2)) + 4.0L * g(m - 1) + g(m));
            return even_;
        }
        return even_ + static_cast<long double>(h_) / 12.0L *
                           (5.0L * g(m - 1) + 8.0L * g(m) - static_cast<long double>(g(m + 1)));
    }

  private:
    double h_;
    long double even_ = 0.0L;  // integral up to the last even node
};

}  // namespace

double closed_form_flin_lower(double s)
{
    if (!(s >= 2.0 && s <= 4.0))
        throw DomainError("closed_form_flin_lower: s must lie in [2, 4]");
    return 2.0 * exp_gamma() * std::log(s - 1.0) / s;
}

double closed_form_flin_upper(double s)
{
    if (!(s >= 1.0 && s <= 3.0))
        throw DomainError("closed_form_flin_upper: s must lie in [1, 3]");
    return 2.0 * exp_gamma() / s;
}

double closed_form_buchstab(double s)
{
    if (!(s >= 1.0 && s <= 3.0))
        throw DomainError("closed_form_buchstab: s must lie in [1, 3]");
    if (s <= 2.0)
        return 1.0 / s;
    return (1.0 + std::log(s - 1.0)) / s;
}

LinearSieveSolution solve_linear_sieve(double s_max, double step)
{
    if (!(s_max >= 4.0) || !std::isfinite(s_max))
        throw ConfigError("solve_linear_sieve: s_max must be >= 4");
    const int n = nodes_per_unit(step);
    const double h = 1.0 / n;
    const std::size_t nodes = node_count(1.0, s_max, n);

    // F index i <-> s = 1 + i/n ; f index j <-> s = 2 + j/n, so f[j] = f(F-node j + n).
    std::vector<double> upper(nodes);
    std::vector<double> lower(nodes - static_cast<std::size_t>(n));
    const double two_eg = 2.0 * exp_gamma();

    auto F_at = [&](long m) { return upper[static_cast<std::size_t>(m)]; };
    auto f_at = [&](long m) { return lower[static_cast<std::size_t>(m)]; };
    CumulativeSimpson upper_integral(h), lower_integral(h);

    const long base_end = 2L * n;  // s = 3
    for (std::size_t i = 0; i < nodes; ++i) {
        const auto li = static_cast<long>(i);
        const double s = 1.0 + static_cast<double>(i) / n;
        // f at this s (needs F up to s - 1 + h, already filled)
        if (li >= n) {
            const long j = li - n;
            lower[static_cast<std::size_t>(j)] =
                j == 0 ? 0.0 : static_cast<double>(lower_integral.at(j, F_at) / s);
        }
        if (li <= base_end) {
            upper[i] = two_eg / s;
        } else {
            const long m = li - base_end;
            upper[i] = static_cast<double>((static_cast<long double>(two_eg) + upper_integral.at(m, f_at)) / s);
        }
    }
    return {PiecewiseSolution(SolutionKind::UpperLinear, 1.0, n, std::move(upper)),
            PiecewiseSolution(SolutionKind::LowerLinear, 2.0, n, std::move(lower))};
}

PiecewiseSolution solve_buchstab(double s_max, double step)
{
    if (!(s_max >= 3.0) || !std::isfinite(s_max))
        throw ConfigError("solve_buchstab: s_max must be >= 3");
    const int n = nodes_per_unit(step);
    const double h = 1.0 / n;
    const std::size_t nodes = node_count(1.0, s_max, n);

    std::vector<double> omega(nodes);
    auto w_at = [&](long m) { return omega[static_cast<std::size_t>(m)]; };
    CumulativeSimpson integral(h);
    for (std::size_t i = 0; i < nodes; ++i) {
        const auto li = static_cast<long>(i);
        const double s = 1.0 + static_cast<double>(i) / n;
        if (li <= n)
            omega[i] = 1.0 / s;
        else
            omega[i] = static_cast<double>((1.0L + integral.at(li - n, w_at)) / s);
    }
    return PiecewiseSolution(SolutionKind::Buchstab, 1.0, n, std::move(omega));
}

}  // namespace npg
