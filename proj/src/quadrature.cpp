#include "npg/quadrature.hpp"

#include "npg/errors.hpp"

#include <cmath>
#include <vector>

namespace npg {

namespace {

// Guards against a lucky agreement of the first coarse estimates.
constexpr int kMinDepth = 2;

struct Simpson {
    const std::function<double(double)>& f;
    int max_depth;
    QuadratureResult result;

    double eval(double x)
    {
        double y = f(x);
        ++result.evaluations;
        if (!std::isfinite(y))
            throw DomainError("adaptive_simpson: integrand is not finite");
        return y;
    }

    void refine(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth)
    {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth >= max_depth || (depth >= kMinDepth && std::fabs(delta) <= 15.0 * tol)) {
            result.value += left + right + delta / 15.0;
            result.error_estimate += std::fabs(delta) / 15.0;
            return;
        }
        refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
        refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    void panel(double a, double b, double tol)
    {
        const double fa = eval(a);
        const double fb = eval(b);
        const double fm = eval(0.5 * (a + b));
        refine(a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 0);
    }
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::span<const double> breakpoints, int max_depth)
{
    if (!(tol > 0.0))
        throw ConfigError("adaptive_simpson: tolerance must be positive");
    if (a == b)
        return {};
    if (a > b) {
        auto r = adaptive_simpson(f, b, a, tol, breakpoints, max_depth);
        r.value = -r.value;
        return r;
    }

    std::vector<double> cuts{a};
    for (double x : breakpoints)
        if (x > cuts.back() && x < b)
            cuts.push_back(x);
    cuts.push_back(b);

    Simpson s{f, max_depth, {}};
    const double width = b - a;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        s.panel(cuts[i], cuts[i + 1], tol * (cuts[i + 1] - cuts[i]) / width);
    return s.result;
}

}  // namespace npg
