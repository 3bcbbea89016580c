#include "npg/constants_pipeline.hpp"
#include "npg/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <utility>

using namespace npg;

namespace {

// Reference values from tests/oracles/sieve_constants.py (closed-form sieve
// functions, mpmath / scipy quadrature).
constexpr double kRefOmega1 = 4.1864411748256232;
constexpr double kRefOmega2 = 0.27966176223843486;
constexpr double kRefOmega3 = 0.07105911437532544;

const SolverProducts& products()
{
    static const SolverProducts p = SolverProducts::solve();
    return p;
}

}  // namespace

TEST(Constants, MatchIndependentReference)
{
    const ChenParameters params;
    EXPECT_NEAR(omega1(params, products().linear), kRefOmega1, 1e-9);
    EXPECT_NEAR(omega2(params, products().linear), kRefOmega2, 1e-6);
    EXPECT_NEAR(omega3(params, products().buchstab).value, kRefOmega3, 1e-5);
}

TEST(Constants, CertificateAtDefaultParameters)
{
    const auto c = total_bound(ChenParameters{}, products());
    EXPECT_GT(c.omega1, 4.0);
    EXPECT_LE(c.omega1, 4.19);
    EXPECT_GE(c.omega2, 0.279);
    EXPECT_GT(c.omega3, 0.0);
    EXPECT_LE(c.omega3, 0.076);
    EXPECT_TRUE(c.certified());
    EXPECT_DOUBLE_EQ(c.total, c.omega1 - c.omega2 + c.omega3);
}

TEST(Constants, Omega1TwoRoutes)
{
    for (double alpha : {1.0 / 7.0, 0.13, 0.15, 1.0 / 6.5}) {
        const ChenParameters p{alpha, 0.22};
        EXPECT_NEAR(omega1(p, products().linear), omega1_closed(p), 1e-8) << alpha;
    }
    EXPECT_THROW(omega1_closed(ChenParameters{0.1, 0.2}), DomainError);  // 1/(2 alpha) = 5 > 4
}

TEST(Constants, Omega2ClosedAndMarchedPaths)
{
    // beta <= 1/2 - 2 alpha keeps the f_lin argument >= 2
    for (auto [alpha, beta] : {std::pair{1.0 / 7.0, 0.16}, {1.0 / 7.0, 0.2}, {1.0 / 7.0, 3.0 / 14.0}, {0.12, 0.24}}) {
        const ChenParameters p{alpha, beta};
        EXPECT_NEAR(omega2(p, products().linear, 1e-9, LowerPath::Auto),
                    omega2(p, products().linear, 1e-9, LowerPath::Marched), 1e-7)
            << beta;
    }
}

TEST(Constants, Omega3AgainstGrid)
{
    const ChenParameters p;
    const double adaptive = omega3(p, products().buchstab).value;
    EXPECT_NEAR(adaptive, omega3_grid(p, products().buchstab, 60), 1e-3);
    // the grid rule converges to the same value
    EXPECT_NEAR(adaptive, omega3_grid(p, products().buchstab, 120), 2e-4);
}

TEST(Constants, Omega3VanishesAsBetaApproachesAlpha)
{
    const double a = 1.0 / 7.0;
    double previous = omega3(ChenParameters{a, a + 0.02}, products().buchstab).value;
    for (double w : {1e-2, 1e-3, 1e-4}) {
        const double v = omega3(ChenParameters{a, a + w}, products().buchstab, 1e-9).value;
        EXPECT_GE(v, 0.0);
        EXPECT_LT(v, previous);
        previous = v;
    }
    EXPECT_LT(previous, 1e-9);
}

TEST(Constants, ErrorEstimateIsSmall)
{
    const auto r = omega3(ChenParameters{}, products().buchstab, 1e-5);
    EXPECT_LT(r.error_estimate, 1e-5);
    EXPECT_GT(r.evaluations, 1000);
}

TEST(Constants, RefinementStability)
{
    const double tol = kDefaultQuadTol;
    const double coarse = total_bound(ChenParameters{}, products(), tol).total;
    const double fine = total_bound(ChenParameters{}, products(), tol / 10).total;
    EXPECT_LT(std::fabs(coarse - fine), tol);
}

TEST(Constants, ParameterValidation)
{
    EXPECT_THROW(ChenParameters({0.2, 0.1}).validate(), DomainError);
    EXPECT_THROW(ChenParameters({0.1, 0.25}).validate(), DomainError);
    EXPECT_THROW(ChenParameters({0.0, 0.1}).validate(), DomainError);
    EXPECT_THROW(ChenParameters::from_rationals(parse_rational("1/4"), parse_rational("1/3")), DomainError);
    const auto p = ChenParameters::from_rationals(parse_rational("1/7"), parse_rational("3/14"));
    EXPECT_DOUBLE_EQ(p.alpha, 1.0 / 7.0);
    EXPECT_TRUE(p.lower_argument_ok());
    EXPECT_FALSE((ChenParameters{0.2, 0.24}).lower_argument_ok());
    EXPECT_THROW(total_bound(ChenParameters{}, products(), 0.0), ConfigError);
}

TEST(Constants, SolverRangeIsChecked)
{
    const auto small = SolverProducts::solve(4.0, 1e-2);
    EXPECT_THROW(omega1(ChenParameters{0.1, 0.2}, small.linear), DomainError);  // needs F(5)
    EXPECT_THROW(omega3(ChenParameters{0.1, 0.2}, small.buchstab), DomainError);  // needs omega(7)
}

TEST(Sweep, SinglePointEqualsDirectEvaluation)
{
    const auto r = sweep_optimizer({1.0 / 7.0}, {3.0 / 14.0}, products(), 1e-5);
    ASSERT_EQ(r.evaluated.size(), 1u);
    EXPECT_EQ(r.best.constants.total, total_bound(ChenParameters{}, products(), 1e-5).total);
}

TEST(Sweep, ThreadCountDoesNotChangeResult)
{
    const std::vector<double> alphas{0.13, 1.0 / 7.0, 0.15};
    const std::vector<double> betas{0.19, 3.0 / 14.0, 0.23, 0.3};
    const auto one = sweep_optimizer(alphas, betas, products(), 1e-5, 1);
    const auto three = sweep_optimizer(alphas, betas, products(), 1e-5, 3);
    // beta = 0.3 is outside (alpha, 1/4); beta > 1/2 - 2 alpha drops 0.23 at 1/7
    // and both 3/14 and 0.23 at 0.15
    EXPECT_EQ(one.skipped, 6u);
    ASSERT_EQ(one.evaluated.size(), three.evaluated.size());
    for (std::size_t i = 0; i < one.evaluated.size(); ++i)
        EXPECT_EQ(one.evaluated[i].constants.total, three.evaluated[i].constants.total);
    EXPECT_EQ(one.best.params.alpha, three.best.params.alpha);
    EXPECT_EQ(one.best.params.beta, three.best.params.beta);
    for (const auto& pt : one.evaluated)
        EXPECT_LE(one.best.constants.total, pt.constants.total);
    EXPECT_TRUE(one.best.constants.certified());
}

TEST(Sweep, NoFeasiblePoint)
{
    EXPECT_THROW(sweep_optimizer({0.2}, {0.1}, products()), DomainError);
}
