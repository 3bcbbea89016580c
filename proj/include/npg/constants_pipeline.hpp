#pragma once

// The three Chen-sieve main-term constants and their certificate
// Omega1 - Omega2 + Omega3 < 3.99.

#include "npg/quadrature.hpp"
#include "npg/rational.hpp"
#include "npg/sieve_functions.hpp"

#include <optional>
#include <vector>

namespace npg {

inline constexpr double kCertificateBound = 3.99;
inline constexpr double kDefaultQuadTol = 1e-6;
/// Omega3 (a triple integral) runs at this multiple of the base tolerance.
inline constexpr double kOmega3TolFactor = 10.0;

/// Sifting exponents: Y = N^alpha, Z = N^beta, 0 < alpha < beta < 1/4.
struct ChenParameters {
    double alpha = 1.0 / 7.0;
    double beta = 3.0 / 14.0;

    /// Throws DomainError unless 0 < alpha < beta < 1/4.
    void validate() const;
    /// (1/2 - beta)/alpha >= 2, so every f_lin argument in Omega2 is >= 2.
    bool lower_argument_ok() const;

    static ChenParameters from_rationals(const Rational& alpha, const Rational& beta);
};

/// Marched F_lin, f_lin and omega shared by every constant.
struct SolverProducts {
    LinearSieveSolution linear;
    PiecewiseSolution buchstab;

    static SolverProducts solve(double s_max = kDefaultSMax, double step = kDefaultStep);
};

struct SieveConstants {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double omega3 = 0.0;
    double total = 0.0;
    double quad_tol = kDefaultQuadTol;
    double omega3_error = 0.0;  ///< a-posteriori estimate from the nested quadrature
    ChenParameters params;

    bool certified() const { return total < kCertificateBound; }
};

/// F_lin(1/(2 alpha)) / (alpha e^gamma), from the marched solution.
double omega1(const ChenParameters& params, const LinearSieveSolution& sol);

/// Same constant through the base-interval closed forms:
/// (2 + 2 int_3^s ln(t-2)/(t-1) dt) / (s alpha) with s = 1/(2 alpha), valid for
/// 1 <= s <= 4 (at alpha = 1/7 this is 4 + 4 int_3^{7/2} ln(s-2)/(s-1) ds).
double omega1_closed(const ChenParameters& params, double tol = kDefaultQuadTol);

enum class LowerPath {
    Auto,     ///< closed form where the argument is in [2,4], marched elsewhere
    Marched,  ///< marched f_lin everywhere
};

/// (1/(2 alpha e^gamma)) int_alpha^beta f_lin((1/2 - t)/alpha) dt/t.
double omega2(const ChenParameters& params, const LinearSieveSolution& sol,
              double tol = kDefaultQuadTol, LowerPath path = LowerPath::Auto);

/// 2 int_{alpha<u1<u2<u3<beta} omega((1-u1-u2-u3)/u2) du1 du2 du3 / (u1 u2^2 u3),
/// iterated adaptive Simpson (u1 outermost), each level at tol/3.
QuadratureResult omega3(const ChenParameters& params, const PiecewiseSolution& buchstab,
                        double tol = kDefaultQuadTol * kOmega3TolFactor);

/// Independent low-order check of omega3: a product-grid rule on the cube
/// [alpha, beta]^3. Off-diagonal cells use their midpoint; cells cut by the
/// planes u1 = u2 or u2 = u3 carry their exact volume fraction (1/2, 1/6) at the
/// centroid of the part inside the simplex.
double omega3_grid(const ChenParameters& params, const PiecewiseSolution& buchstab, int cells = 60);

/// Evaluates all three constants at `quad_tol` (Omega3 at kOmega3TolFactor * quad_tol).
SieveConstants total_bound(const ChenParameters& params, const SolverProducts& products,
                           double quad_tol = kDefaultQuadTol);

struct SweepPoint {
    ChenParameters params;
    SieveConstants constants;
};

struct SweepResult {
    SweepPoint best;
    std::vector<SweepPoint> evaluated;  ///< feasible points, alpha-major grid order
    std::size_t skipped = 0;            ///< infeasible grid points
};

/// True iff the point satisfies the parameter invariants, the Omega2 argument
/// condition and every solver-range requirement of `products`.
bool sweep_feasible(const ChenParameters& params, const SolverProducts& products);

/// Minimizes total over the feasible part of alpha_grid x beta_grid; ties go to
/// the larger alpha. Points run on up to `threads` workers, reduced in grid order.
/// Throws DomainError when no grid point is feasible.
SweepResult sweep_optimizer(const std::vector<double>& alpha_grid, const std::vector<double>& beta_grid,
                            const SolverProducts& products, double quad_tol = kDefaultQuadTol,
                            unsigned threads = 1);

}  // namespace npg
