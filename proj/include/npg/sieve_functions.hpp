#pragma once

// Linear-sieve limit functions F_lin, f_lin and the Buchstab function omega,
// marched on a uniform grid from their base-interval closed forms.

#include <iosfwd>
#include <numbers>
#include <string_view>
#include <vector>

namespace npg {

/// Euler-Mascheroni constant; every e^gamma in the project goes through these.
inline constexpr double kEulerGamma = std::numbers::egamma;
double exp_gamma();

enum class SolutionKind { UpperLinear, LowerLinear, Buchstab };

std::string_view to_string(SolutionKind kind);

inline constexpr double kDefaultStep = 1e-4;
inline constexpr double kDefaultSMax = 12.0;
inline constexpr double kMaxStep = 1e-2;

/// Samples of a delay-differential solution on s_min + i*step, i = 0..n-1.
/// Integers are always grid nodes; the solutions' kinks sit there.
class PiecewiseSolution {
  public:
    PiecewiseSolution(SolutionKind kind, double s_min, int nodes_per_unit, std::vector<double> values);

    SolutionKind kind() const { return kind_; }
    double s_min() const { return s_min_; }
    double s_max() const { return s_min_ + static_cast<double>(values_.size() - 1) / per_unit_; }
    double step() const { return 1.0 / per_unit_; }
    int nodes_per_unit() const { return per_unit_; }
    std::size_t size() const { return values_.size(); }
    double node(std::size_t i) const { return s_min_ + static_cast<double>(i) / per_unit_; }
    double value(std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    /// Cubic Lagrange interpolation through the four nearest nodes of the same
    /// unit interval [m, m+1]; quadratic or linear where that interval holds
    /// fewer nodes. Exact at nodes. Throws DomainError outside [s_min, s_max].
    double operator()(double s) const;

    /// `s,value` rows at grid resolution, 17 significant digits.
    void write_csv(std::ostream& out) const;

  private:
    SolutionKind kind_;
    double s_min_;
    int per_unit_;
    std::vector<double> values_;
};

struct LinearSieveSolution {
    PiecewiseSolution upper;  ///< F_lin on [1, s_max]
    PiecewiseSolution lower;  ///< f_lin on [2, s_max]
};

/// Marches s F(s) = 3F(3) + int_3^s f(t-1) dt and s f(s) = int_2^s F(t-1) dt
/// from sF = 2e^gamma on [1,3] and sf = 0 on s <= 2. Composite Simpson on the
/// stored history. Requires s_max >= 4 and a step with an even integer 1/step;
/// steps above 1e-2 are rejected with ConfigError.
LinearSieveSolution solve_linear_sieve(double s_max = kDefaultSMax, double step = kDefaultStep);

/// omega on [1, s_max]: exactly 1/s on [1,2], then s omega(s) = 1 + int_2^s omega(t-1) dt.
PiecewiseSolution solve_buchstab(double s_max = kDefaultSMax, double step = kDefaultStep);

/// 2 e^gamma ln(s-1) / s, valid for 2 <= s <= 4.
double closed_form_flin_lower(double s);

/// 2 e^gamma / s, valid for 1 <= s <= 3.
double closed_form_flin_upper(double s);

/// Buchstab closed forms: 1/s on [1,2], (1 + ln(s-1))/s on [2,3].
double closed_form_buchstab(double s);

inline double eval_flin(const LinearSieveSolution& sol, double s) { return sol.upper(s); }
inline double eval_flin_lower(const LinearSieveSolution& sol, double s) { return sol.lower(s); }
inline double eval_buchstab(const PiecewiseSolution& sol, double s) { return sol(s); }

}  // namespace npg
