#pragma once

// Difference sets, the greedy construction behind the measure bound
// mu(B ∩ [0,T)) >= T/(k-1), and syndetic gaps, all over exact interval sets.

#include "npg/interval_set.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace npg {

/// {b_j - b_i : i < j}, sorted and deduplicated. Throws DomainError for m < 2
/// or unsorted input.
std::vector<Rational> difference_set(const std::vector<Rational>& betas);

/// Some pairwise difference of `betas` lies in `set`.
bool hits(const IntervalSet& set, const std::vector<Rational>& betas);

enum class Verdict {
    Witness,      ///< r_0 < ... < r_{k-1} with Δ ∩ B = ∅ found inside the window
    Certificate,  ///< the greedy stopped before level k-1
};

std::string_view to_string(Verdict v);

struct GreedyTrace {
    std::vector<Rational> r;                  ///< r_0 = 0, r_1, ...
    std::vector<Rational> s;                  ///< s[j-1] = inf S_j for every recorded level j >= 1
    std::vector<bool> infimum_attained;       ///< r_j == s_j
    Rational epsilon;
    Rational window;
    unsigned k = 2;
    std::optional<unsigned> terminated_level;  ///< ℓ with S_ℓ = ∅; nullopt = window exhausted
    Verdict verdict = Verdict::Certificate;

    /// Levels available to the measure argument: ℓ, or (levels reached + 1) when the
    /// window ran out first.
    unsigned lambda_cap() const;
};

/// Greedy: S_j = {s > r_{j-1} : s ∉ B + r_i for all i < j}, s_j = inf S_j and
/// r_j = s_j when attained. An unattained infimum (S_j opens at r_{j-1}) takes
/// r_j = s_j + min(ε, first piece length)/2 (or half the piece when ε = 0).
/// Stops with WITNESS at level k-1, CERTIFICATE when S_j is empty or s_j > window.
/// Throws DomainError for k < 2, ε < 0 or window <= 0.
GreedyTrace greedy_witness(const IntervalSet& set, unsigned k, const Rational& epsilon, const Rational& window);

struct MeasureCheck {
    bool coverings_ok = false;   ///< [r_j, s_{j+1}) ⊆ ∪_{i<=j} (B + r_i) at every level
    bool bound_ok = false;       ///< measure >= T/(λ+1) - ε
    unsigned lambda = 0;         ///< T ∈ (r_λ, r_{λ+1}]
    Rational measure;            ///< μ(B ∩ [0,T))
    Rational bound;              ///< T/(λ+1) - ε
    Rational weak_bound;         ///< T/(λ+1) - (λ+1)ε, the looser form
    bool holds() const { return coverings_ok && bound_ok; }
};

/// Re-derives the trace from `set` (DomainError on mismatch), then checks the
/// covering inclusions and the measure bound exactly. Requires a CERTIFICATE
/// trace and 0 < T <= window.
MeasureCheck measure_bound_verify(const IntervalSet& set, const GreedyTrace& trace, const Rational& t);

/// Length of the longest component of [0, window] \ set.
Rational syndetic_gap(const IntervalSet& set, const Rational& window);

}  // namespace npg
