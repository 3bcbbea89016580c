#pragma once

// Admissible tuples, a small-scale Erdős–Rankin residue construction, and the
// W / B / CRT bookkeeping of the W-trick.

#include "npg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace npg {

/// Sorted distinct nonnegative shifts h_1 < ... < h_K.
struct KTuple {
    std::vector<std::uint64_t> shifts;

    /// Sorts; throws DomainError on duplicates or an empty list.
    static KTuple from(std::vector<std::uint64_t> shifts);
    std::size_t size() const { return shifts.size(); }
};

struct Admissibility {
    bool admissible = true;
    std::optional<std::uint64_t> failing_prime;  ///< smallest p whose classes are all covered
};

/// Checks primes p <= K only; K shifts cannot cover the p > K classes of a larger prime.
Admissibility is_admissible(const KTuple& h);

/// Largest prime factor of prod_{i<j} (h_j - h_i), with P+(1) = 1. DomainError for K < 2.
std::uint64_t diff_smoothness(const KTuple& h);

/// Largest prime factor of n >= 1 (1 for n = 1).
std::uint64_t largest_prime_factor(std::uint64_t n);

/// p -> a_p with 0 <= a_p < p.
using ResidueSystem = std::map<std::uint64_t, std::uint64_t>;

struct WContext {
    Integer n;
    Rational eps;
    std::optional<std::uint64_t> excluded_prime;
    Integer w;                    ///< prod of p <= eps ln N, p != excluded
    Integer phi_w;
    double b = 0.0;               ///< (phi(W)/W) ln N
    std::vector<std::uint64_t> primes;
};

/// DomainError when eps ln N < 2 or no prime is left after the exclusion.
WContext build_w_context(const Integer& n, const Rational& eps, std::optional<std::uint64_t> excluded = std::nullopt);

struct CrtResult {
    Integer b;        ///< 0 <= b < modulus, b ≡ -a_p (mod p) for every p
    Integer modulus;  ///< prod of the primes in the system
    std::optional<bool> tuple_coprime;  ///< gcd(prod (b + h_j), modulus) == 1, when a tuple is given
};

/// Throws DomainError for a non-prime modulus, a residue outside [0, p) or an empty system.
CrtResult crt_b(const ResidueSystem& rs, const std::optional<KTuple>& tuple = std::nullopt);

enum class ConstructionStatus { Success, Infeasible, NotAdmissible, NotSmooth };

std::string_view to_string(ConstructionStatus s);

struct ErdosRankinResult {
    ConstructionStatus status = ConstructionStatus::Success;
    std::optional<std::uint64_t> blocking_prime;  ///< Infeasible / NotAdmissible
    std::vector<std::uint64_t> targets;           ///< round(beta x y + y), sorted, distinct
    KTuple tuple;                                 ///< survivors in (0, z]
    ResidueSystem residues;
    bool admissible = false;
    std::uint64_t p_plus = 1;                     ///< diff_smoothness of the survivors (1 if < 2)
    std::uint64_t max_deviation = 0;              ///< max over survivors of distance to nearest target
    bool size_matches_k = false;
};

/// For each prime p <= y in turn, picks a_p avoiding every target mod p and
/// removing the most surviving non-targets from (0, z]; ties take the smallest
/// residue. Post-checks admissibility and P+ of differences <= y.
/// DomainError unless y >= 2, y(1 + (1 + beta_max) x) <= z, x > 0, betas >= 0, K >= 1.
ErdosRankinResult erdos_rankin_construct(const Rational& x, std::uint64_t y, std::uint64_t z,
                                         const std::vector<Rational>& betas, std::uint64_t k);

/// round(beta x y + y), halves rounding up.
std::uint64_t target_position(const Rational& beta, const Rational& x, std::uint64_t y);

/// Labels each shift with the index of the nearest target (ties to the lower
/// index). DomainError unless every class has |H| / (number of betas) members.
std::vector<std::size_t> partition_by_targets(const KTuple& h, const std::vector<Rational>& betas,
                                              const Rational& x, std::uint64_t y);

}  // namespace npg
