#pragma once

// Exhaustive checks of the finite combinatorial steps: the pointwise Chen sieve
// inequality, the mu' maximum, the (quant) bound, the frak-S algebra and the
// pigeonhole step. All arithmetic is exact except the floating form of frak_S.

#include "npg/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace npg {

/// Factorization of n by smallest-prime-factor lookup, ascending (prime, exponent).
class FactorTable {
  public:
    explicit FactorTable(std::uint64_t limit);

    std::uint64_t limit() const { return spf_.size() - 1; }
    std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) const;

  private:
    std::vector<std::uint32_t> spf_;
};

/// What the pointwise inequality sees of n.
struct FactorProfile {
    bool has_small_factor = false;            ///< some prime p <= Y divides n
    std::vector<std::uint64_t> mid_primes;    ///< distinct primes in (Y, Z], ascending
    bool mid_squarefree = true;               ///< every mid prime divides n exactly once
    bool has_large_part = false;              ///< n has a prime factor > Z

    std::size_t k() const { return mid_primes.size(); }
};

FactorProfile factor_profile(const std::vector<std::pair<std::uint64_t, unsigned>>& factors,
                             std::uint64_t y, std::uint64_t z);

struct ChenSides {
    int lhs = 0;        ///< 1 iff n has no prime factor <= Z
    Rational rhs;       ///< denominator divides 2
    long s3_terms = 0;  ///< decompositions n = p q r s counted in the S3 term
    long s_below_q = 0; ///< among those, decompositions with s <= q

    bool holds() const { return Rational(lhs) <= rhs; }
};

/// Both sides of
///   1_{(n,P(Z))=1} <= 1_{(n,P(Y))=1} - 1/2 sum_{Y<p<=Z} 1_{p|n} 1_{(n,P(Y))=1}
///                     + 1/2 sum_{Y<p<q<r<=Z} sum_{(s,P(q))=1} 1_{n=pqrs}
/// by full factorization. "(n,P(Y))=1" means no prime factor <= Y (likewise Z);
/// "(s,P(q))=1" means no prime factor < q. Throws DomainError unless 2 <= Y < Z
/// and n >= 1. When n >= Z^4 every S3 decomposition must have s > q; a violation
/// throws std::logic_error.
ChenSides chen_sides(std::uint64_t n, std::uint64_t y, std::uint64_t z);
ChenSides chen_sides(std::uint64_t n, std::uint64_t y, std::uint64_t z, const FactorTable& table);

/// Right-hand side predicted from a profile alone, assuming a squarefree mid part:
/// small factor -> (0, 0); k = 0 -> (1, 1); k = 1 -> (0, 1/2); k >= 2 -> (0, 0).
ChenSides chen_sides_abstract(bool has_small_factor, std::size_t k);

struct ChenRangeResult {
    bool holds = true;
    std::optional<std::uint64_t> counterexample;  ///< smallest failing n
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::uint64_t s_below_q = 0;  ///< S3 decompositions with s <= q (beta >= 1/4 regime)
};

/// lhs <= rhs for every 1 <= n <= n_max. Chunks may run on `threads` workers;
/// the reported counterexample is always the smallest one.
ChenRangeResult verify_chen_range(std::uint64_t n_max, std::uint64_t y, std::uint64_t z,
                                  unsigned threads = 1);

/// Same, restricted to n whose (Y, Z]-part is squarefree.
ChenRangeResult verify_chen_range_squarefree(std::uint64_t n_max, std::uint64_t y, std::uint64_t z);

/// Abstract mode: every k in [0, k_max] with both small-factor flags.
bool verify_chen_abstract(std::size_t k_max);

/// v - mu * binom(v, 2) with binom(1, 2) = 0.
Rational quant_term(std::uint64_t v, const Rational& mu);

struct MuPrime {
    Rational value;
    std::vector<std::uint64_t> argmax;
};

/// max over v >= 1 of v - mu binom(v,2), searched over v <= ceil(2/mu) + 2.
/// Throws DomainError for mu <= 0.
MuPrime mu_prime(const Rational& mu);

/// Over all count vectors in [0, c_max]^M with at most `a` nonzero entries,
/// sum_j (c_j - mu binom(c_j, 2)) <= mu' a. `tight` reports whether some vector
/// reaches equality.
struct QuantCheck {
    bool holds = true;
    bool tight = false;
    std::uint64_t vectors = 0;
};
QuantCheck quant_bound_check(unsigned m, unsigned a, const Rational& mu, unsigned c_max);

/// ceil(3.99 a) + 1, computed exactly.
std::uint64_t partition_count(std::uint64_t a);

/// frak-S = rho delta log K - mu' a - 3.99 mu M binom(K/M, 2) (rho delta log K / K)^2
/// with mu = 1/L. Checks M = ceil(3.99a)+1, M | K, 0 < rho < 1.
double frak_S(std::uint64_t a, std::uint64_t m, std::uint64_t k, double delta, double rho, std::uint64_t l);

/// Exact form with X defined by X M = rho delta log K (so no logarithm enters).
Rational frak_S_exact(std::uint64_t a, std::uint64_t m, std::uint64_t k, const Rational& x, std::uint64_t l);

/// X M - (1+L) a / 2 - ((M-1)/a) X^2 M / (2L): the lower bound for frak-S after
/// 3.99 <= (M-1)/a and binom(K/M,2) <= K^2/(2M^2).
Rational frak_S_relaxed(std::uint64_t a, std::uint64_t m, const Rational& x, std::uint64_t l);
double frak_S_relaxed(std::uint64_t a, std::uint64_t m, double x, std::uint64_t l);

/// a / (2(M-1)), the value of the relaxed bound at X = aL/(M-1), L = M.
Rational frak_S_closed_bound(std::uint64_t a, std::uint64_t m);

/// Every hit-set of >= a+1 cells in a 4 x a grid meets at least two rows.
/// Exhaustive over all 2^(4a) subsets for 4a <= 24, counting argument beyond.
bool pigeonhole_check(unsigned a);

}  // namespace npg
