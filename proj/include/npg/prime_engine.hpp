#pragma once

// Segmented sieve of Eratosthenes and normalized prime-gap statistics.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace npg {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

struct SieveOptions {
    std::uint64_t segment_size = kDefaultSegmentSize;
    unsigned threads = 1;
};

/// Composite flags for the integers [base, base + span).
struct SieveSegment {
    std::uint64_t base = 0;
    std::vector<std::uint8_t> composite_flags;

    std::uint64_t span() const { return composite_flags.size(); }
    bool is_composite(std::uint64_t n) const { return composite_flags[n - base] != 0; }
};

/// Primes up to `limit` by a plain (non-segmented) sieve. Used for base primes.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit);

/// Sieves [base, base + span) with `base_primes`, which must contain every prime
/// up to sqrt(base + span). Flags 0 and 1 as composite.
SieveSegment sieve_segment(std::uint64_t base, std::uint64_t span,
                           std::span<const std::uint64_t> base_primes);

/// Calls `visit` once per segment, in ascending order, with the primes of that
/// segment. Segments may be sieved concurrently; delivery is always ordered.
void for_each_prime_segment(std::uint64_t limit, const SieveOptions& options,
                            const std::function<void(std::span<const std::uint64_t>)>& visit);

/// Exactly the primes <= limit, ascending. Empty for limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, const SieveOptions& options = {});

struct GapRecord {
    std::uint64_t p = 0;
    std::uint64_t p_next = 0;
    std::uint64_t gap = 0;
    double normalized = 0.0;  ///< gap / ln p, anchored on the left prime
};

/// One record per consecutive prime pair with p_next <= limit.
std::vector<GapRecord> gap_stream(std::uint64_t limit, const SieveOptions& options = {});

/// Streaming form of gap_stream.
void for_each_gap(std::uint64_t limit, const SieveOptions& options,
                  const std::function<void(const GapRecord&)>& visit);

/// Mass of the unit exponential law on [a, b]: e^{-a} - e^{-b}. `b` may be +infinity.
double poisson_reference(double a, double b);

/// Normalized gaps binned on half-open bins [edges[i], edges[i+1]). Values at or
/// above the last edge land in the overflow bin; values below the first edge are
/// counted only in `total`.
struct GapHistogram {
    std::vector<double> bin_edges;
    std::vector<std::uint64_t> counts;
    std::uint64_t overflow = 0;
    std::uint64_t total = 0;

    double fraction(std::size_t bin) const;
    double overflow_fraction() const;
};

struct HistogramReport {
    GapHistogram histogram;
    std::vector<double> poisson;  ///< per bin, then one trailing entry for overflow
};

HistogramReport normalized_histogram(std::uint64_t limit, std::span<const double> edges,
                                     const SieveOptions& options = {});

/// CSV with header `bin_lo,bin_hi,count,fraction,poisson_ref`, overflow row last.
void write_histogram_csv(std::ostream& out, const HistogramReport& report);

/// [prod_{P < p < Y} (1 - 1/(p-1))] * (phi(W)/W) * e^gamma * ln Y, where P is the
/// largest prime factor of W. W must be a primorial 2*3*5*...*P.
double mertens_ratio(double y, std::uint64_t w);

/// prod_{p > P} (1 - 1/(p-1)^2), truncated at `prime_bound` (tail error < 1/(bound ln bound)).
double mertens_tail_constant(std::uint64_t largest_prime_of_w, std::uint64_t prime_bound = 10'000'000);

}  // namespace npg
