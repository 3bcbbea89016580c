#include "npg/prime_engine.hpp"

#include "npg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace npg {

namespace {

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::vector<std::uint64_t> primes_of(const SieveSegment& seg, std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    std::uint64_t hi = std::min(seg.base + seg.span(), limit + 1);
    for (std::uint64_t n = seg.base; n < hi; ++n)
        if (!seg.is_composite(n))
            out.push_back(n);
    return out;
}

}  // namespace

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += p)
            composite[m] = true;
    }
    return primes;
}

SieveSegment sieve_segment(std::uint64_t base, std::uint64_t span,
                           std::span<const std::uint64_t> base_primes)
{
    SieveSegment seg{base, std::vector<std::uint8_t>(span, 0)};
    const std::uint64_t hi = base + span;  // exclusive
    for (std::uint64_t n = base; n < std::min<std::uint64_t>(hi, 2); ++n)
        seg.composite_flags[n - base] = 1;
    for (std::uint64_t p : base_primes) {
        if (p * p >= hi)
            break;
        std::uint64_t start = std::max(p * p, (base + p - 1) / p * p);
        for (std::uint64_t m = start; m < hi; m += p)
            seg.composite_flags[m - base] = 1;
    }
    return seg;
}

void for_each_prime_segment(std::uint64_t limit, const SieveOptions& options,
                            const std::function<void(std::span<const std::uint64_t>)>& visit)
{
    if (limit < 2)
        return;
    if (options.segment_size == 0)
        throw ConfigError("segment size must be positive");
    const std::uint64_t seg = options.segment_size;
    const unsigned threads = std::max(1u, options.threads);
    const auto base_primes = simple_sieve(isqrt(limit));
    const std::uint64_t n_segments = limit / seg + 1;

    std::vector<std::vector<std::uint64_t>> batch(threads);
    for (std::uint64_t first = 0; first < n_segments; first += threads) {
        const std::uint64_t count = std::min<std::uint64_t>(threads, n_segments - first);
        auto work = [&](std::uint64_t k) {
            std::uint64_t base = (first + k) * seg;
            std::uint64_t span = std::min(seg, limit + 1 - base);
            batch[k] = primes_of(sieve_segment(base, span, base_primes), limit);
        };
        if (count == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::uint64_t k = 0; k < count; ++k)
                pool.emplace_back(work, k);
        }
        for (std::uint64_t k = 0; k < count; ++k)
            visit(batch[k]);
    }
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, const SieveOptions& options)
{
    std::vector<std::uint64_t> primes;
    for_each_prime_segment(limit, options, [&](std::span<const std::uint64_t> seg) {
        primes.insert(primes.end(), seg.begin(), seg.end());
    });
    return primes;
}

void for_each_gap(std::uint64_t limit, const SieveOptions& options,
                  const std::function<void(const GapRecord&)>& visit)
{
    std::uint64_t previous = 0;
    for_each_prime_segment(limit, options, [&](std::span<const std::uint64_t> seg) {
        for (std::uint64_t p : seg) {
            if (previous != 0) {
                std::uint64_t gap = p - previous;
                visit(GapRecord{previous, p, gap,
                                static_cast<double>(gap) / std::log(static_cast<double>(previous))});
            }
            previous = p;
        }
    });
}

std::vector<GapRecord> gap_stream(std::uint64_t limit, const SieveOptions& options)
{
    std::vector<GapRecord> records;
    for_each_gap(limit, options, [&](const GapRecord& r) { records.push_back(r); });
    return records;
}

double poisson_reference(double a, double b)
{
    if (std::isnan(a) || std::isnan(b) || a < 0.0)
        throw DomainError("poisson_reference: need 0 <= a");
    if (a > b)
        throw DomainError("poisson_reference: need a <= b");
    if (a == b)
        return 0.0;
    // -expm1 keeps short bins accurate: e^{-a}(1 - e^{-(b-a)}).
    if (std::isinf(b))
        return std::exp(-a);
    return -std::exp(-a) * std::expm1(-(b - a));
}

double GapHistogram::fraction(std::size_t bin) const
{
    return total == 0 ? 0.0 : static_cast<double>(counts.at(bin)) / static_cast<double>(total);
}

double GapHistogram::overflow_fraction() const
{
    return total == 0 ? 0.0 : static_cast<double>(overflow) / static_cast<double>(total);
}

HistogramReport normalized_histogram(std::uint64_t limit, std::span<const double> edges,
                                     const SieveOptions& options)
{
    if (edges.empty())
        throw DomainError("normalized_histogram: need at least one edge");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (std::isnan(edges[i]) || edges[i] < 0.0)
            throw DomainError("normalized_histogram: edges must be nonnegative");
        if (i > 0 && !(edges[i] > edges[i - 1]))
            throw DomainError("normalized_histogram: edges must be strictly increasing");
    }
    if (limit < 3)
        throw DomainError("normalized_histogram: fewer than 2 primes below limit");

    HistogramReport report;
    auto& h = report.histogram;
    h.bin_edges.assign(edges.begin(), edges.end());
    h.counts.assign(edges.size() - 1, 0);

    for_each_gap(limit, options, [&](const GapRecord& r) {
        ++h.total;
        const double x = r.normalized;
        if (x < edges.front())
            return;
        auto it = std::upper_bound(edges.begin(), edges.end(), x);
        if (it == edges.end()) {
            ++h.overflow;
            return;
        }
        ++h.counts[static_cast<std::size_t>(it - edges.begin()) - 1];
    });

    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        report.poisson.push_back(poisson_reference(edges[i], edges[i + 1]));
    report.poisson.push_back(poisson_reference(edges.back(), std::numeric_limits<double>::infinity()));
    return report;
}

void write_histogram_csv(std::ostream& out, const HistogramReport& report)
{
    const auto& h = report.histogram;
    char line[256];
    auto row = [&](double lo, double hi, std::uint64_t count, double fraction, double ref) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%llu,%.17g,%.17g\n", lo, hi,
                      static_cast<unsigned long long>(count), fraction, ref);
        out << line;
    };
    out << "bin_lo,bin_hi,count,fraction,poisson_ref\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i)
        row(h.bin_edges[i], h.bin_edges[i + 1], h.counts[i], h.fraction(i), report.poisson[i]);
    row(h.bin_edges.back(), std::numeric_limits<double>::infinity(), h.overflow,
        h.overflow_fraction(), report.poisson.back());
}

namespace {

// Largest prime of a primorial W = 2*3*...*P; throws if W is not of that form.
std::uint64_t primorial_top(std::uint64_t w)
{
    if (w < 2)
        throw DomainError("mertens_ratio: W must be a primorial >= 2");
    std::uint64_t rest = w;
    std::uint64_t top = 0;
    for (std::uint64_t p : simple_sieve(64)) {
        if (rest == 1)
            break;
        if (rest % p != 0)
            throw DomainError("mertens_ratio: W must be a product of consecutive primes from 2");
        rest /= p;
        top = p;
        if (rest % p == 0)
            throw DomainError("mertens_ratio: W must be squarefree");
    }
    if (rest != 1)
        throw DomainError("mertens_ratio: W must be a product of consecutive primes from 2");
    return top;
}

double euler_phi_over(std::uint64_t top)
{
    double ratio = 1.0;
    for (std::uint64_t p : simple_sieve(top))
        ratio *= 1.0 - 1.0 / static_cast<double>(p);
    return ratio;
}

}  // namespace

double mertens_ratio(double y, std::uint64_t w)
{
    const std::uint64_t top = primorial_top(w);
    if (!(y > static_cast<double>(top)))
        throw DomainError("mertens_ratio: Y must exceed the largest prime factor of W");
    if (!std::isfinite(y))
        throw DomainError("mertens_ratio: Y must be finite");

    const auto bound = static_cast<std::uint64_t>(std::floor(y));
    long double product = 1.0L;
    for_each_prime_segment(bound, {}, [&](std::span<const std::uint64_t> seg) {
        for (std::uint64_t p : seg)
            if (p > top && static_cast<double>(p) < y)
                product *= 1.0L - 1.0L / static_cast<long double>(p - 1);
    });
    return static_cast<double>(product) * euler_phi_over(top) *
           std::exp(std::numbers::egamma) * std::log(y);
}

double mertens_tail_constant(std::uint64_t largest_prime_of_w, std::uint64_t prime_bound)
{
    long double product = 1.0L;
    for_each_prime_segment(prime_bound, {}, [&](std::span<const std::uint64_t> seg) {
        for (std::uint64_t p : seg)
            if (p > largest_prime_of_w) {
                long double d = static_cast<long double>(p - 1);
                product *= 1.0L - 1.0L / (d * d);
            }
    });
    return static_cast<double>(product);
}

}  // namespace npg
