#include "npg/errors.hpp"
#include "npg/prime_engine.hpp"
#include "npg/sieve_functions.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace npg;

TEST(Sieve, SimpleSieveMatchesTrialDivision)
{
    EXPECT_EQ(simple_sieve(1000), oracle::primes_upto(1000));
    EXPECT_TRUE(simple_sieve(1).empty());
    EXPECT_EQ(simple_sieve(2), std::vector<std::uint64_t>{2});
}

TEST(Sieve, SegmentedAgreesAcrossSegmentSizesAndThreads)
{
    const auto reference = simple_sieve(200'000);
    for (std::uint64_t seg : {1024ull, 4099ull, 65536ull, 1ull << 20})
        for (unsigned threads : {1u, 3u})
            EXPECT_EQ(sieve_primes(200'000, {seg, threads}), reference) << seg << " " << threads;
}

TEST(Sieve, LimitOnSegmentBoundary)
{
    // 4096 is the segment size; the limit lands on the last element of a segment.
    EXPECT_EQ(sieve_primes(8191, {4096, 2}), simple_sieve(8191));
    EXPECT_EQ(sieve_primes(8192, {4096, 2}), simple_sieve(8192));
}

TEST(Sieve, PrimeCountingValues)
{
    EXPECT_EQ(sieve_primes(10'000'000, {1 << 18, 2}).size(), 664'579u);
}

TEST(Sieve, SegmentFlags)
{
    const auto base = simple_sieve(100);
    const auto seg = sieve_segment(0, 30, base);
    for (std::uint64_t n = 0; n < 30; ++n)
        EXPECT_EQ(!seg.is_composite(n), oracle::is_prime(n)) << n;
}

TEST(Gaps, FirstRecords)
{
    const auto gaps = gap_stream(30);
    ASSERT_EQ(gaps.size(), 9u);  // pairs among 2,3,5,...,29
    EXPECT_EQ(gaps[0].p, 2u);
    EXPECT_EQ(gaps[0].gap, 1u);
    EXPECT_DOUBLE_EQ(gaps[0].normalized, 1.0 / std::log(2.0));
    EXPECT_EQ(gaps[3].p, 7u);
    EXPECT_EQ(gaps[3].p_next, 11u);
    EXPECT_DOUBLE_EQ(gaps[3].normalized, 4.0 / std::log(7.0));
}

TEST(Gaps, PoissonReference)
{
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_DOUBLE_EQ(poisson_reference(0, inf), 1.0);
    EXPECT_NEAR(poisson_reference(0, 1), 1 - std::exp(-1.0), 1e-15);
    EXPECT_NEAR(poisson_reference(1, 2), std::exp(-1.0) - std::exp(-2.0), 1e-15);
    const double narrow = 3 + 1e-12;  // not 1e-12 wide after rounding
    const double d = narrow - 3;
    EXPECT_NEAR(poisson_reference(3, narrow), std::exp(-3.0) * d * (1 - d / 2), 1e-27);
    EXPECT_EQ(poisson_reference(2, 2), 0.0);
    EXPECT_THROW(poisson_reference(2, 1), DomainError);
    EXPECT_THROW(poisson_reference(-1, 1), DomainError);
}

TEST(Gaps, HistogramAccountsForEveryGap)
{
    const std::vector<double> edges{0.5, 1, 2, 3};
    const auto rep = normalized_histogram(1'000'000, edges, {1 << 16, 2});
    const auto& h = rep.histogram;
    std::uint64_t below = 0;
    for (const auto& g : gap_stream(1'000'000))
        below += g.normalized < 0.5;
    std::uint64_t sum = below + h.overflow;
    for (auto c : h.counts)
        sum += c;
    EXPECT_EQ(sum, h.total);
    EXPECT_EQ(h.total, 78'497u);  // pi(1e6) - 1
    ASSERT_EQ(rep.poisson.size(), 4u);
    EXPECT_NEAR(rep.poisson.back(), std::exp(-3.0), 1e-15);
}

TEST(Gaps, HistogramRejectsBadEdges)
{
    const std::vector<double> unsorted{0, 2, 1};
    const std::vector<double> negative{-1, 1};
    EXPECT_THROW(normalized_histogram(1000, unsorted), DomainError);
    EXPECT_THROW(normalized_histogram(1000, negative), DomainError);
    EXPECT_THROW(normalized_histogram(2, std::vector<double>{0, 1}), DomainError);
}

TEST(Gaps, CsvLayout)
{
    const std::vector<double> edges{0, 1, 2};
    std::ostringstream out;
    write_histogram_csv(out, normalized_histogram(100'000, edges));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "bin_lo,bin_hi,count,fraction,poisson_ref");
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    EXPECT_EQ(rows, 3);
    EXPECT_EQ(last.rfind("2,inf,", 0), 0u);
}

TEST(Gaps, FractionsNearExponentialAt1e7)
{
    const std::vector<double> edges{0, 1, 2};
    const auto rep = normalized_histogram(10'000'000, edges, {1 << 20, 2});
    EXPECT_NEAR(rep.histogram.fraction(0), 1 - std::exp(-1.0), 0.08);
    EXPECT_NEAR(rep.histogram.fraction(1), std::exp(-1.0) - std::exp(-2.0), 0.08);
}

// The ratio in question converges to prod_{p > P} (1 - 1/(p-1)^2), not to 1,
// for fixed W; it tends to 1 only as W grows.
TEST(Mertens, RatioTracksTailConstant)
{
    const double r210 = mertens_ratio(1e6, 210);
    EXPECT_NEAR(r210 / mertens_tail_constant(7), 1.0, 0.01);
    const double r2 = mertens_ratio(1e4, 2);
    EXPECT_NEAR(r2 / mertens_tail_constant(2), 1.0, 0.02);
    EXPECT_NEAR(mertens_tail_constant(2, 10'000'000), 0.6601618158, 1e-6);  // twin prime constant
}

TEST(Mertens, LargePrimorialRatioNearOne)
{
    std::uint64_t w = 1;
    for (auto p : simple_sieve(47))
        w *= p;
    EXPECT_NEAR(mertens_ratio(1e6, w), 1.0, 0.01);
}

TEST(Mertens, Errors)
{
    EXPECT_THROW(mertens_ratio(1e6, 10), DomainError);   // skips 3
    EXPECT_THROW(mertens_ratio(1e6, 12), DomainError);   // not squarefree
    EXPECT_THROW(mertens_ratio(5, 210), DomainError);    // Y below P
}
