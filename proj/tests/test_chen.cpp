#include "npg/chen_combinatorics.hpp"
#include "npg/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace npg;

TEST(ChenSides, ProofCases)
{
    auto s = chen_sides(31, 10, 30);  // prime > Z
    EXPECT_EQ(s.lhs, 1);
    EXPECT_EQ(s.rhs, 1);
    s = chen_sides(11 * 31, 10, 30);  // one prime in (Y, Z]
    EXPECT_EQ(s.lhs, 0);
    EXPECT_EQ(s.rhs, make_ratio(1, 2));
    s = chen_sides(11 * 13 * 17 * 19, 10, 30);  // k = 4: 1 - 4/2 + 2/2
    EXPECT_EQ(s.rhs, 0);
    EXPECT_EQ(s.s3_terms, 2);
    s = chen_sides(1, 10, 30);
    EXPECT_EQ(s.lhs, 1);
    EXPECT_EQ(s.rhs, 1);
    s = chen_sides(2 * 11 * 13 * 17, 10, 30);  // small factor kills the first two terms and S3
    EXPECT_EQ(s.rhs, 0);
}

TEST(ChenSides, SquaredMidPrimeBreaksTheInequality)
{
    // 11^2 * 13 * 17: k = 3, and no (p, q, r, s) with s free of primes < q exists.
    const auto s = chen_sides(26741, 10, 30);
    EXPECT_EQ(s.lhs, 0);
    EXPECT_EQ(s.rhs, make_ratio(-1, 2));
    EXPECT_FALSE(s.holds());
}

TEST(ChenSides, Errors)
{
    EXPECT_THROW(chen_sides(100, 30, 30), DomainError);
    EXPECT_THROW(chen_sides(100, 1, 30), DomainError);
    EXPECT_THROW(chen_sides(0, 10, 30), DomainError);
}

TEST(ChenSides, AgreesWithBruteForce)
{
    const FactorTable table(20'000);
    for (auto [y, z] : {std::pair<std::uint64_t, std::uint64_t>{10, 30}, {5, 20}, {3, 40}})
        for (std::uint64_t n = 1; n <= 20'000; n += (n < 3000 ? 1 : 7)) {
            const auto mine = chen_sides(n, y, z, table);
            const auto ref = oracle::chen_brute(n, y, z);
            ASSERT_EQ(mine.lhs, ref.lhs) << n;
            ASSERT_EQ(mine.rhs, ref.rhs) << n << " Y=" << y << " Z=" << z;
            ASSERT_EQ(chen_sides(n, y, z).rhs, mine.rhs) << n;  // trial-division path
        }
}

TEST(ChenSides, ConcreteMatchesAbstractOnSquarefreeMidPart)
{
    const FactorTable table(10'000);
    std::size_t compared = 0;
    for (auto [y, z] : {std::pair<std::uint64_t, std::uint64_t>{3, 30}, {5, 50}, {2, 25}})
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            const auto factors = table.factor(n);
            const auto prof = factor_profile(factors, y, z);
            if (!prof.mid_squarefree)
                continue;
            const auto concrete = chen_sides(n, y, z, table);
            const auto abstract = chen_sides_abstract(prof.has_small_factor, prof.k());
            ASSERT_EQ(concrete.lhs, abstract.lhs) << n;
            ASSERT_EQ(concrete.rhs, abstract.rhs) << n;
            ++compared;
        }
    EXPECT_GT(compared, 20'000u);
}

TEST(ChenRange, ExhaustiveRuns)
{
    const auto a = verify_chen_range(100'000, 10, 30);
    EXPECT_FALSE(a.holds);
    ASSERT_TRUE(a.counterexample);
    EXPECT_EQ(*a.counterexample, 26741u);
    EXPECT_EQ(a.checked, 100'000u);

    const auto b = verify_chen_range(100'000, 20, 80);
    EXPECT_TRUE(b.holds);
    EXPECT_FALSE(b.counterexample);

    EXPECT_TRUE(verify_chen_range_squarefree(100'000, 10, 30).holds);
    EXPECT_TRUE(verify_chen_abstract(50));
}

TEST(ChenRange, ThreadsGiveSameAnswer)
{
    const auto one = verify_chen_range(60'000, 10, 30, 1);
    const auto four = verify_chen_range(60'000, 10, 30, 4);
    EXPECT_EQ(one.counterexample, four.counterexample);
    EXPECT_EQ(one.failures, four.failures);
    EXPECT_EQ(one.s_below_q, four.s_below_q);
    EXPECT_THROW(verify_chen_range(20, 10, 30), DomainError);
}

TEST(MuPrime, IntegerReciprocals)
{
    for (long l = 1; l <= 100; ++l) {
        const auto m = mu_prime(make_ratio(1, l));
        EXPECT_EQ(m.value, make_ratio(1 + l, 2));
        EXPECT_EQ(m.argmax, (std::vector<std::uint64_t>{std::uint64_t(l), std::uint64_t(l + 1)}));
    }
}

TEST(MuPrime, BruteForceAndMonotone)
{
    const Rational mu = make_ratio(2, 5);
    Rational best = 0;
    for (std::uint64_t v = 1; v <= 7; ++v)
        best = std::max(best, Rational(Rational(long(v)) - mu * Rational(long(v * (v - 1) / 2))));
    EXPECT_EQ(mu_prime(mu).value, best);
    EXPECT_EQ(best, make_ratio(9, 5));
}

TEST(MuPrime, Properties)
{
    Rational previous = mu_prime(make_ratio(1, 1000)).value;
    for (long den = 999; den >= 1; den -= 37) {
        const Rational v = mu_prime(make_ratio(1, den)).value;
        EXPECT_LE(v, previous);
        EXPECT_GE(v, 1);
        previous = v;
    }
    EXPECT_EQ(mu_prime(Rational(5)).value, 1);
    EXPECT_THROW(mu_prime(Rational(0)), DomainError);
    EXPECT_THROW(mu_prime(Rational(-1)), DomainError);
}

TEST(Quant, ExhaustiveAndTight)
{
    const auto q = quant_bound_check(5, 2, make_ratio(1, 5), 8);
    EXPECT_TRUE(q.holds);
    EXPECT_TRUE(q.tight);
    for (const char* mu : {"1/2", "1/3", "1/5"})
        for (unsigned m = 2; m <= 6; ++m)
            for (unsigned a = 1; a < m; ++a) {
                const auto r = quant_bound_check(m, a, parse_rational(mu), 8);
                EXPECT_TRUE(r.holds && r.tight) << mu << " " << m << " " << a;
            }
    EXPECT_THROW(quant_bound_check(3, 3, make_ratio(1, 2), 8), DomainError);
    EXPECT_THROW(quant_bound_check(3, 1, make_ratio(1, 2), 0), DomainError);
}

TEST(Quant, SingleTermAtArgmaxIsEquality)
{
    const Rational mu = make_ratio(1, 4);
    const auto m = mu_prime(mu);
    for (auto v : m.argmax)
        EXPECT_EQ(quant_term(v, mu), m.value);
    EXPECT_EQ(quant_term(0, mu), 0);
    EXPECT_EQ(quant_term(1, mu), 1);
}

TEST(FrakS, PartitionCount)
{
    EXPECT_EQ(partition_count(100), 400u);
    EXPECT_EQ(partition_count(1), 5u);
    EXPECT_EQ(partition_count(10), 41u);
}

TEST(FrakS, ClosedBoundAtHundred)
{
    const std::uint64_t a = 100, m = 400;
    const Rational x = make_ratio(long(a * m), long(m - 1));  // X = aL/(M-1), L = M
    EXPECT_EQ(frak_S_closed_bound(a, m), make_ratio(100, 798));
    EXPECT_EQ(frak_S_relaxed(a, m, x, m), frak_S_closed_bound(a, m));
    EXPECT_NEAR(frak_S_relaxed(a, m, to_double(x), m), to_double(frak_S_closed_bound(a, m)), 1e-12);
    EXPECT_GT(frak_S_closed_bound(a, m), 0);
}

TEST(FrakS, RelaxedIsALowerBound)
{
    for (std::uint64_t a : {1u, 3u, 10u, 100u}) {
        const std::uint64_t m = partition_count(a);
        for (std::uint64_t per : {2u, 5u, 40u})
            for (long xn : {1L, 7L, 50L}) {
                const std::uint64_t k = m * per;
                const Rational x = make_ratio(xn * long(a), 3);
                EXPECT_GE(frak_S_exact(a, m, k, x, m), frak_S_relaxed(a, m, x, m)) << a << " " << per;
            }
    }
}

TEST(FrakS, FloatingMatchesExact)
{
    const std::uint64_t a = 2, m = partition_count(2), k = m * 50, l = 3;
    const double delta = 0.7, rho = 0.3;
    const double x = rho * delta * std::log(double(k)) / double(m);
    const double exact = to_double(frak_S_exact(a, m, k, from_double(x), l));
    EXPECT_NEAR(frak_S(a, m, k, delta, rho, l), exact, 1e-12);
}

TEST(FrakS, Errors)
{
    EXPECT_THROW(frak_S(100, 399, 399 * 4, 0.5, 0.5, 10), DomainError);  // wrong M
    EXPECT_THROW(frak_S(100, 400, 401, 0.5, 0.5, 10), DomainError);      // K not a multiple
    EXPECT_THROW(frak_S(100, 400, 800, 0.5, 1.0, 10), DomainError);      // rho
    EXPECT_THROW(frak_S(100, 400, 800, 0.5, 0.5, 0), DomainError);       // L
}

TEST(Pigeonhole, SmallGrids)
{
    for (unsigned a = 1; a <= 5; ++a)
        EXPECT_TRUE(pigeonhole_check(a)) << a;
    EXPECT_TRUE(pigeonhole_check(100));
    EXPECT_THROW(pigeonhole_check(0), DomainError);
}
