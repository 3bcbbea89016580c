#include "npg/chen_combinatorics.hpp"

#include "npg/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace npg {

FactorTable::FactorTable(std::uint64_t limit) : spf_(limit + 1, 0)
{
    if (limit > 0xFFFFFFFFull)
        throw ConfigError("FactorTable: limit too large");
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0)
            continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        if (i * i > limit)
            continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            if (spf_[j] == 0)
                spf_[j] = static_cast<std::uint32_t>(i);
    }
}

std::vector<std::pair<std::uint64_t, unsigned>> FactorTable::factor(std::uint64_t n) const
{
    if (n == 0 || n > limit())
        throw DomainError("FactorTable::factor: n = " + std::to_string(n) + " outside table");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    while (n > 1) {
        const std::uint64_t p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

void check_yz(std::uint64_t y, std::uint64_t z)
{
    if (y < 2 || y >= z)
        throw DomainError("chen: need 2 <= Y < Z (Y=" + std::to_string(y) + ", Z=" + std::to_string(z) + ")");
}

// Exponent of p in the factor list (0 if absent).
unsigned exponent_of(const std::vector<std::pair<std::uint64_t, unsigned>>& factors, std::uint64_t p)
{
    for (const auto& [q, e] : factors)
        if (q == p)
            return e;
    return 0;
}

ChenSides sides_from_factors(std::uint64_t n, const std::vector<std::pair<std::uint64_t, unsigned>>& factors,
                             std::uint64_t y, std::uint64_t z)
{
    const FactorProfile prof = factor_profile(factors, y, z);
    ChenSides out;
    const bool z_rough = factors.empty() || factors.front().first > z;
    out.lhs = z_rough ? 1 : 0;
    if (!prof.has_small_factor)
        out.rhs = Rational(1) - make_ratio(static_cast<long>(prof.k()), 2);

    // S3: n = p q r s with Y < p < q < r <= Z and s free of primes < q.
    const auto& mid = prof.mid_primes;
    const bool large_n = z < 65536 && n >= z * z * z * z;
    for (std::size_t i = 0; i < mid.size(); ++i)
        for (std::size_t j = i + 1; j < mid.size(); ++j)
            for (std::size_t l = j + 1; l < mid.size(); ++l) {
                const std::uint64_t p = mid[i], q = mid[j], r = mid[l];
                // s = n/(pqr) has no prime < q: p must divide n exactly once and
                // no other prime below q may divide n.
                if (exponent_of(factors, p) != 1)
                    continue;
                bool rough = true;
                std::uint64_t s = n / p / q / r;
                for (const auto& [f, e] : factors) {
                    if (f >= q)
                        break;
                    if (f != p) {
                        rough = false;
                        break;
                    }
                }
                if (!rough)
                    continue;
                ++out.s3_terms;
                if (s <= q) {
                    ++out.s_below_q;
                    if (large_n)
                        throw std::logic_error("chen_sides: s <= q although n >= Z^4 (n=" + std::to_string(n) + ")");
                }
            }
    out.rhs += make_ratio(out.s3_terms, 2);
    return out;
}

}  // namespace

FactorProfile factor_profile(const std::vector<std::pair<std::uint64_t, unsigned>>& factors,
                             std::uint64_t y, std::uint64_t z)
{
    FactorProfile prof;
    for (const auto& [p, e] : factors) {
        if (p <= y) {
            prof.has_small_factor = true;
        } else if (p <= z) {
            prof.mid_primes.push_back(p);
            if (e > 1)
                prof.mid_squarefree = false;
        } else {
            prof.has_large_part = true;
        }
    }
    return prof;
}

ChenSides chen_sides(std::uint64_t n, std::uint64_t y, std::uint64_t z)
{
    check_yz(y, z);
    if (n == 0)
        throw DomainError("chen_sides: n must be >= 1");
    return sides_from_factors(n, trial_factor(n), y, z);
}

ChenSides chen_sides(std::uint64_t n, std::uint64_t y, std::uint64_t z, const FactorTable& table)
{
    check_yz(y, z);
    if (n == 0)
        throw DomainError("chen_sides: n must be >= 1");
    return sides_from_factors(n, table.factor(n), y, z);
}

ChenSides chen_sides_abstract(bool has_small_factor, std::size_t k)
{
    // k >= 2: the S3 term has k-2 choices of r (p, q the two smallest).
    ChenSides out;
    if (has_small_factor)
        return out;
    if (k == 0) {
        out.lhs = 1;
        out.rhs = 1;
    } else if (k == 1) {
        out.rhs = Rational(1, 2);
    } else {
        out.s3_terms = static_cast<long>(k) - 2;
        out.rhs = Rational(1) - make_ratio(static_cast<long>(k), 2) + make_ratio(out.s3_terms, 2);
    }
    return out;
}

namespace {

ChenRangeResult run_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t y, std::uint64_t z,
                          const FactorTable& table, bool squarefree_only)
{
    ChenRangeResult res;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const auto factors = table.factor(n);
        if (squarefree_only && !factor_profile(factors, y, z).mid_squarefree)
            continue;
        const ChenSides s = sides_from_factors(n, factors, y, z);
        ++res.checked;
        res.s_below_q += static_cast<std::uint64_t>(s.s_below_q);
        if (!s.holds()) {
            ++res.failures;
            if (!res.counterexample)
                res.counterexample = n;
        }
    }
    res.holds = res.failures == 0;
    return res;
}

ChenRangeResult verify_range(std::uint64_t n_max, std::uint64_t y, std::uint64_t z, unsigned threads,
                             bool squarefree_only)
{
    check_yz(y, z);
    if (n_max < z)
        throw DomainError("verify_chen_range: need n_max >= Z");
    const FactorTable table(n_max);
    threads = std::max(1u, threads);
    const std::uint64_t chunk = (n_max + threads - 1) / threads;
    std::vector<ChenRangeResult> parts(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = 1 + t * chunk;
            const std::uint64_t hi = std::min(n_max, lo + chunk - 1);
            if (lo > hi)
                continue;
            auto job = [&, t, lo, hi] { parts[t] = run_range(lo, hi, y, z, table, squarefree_only); };
            if (threads == 1)
                job();
            else
                pool.emplace_back(job);
        }
    }
    ChenRangeResult total;
    for (const auto& p : parts) {  // chunks are ascending, so the first hit is the smallest
        total.checked += p.checked;
        total.failures += p.failures;
        total.s_below_q += p.s_below_q;
        if (!total.counterexample && p.counterexample)
            total.counterexample = p.counterexample;
    }
    total.holds = total.failures == 0;
    return total;
}

}  // namespace

ChenRangeResult verify_chen_range(std::uint64_t n_max, std::uint64_t y, std::uint64_t z, unsigned threads)
{
    return verify_range(n_max, y, z, threads, false);
}

ChenRangeResult verify_chen_range_squarefree(std::uint64_t n_max, std::uint64_t y, std::uint64_t z)
{
    return verify_range(n_max, y, z, 1, true);
}

bool verify_chen_abstract(std::size_t k_max)
{
    for (std::size_t k = 0; k <= k_max; ++k)
        for (bool small : {false, true})
            if (!chen_sides_abstract(small, k).holds())
                return false;
    return true;
}

Rational quant_term(std::uint64_t v, const Rational& mu)
{
    const Rational binom(static_cast<long>(v * (v - (v > 0 ? 1 : 0)) / 2));
    return Rational(static_cast<long>(v)) - mu * binom;
}

MuPrime mu_prime(const Rational& mu)
{
    if (mu <= 0)
        throw DomainError("mu_prime: mu must be positive (got " + to_string(mu) + ")");
    // v - mu v(v-1)/2 decreases once v > 1/mu + 1/2, so ceil(2/mu) + 2 is ample.
    const Integer bound = ceil(Rational(2) / mu) + 2;
    const std::uint64_t v_max = bound.get_ui();
    MuPrime best;
    best.value = quant_term(1, mu);
    best.argmax = {1};
    for (std::uint64_t v = 2; v <= v_max; ++v) {
        const Rational t = quant_term(v, mu);
        if (t > best.value) {
            best.value = t;
            best.argmax = {v};
        } else if (t == best.value) {
            best.argmax.push_back(v);
        }
    }
    return best;
}

QuantCheck quant_bound_check(unsigned m, unsigned a, const Rational& mu, unsigned c_max)
{
    if (a < 1 || a >= m || c_max < 1)
        throw DomainError("quant_bound_check: need 1 <= a < M and c_max >= 1");
    if (std::pow(static_cast<double>(c_max) + 1.0, m) > 5e7)
        throw ConfigError("quant_bound_check: (c_max+1)^M too large to enumerate");
    // Scale by the denominator of mu so the enumeration runs in integers.
    const Integer num = mu.get_num();
    const Integer den = mu.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p() || num > 1000000 || den > 1000000)
        throw ConfigError("quant_bound_check: mu has too large a numerator or denominator");
    const long n = num.get_si();
    const long d = den.get_si();
    const Rational scaled_limit = mu_prime(mu).value * d * a;  // an integer
    const long limit = scaled_limit.get_num().get_si();
    std::vector<long> term(c_max + 1);
    for (long c = 0; c <= static_cast<long>(c_max); ++c)
        term[static_cast<std::size_t>(c)] = d * c - n * (c * (c - 1) / 2);

    QuantCheck out;
    std::vector<unsigned> c(m, 0);
    while (true) {
        unsigned nonzero = 0;
        for (unsigned v : c)
            nonzero += v != 0;
        if (nonzero <= a) {
            long sum = 0;
            for (unsigned v : c)
                sum += term[v];
            ++out.vectors;
            if (sum > limit)
                out.holds = false;
            else if (sum == limit)
                out.tight = true;
        }
        unsigned i = 0;
        while (i < m && c[i] == c_max)
            c[i++] = 0;
        if (i == m)
            break;
        ++c[i];
    }
    return out;
}

std::uint64_t partition_count(std::uint64_t a)
{
    return ceil(make_ratio(399 * static_cast<long>(a), 100)).get_ui() + 1;
}

namespace {

void check_frak(std::uint64_t a, std::uint64_t m, std::uint64_t k, std::uint64_t l)
{
    if (a < 1)
        throw DomainError("frak_S: a must be >= 1");
    if (m != partition_count(a))
        throw DomainError("frak_S: M must equal ceil(3.99 a) + 1 = " + std::to_string(partition_count(a)));
    if (k == 0 || k % m != 0)
        throw DomainError("frak_S: K must be a positive multiple of M");
    if (l < 1)
        throw DomainError("frak_S: L must be >= 1");
}

}  // namespace

double frak_S(std::uint64_t a, std::uint64_t m, std::uint64_t k, double delta, double rho, std::uint64_t l)
{
    check_frak(a, m, k, l);
    if (!(rho > 0.0 && rho < 1.0))
        throw DomainError("frak_S: need 0 < rho < 1");
    if (!(delta > 0.0))
        throw DomainError("frak_S: need delta > 0");
    const double mu = 1.0 / static_cast<double>(l);
    const double mu_p = to_double(mu_prime(Rational(1, static_cast<long>(l))).value);
    const double main = rho * delta * std::log(static_cast<double>(k));
    const double per = static_cast<double>(k / m);
    const double binom = per * (per - 1.0) / 2.0;
    const double ratio = main / static_cast<double>(k);
    return main - mu_p * static_cast<double>(a) - 3.99 * mu * static_cast<double>(m) * binom * ratio * ratio;
}

Rational frak_S_exact(std::uint64_t a, std::uint64_t m, std::uint64_t k, const Rational& x, std::uint64_t l)
{
    check_frak(a, m, k, l);
    const Rational mu(1, static_cast<long>(l));
    const Rational main = x * static_cast<long>(m);
    const long per = static_cast<long>(k / m);
    const Rational binom = make_ratio(per * (per - 1), 2);
    const Rational ratio = main / static_cast<long>(k);
    return main - mu_prime(mu).value * static_cast<long>(a) -
           Rational(399, 100) * mu * static_cast<long>(m) * binom * ratio * ratio;
}

Rational frak_S_relaxed(std::uint64_t a, std::uint64_t m, const Rational& x, std::uint64_t l)
{
    if (a < 1 || m < 2 || l < 1)
        throw DomainError("frak_S_relaxed: need a >= 1, M >= 2, L >= 1");
    const auto A = static_cast<long>(a), M = static_cast<long>(m), L = static_cast<long>(l);
    return x * M - make_ratio((1 + L) * A, 2) - make_ratio(M - 1, A) * x * x * M / (2 * L);
}

double frak_S_relaxed(std::uint64_t a, std::uint64_t m, double x, std::uint64_t l)
{
    if (a < 1 || m < 2 || l < 1)
        throw DomainError("frak_S_relaxed: need a >= 1, M >= 2, L >= 1");
    // Completed square: the expanded form cancels ~1e4-sized terms down to ~0.1.
    // Peak at X* = L a/(M-1) with value a(L-M+1)/(2(M-1)), taken in integers.
    const auto A = static_cast<double>(a), M = static_cast<double>(m), L = static_cast<double>(l);
    const double c = (M - 1.0) * M / (2.0 * L * A);
    const double x_star = L * A / (M - 1.0);
    const double peak = A * static_cast<double>(static_cast<long>(l) - static_cast<long>(m) + 1) / (2.0 * (M - 1.0));
    return peak - c * (x - x_star) * (x - x_star);
}

Rational frak_S_closed_bound(std::uint64_t a, std::uint64_t m)
{
    if (a < 1 || m < 2)
        throw DomainError("frak_S_closed_bound: need a >= 1, M >= 2");
    return make_ratio(static_cast<long>(a), 2 * (static_cast<long>(m) - 1));
}

bool pigeonhole_check(unsigned a)
{
    if (a < 1)
        throw DomainError("pigeonhole_check: a must be >= 1");
    if (4 * a > 24)
        return a + 1 > a;  // one row holds at most a cells
    const std::uint32_t row_mask = (1u << a) - 1;
    const std::uint32_t total = 1u << (4 * a);
    for (std::uint32_t hits = 0; hits < total; ++hits) {
        if (static_cast<unsigned>(std::popcount(hits)) < a + 1)
            continue;
        int rows = 0;
        for (unsigned r = 0; r < 4; ++r)
            rows += (hits >> (r * a) & row_mask) != 0;
        if (rows < 2)
            return false;
    }
    return true;
}

}  // namespace npg
