#pragma once

// Deliberately naive reference implementations. Nothing here shares code with
// the library beyond the Rational type.

#include "npg/interval_set.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

/// Admissible with respect to every prime <= bound.
inline bool admissible_upto(const std::vector<std::uint64_t>& shifts, std::uint64_t bound)
{
    for (std::uint64_t p : primes_upto(bound)) {
        std::vector<bool> hit(p, false);
        for (auto h : shifts)
            hit[h % p] = true;
        bool all = true;
        for (bool b : hit)
            all = all && b;
        if (all)
            return false;
    }
    return true;
}

/// Smallest b in [0, W) with b ≡ -a_p (mod p) for every p, by scanning.
inline std::uint64_t crt_scan(const std::map<std::uint64_t, std::uint64_t>& rs)
{
    std::uint64_t w = 1;
    for (const auto& [p, a] : rs)
        w *= p;
    for (std::uint64_t b = 0; b < w; ++b) {
        bool ok = true;
        for (const auto& [p, a] : rs)
            ok = ok && (b + a) % p == 0;
        if (ok)
            return b;
    }
    return w;  // unreachable for prime moduli
}

/// Measure of the union of raw pieces within [0, t): sweep over all endpoints.
inline npg::Rational union_measure(const std::vector<npg::Interval>& pieces, const npg::Rational& t)
{
    std::vector<npg::Rational> pts{0, t};
    for (const auto& p : pieces) {
        if (p.lo < t)
            pts.push_back(p.lo);
        if (p.hi && *p.hi < t)
            pts.push_back(*p.hi);
    }
    std::sort(pts.begin(), pts.end());
    npg::Rational total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i] == pts[i + 1])
            continue;
        const npg::Rational mid = (pts[i] + pts[i + 1]) / 2;
        for (const auto& p : pieces)
            if (p.lo <= mid && (!p.hi || mid < *p.hi)) {
                total += pts[i + 1] - pts[i];
                break;
            }
    }
    return total;
}

/// Longest uncovered stretch of [0, window], checking midpoints between breakpoints.
inline npg::Rational gap_scan(const std::vector<npg::Interval>& pieces, const npg::Rational& window)
{
    std::vector<npg::Rational> pts{0, window};
    for (const auto& p : pieces) {
        if (p.lo < window)
            pts.push_back(p.lo);
        if (p.hi && *p.hi < window)
            pts.push_back(*p.hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    npg::Rational best = 0, run = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const npg::Rational mid = (pts[i] + pts[i + 1]) / 2;
        bool covered = false;
        for (const auto& p : pieces)
            covered = covered || (p.lo <= mid && (!p.hi || mid < *p.hi));
        run = covered ? npg::Rational(0) : npg::Rational(run + pts[i + 1] - pts[i]);
        if (run > best)
            best = run;
    }
    return best;
}

/// Pointwise Chen inequality sides by brute force over all (p, q, r, s).
struct Sides {
    int lhs;
    npg::Rational rhs;
};

inline Sides chen_brute(std::uint64_t n, std::uint64_t y, std::uint64_t z)
{
    auto smallest_factor = [](std::uint64_t m) -> std::uint64_t {
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0)
                return d;
        return m;  // m prime, or 1
    };
    const std::uint64_t spf = n == 1 ? UINT64_MAX : smallest_factor(n);
    Sides s{spf > z ? 1 : 0, 0};
    if (spf > y) {
        long k = 0;
        for (std::uint64_t p = y + 1; p <= z; ++p)
            if (is_prime(p) && n % p == 0)
                ++k;
        s.rhs = npg::Rational(1) - npg::make_ratio(k, 2);
    }
    long count = 0;
    for (std::uint64_t p = y + 1; p <= z; ++p) {
        if (!is_prime(p) || n % p)
            continue;
        for (std::uint64_t q = p + 1; q <= z; ++q) {
            if (!is_prime(q) || (n / p) % q)
                continue;
            for (std::uint64_t r = q + 1; r <= z; ++r) {
                if (!is_prime(r) || (n / p / q) % r)
                    continue;
                const std::uint64_t rest = n / p / q / r;
                if (rest == 1 || smallest_factor(rest) >= q)
                    ++count;
            }
        }
    }
    s.rhs += npg::make_ratio(count, 2);
    return s;
}

}  // namespace oracle
