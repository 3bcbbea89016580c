#include "npg/tuples.hpp"

#include "npg/errors.hpp"
#include "npg/prime_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace npg {

KTuple KTuple::from(std::vector<std::uint64_t> shifts)
{
    if (shifts.empty())
        throw DomainError("KTuple: need at least one shift");
    std::sort(shifts.begin(), shifts.end());
    if (std::adjacent_find(shifts.begin(), shifts.end()) != shifts.end())
        throw DomainError("KTuple: shifts must be distinct");
    return {std::move(shifts)};
}

Admissibility is_admissible(const KTuple& h)
{
    Admissibility out;
    for (std::uint64_t p : simple_sieve(h.size())) {
        std::vector<bool> seen(p, false);
        std::uint64_t distinct = 0;
        for (std::uint64_t x : h.shifts)
            if (!seen[x % p]) {
                seen[x % p] = true;
                ++distinct;
            }
        if (distinct == p) {
            out.admissible = false;
            out.failing_prime = p;
            return out;
        }
    }
    return out;
}

std::uint64_t largest_prime_factor(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("largest_prime_factor: n must be >= 1");
    std::uint64_t best = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            best = p;
            n /= p;
        }
    return n > 1 ? std::max(best, n) : best;
}

std::uint64_t diff_smoothness(const KTuple& h)
{
    if (h.size() < 2)
        throw DomainError("diff_smoothness: need K >= 2");
    std::uint64_t best = 1;
    for (std::size_t j = 1; j < h.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            best = std::max(best, largest_prime_factor(h.shifts[j] - h.shifts[i]));
    return best;
}

WContext build_w_context(const Integer& n, const Rational& eps, std::optional<std::uint64_t> excluded)
{
    if (n < 2 || eps <= 0)
        throw DomainError("build_w_context: need N >= 2 and eps > 0");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    const double ln_n = std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
    const double bound = to_double(eps) * ln_n;
    if (bound < 2.0)
        throw DomainError("build_w_context: eps ln N = " + std::to_string(bound) + " < 2");

    WContext ctx;
    ctx.n = n;
    ctx.eps = eps;
    ctx.excluded_prime = excluded;
    ctx.w = 1;
    ctx.phi_w = 1;
    for (std::uint64_t p : simple_sieve(static_cast<std::uint64_t>(std::floor(bound)))) {
        if (excluded && p == *excluded)
            continue;
        ctx.primes.push_back(p);
        ctx.w *= static_cast<unsigned long>(p);
        ctx.phi_w *= static_cast<unsigned long>(p - 1);
    }
    if (ctx.primes.empty())
        throw DomainError("build_w_context: no primes left in W");
    ctx.b = to_double(make_ratio(ctx.phi_w, ctx.w)) * ln_n;
    return ctx;
}

CrtResult crt_b(const ResidueSystem& rs, const std::optional<KTuple>& tuple)
{
    if (rs.empty())
        throw DomainError("crt_b: empty residue system");
    CrtResult out;
    out.b = 0;
    out.modulus = 1;
    for (const auto& [p, a] : rs) {
        const Integer pz(static_cast<unsigned long>(p));
        if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
            throw DomainError("crt_b: modulus " + std::to_string(p) + " is not prime");
        if (a >= p)
            throw DomainError("crt_b: residue a_" + std::to_string(p) + " = " + std::to_string(a) +
                              " outside [0, p)");
        // target: b ≡ -a (mod p). Lift b = b + M t, t = (target - b) M^{-1} mod p.
        const Integer target = (pz - static_cast<unsigned long>(a)) % pz;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), Integer(out.modulus % pz).get_mpz_t(), pz.get_mpz_t());
        Integer t = ((target - out.b % pz) * inv) % pz;
        if (t < 0)
            t += pz;
        out.b += out.modulus * t;
        out.modulus *= pz;
    }
    if (tuple) {
        bool coprime = true;
        for (std::uint64_t h : tuple->shifts) {
            Integer g;
            const Integer v = out.b + static_cast<unsigned long>(h);
            mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), out.modulus.get_mpz_t());
            coprime = coprime && g == 1;
        }
        out.tuple_coprime = coprime;
    }
    return out;
}

std::string_view to_string(ConstructionStatus s)
{
    switch (s) {
    case ConstructionStatus::Success:
        return "success";
    case ConstructionStatus::Infeasible:
        return "infeasible";
    case ConstructionStatus::NotAdmissible:
        return "not_admissible";
    case ConstructionStatus::NotSmooth:
        return "not_smooth";
    }
    return "unknown";
}

std::uint64_t target_position(const Rational& beta, const Rational& x, std::uint64_t y)
{
    const Rational v = beta * x * static_cast<unsigned long>(y) + static_cast<unsigned long>(y);
    return floor(v + Rational(1, 2)).get_ui();
}

ErdosRankinResult erdos_rankin_construct(const Rational& x, std::uint64_t y, std::uint64_t z,
                                         const std::vector<Rational>& betas, std::uint64_t k)
{
    if (y < 2 || k < 1 || x <= 0)
        throw DomainError("erdos_rankin_construct: need y >= 2, K >= 1, x > 0");
    Rational beta_max = 0;
    for (const auto& b : betas) {
        if (b < 0)
            throw DomainError("erdos_rankin_construct: betas must be >= 0");
        beta_max = std::max(beta_max, b);
    }
    const auto Y = static_cast<unsigned long>(y);
    if (Y * (1 + (1 + beta_max) * x) > static_cast<unsigned long>(z))
        throw DomainError("erdos_rankin_construct: need y(1 + (1 + beta_max) x) <= z");

    ErdosRankinResult out;
    for (const auto& b : betas)
        out.targets.push_back(target_position(b, x, y));
    std::sort(out.targets.begin(), out.targets.end());
    out.targets.erase(std::unique(out.targets.begin(), out.targets.end()), out.targets.end());

    std::vector<bool> alive(z + 1, true);  // index m in (0, z]
    alive[0] = false;
    std::vector<bool> is_target(z + 1, false);
    for (auto t : out.targets)
        is_target[t] = true;

    for (std::uint64_t p : simple_sieve(y)) {
        std::vector<bool> forbidden(p, false);
        for (auto t : out.targets)
            forbidden[t % p] = true;
        std::vector<std::uint64_t> gain(p, 0);
        for (std::uint64_t m = 1; m <= z; ++m)
            if (alive[m] && !is_target[m])
                ++gain[m % p];
        std::optional<std::uint64_t> pick;
        for (std::uint64_t a = 0; a < p; ++a)
            if (!forbidden[a] && (!pick || gain[a] > gain[*pick]))
                pick = a;
        if (!pick) {
            out.status = ConstructionStatus::Infeasible;
            out.blocking_prime = p;
            return out;
        }
        out.residues[p] = *pick;
        for (std::uint64_t m = *pick; m <= z; m += p)
            alive[m] = false;
    }

    std::vector<std::uint64_t> survivors;
    for (std::uint64_t m = 1; m <= z; ++m)
        if (alive[m])
            survivors.push_back(m);
    out.tuple.shifts = survivors;
    out.size_matches_k = survivors.size() == k;
    for (auto m : survivors) {
        std::uint64_t d = UINT64_MAX;
        for (auto t : out.targets)
            d = std::min(d, m > t ? m - t : t - m);
        if (!out.targets.empty())
            out.max_deviation = std::max(out.max_deviation, d);
    }
    if (survivors.empty())
        return out;  // nothing to check; vacuously admissible and smooth

    const Admissibility adm = is_admissible(out.tuple);
    out.admissible = adm.admissible;
    out.p_plus = survivors.size() >= 2 ? diff_smoothness(out.tuple) : 1;
    if (!adm.admissible) {
        out.status = ConstructionStatus::NotAdmissible;
        out.blocking_prime = adm.failing_prime;
    } else if (out.p_plus > y) {
        out.status = ConstructionStatus::NotSmooth;
    }
    return out;
}

std::vector<std::size_t> partition_by_targets(const KTuple& h, const std::vector<Rational>& betas,
                                              const Rational& x, std::uint64_t y)
{
    if (betas.empty())
        throw DomainError("partition_by_targets: need at least one beta");
    if (h.size() % betas.size() != 0)
        throw DomainError("partition_by_targets: |H| = " + std::to_string(h.size()) +
                          " not divisible by " + std::to_string(betas.size()) + " labels");
    std::vector<Rational> targets;
    for (const auto& b : betas)
        targets.push_back(b * x * static_cast<unsigned long>(y) + static_cast<unsigned long>(y));

    std::vector<std::size_t> labels;
    std::vector<std::size_t> counts(betas.size(), 0);
    for (std::uint64_t s : h.shifts) {
        const Rational v(static_cast<unsigned long>(s));
        std::size_t best = 0;
        for (std::size_t i = 1; i < targets.size(); ++i)
            if (abs(v - targets[i]) < abs(v - targets[best]))
                best = i;
        labels.push_back(best);
        ++counts[best];
    }
    const std::size_t want = h.size() / betas.size();
    for (std::size_t c : counts)
        if (c != want) {
            std::string msg = "partition_by_targets: unequal classes (";
            for (std::size_t i = 0; i < counts.size(); ++i)
                msg += (i ? "," : "") + std::to_string(counts[i]);
            throw DomainError(msg + ")");
        }
    return labels;
}

}  // namespace npg
