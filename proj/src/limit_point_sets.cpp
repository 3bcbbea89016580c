#include "npg/limit_point_sets.hpp"

#include "npg/errors.hpp"

#include <algorithm>

namespace npg {

std::vector<Rational> difference_set(const std::vector<Rational>& betas)
{
    if (betas.size() < 2)
        throw DomainError("difference_set: need at least two betas");
    if (!std::is_sorted(betas.begin(), betas.end()))
        throw DomainError("difference_set: betas must be sorted");
    std::vector<Rational> out;
    for (std::size_t j = 1; j < betas.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            out.push_back(betas[j] - betas[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool hits(const IntervalSet& set, const std::vector<Rational>& betas)
{
    if (!std::is_sorted(betas.begin(), betas.end()))
        throw DomainError("hits: betas must be sorted");
    for (std::size_t j = 1; j < betas.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (set.contains(betas[j] - betas[i]))
                return true;
    return false;
}

std::string_view to_string(Verdict v)
{
    return v == Verdict::Witness ? "WITNESS" : "CERTIFICATE";
}

unsigned GreedyTrace::lambda_cap() const
{
    return terminated_level ? *terminated_level : static_cast<unsigned>(r.size());
}

GreedyTrace greedy_witness(const IntervalSet& set, unsigned k, const Rational& epsilon, const Rational& window)
{
    if (k < 2)
        throw DomainError("greedy_witness: k must be >= 2");
    if (epsilon < 0)
        throw DomainError("greedy_witness: epsilon must be >= 0");
    if (window <= 0)
        throw DomainError("greedy_witness: window must be positive");

    GreedyTrace trace;
    trace.k = k;
    trace.epsilon = epsilon;
    trace.window = window;
    trace.r.push_back(0);
    IntervalSet covered = set;  // ∪_{i<j} (B + r_i)

    for (unsigned j = 1; j < k; ++j) {
        const Rational& prev = trace.r.back();
        const IntervalSet free = covered.complement_in(prev, std::nullopt);
        if (free.empty()) {
            trace.terminated_level = j;
            trace.verdict = Verdict::Certificate;
            return trace;
        }
        const Interval& first = free.intervals().front();
        const Rational s = first.lo;
        trace.s.push_back(s);
        if (s > window) {
            trace.verdict = Verdict::Certificate;  // window exhausted
            return trace;
        }
        // S_j excludes r_{j-1} itself, so an infimum at prev is not attained.
        const bool attained = s > prev;
        Rational r = s;
        if (!attained) {
            const std::optional<Rational> len =
                first.hi ? std::optional<Rational>(*first.hi - first.lo) : std::nullopt;
            Rational d = epsilon > 0 ? epsilon : (len ? *len : Rational(1));
            if (len && *len < d)
                d = *len;
            r = s + d / 2;
        }
        trace.infimum_attained.push_back(attained);
        trace.r.push_back(r);
        covered = covered.unite(set.translate(r));
    }
    trace.verdict = Verdict::Witness;
    return trace;
}

MeasureCheck measure_bound_verify(const IntervalSet& set, const GreedyTrace& trace, const Rational& t)
{
    const GreedyTrace again = greedy_witness(set, trace.k, trace.epsilon, trace.window);
    if (again.r != trace.r || again.s != trace.s || again.verdict != trace.verdict ||
        again.terminated_level != trace.terminated_level)
        throw DomainError("measure_bound_verify: trace was not produced from this set");
    if (trace.verdict != Verdict::Certificate)
        throw DomainError("measure_bound_verify: needs a CERTIFICATE trace");
    if (t <= 0 || t > trace.window)
        throw DomainError("measure_bound_verify: T must lie in (0, window]");
    for (std::size_t j = 1; j < trace.r.size(); ++j)
        if (trace.r[j] - trace.s[j - 1] > trace.epsilon && !trace.infimum_attained[j - 1])
            throw DomainError("measure_bound_verify: r_j exceeds s_j + epsilon");

    MeasureCheck out;
    out.coverings_ok = true;
    IntervalSet covered;
    for (std::size_t j = 0; j < trace.r.size(); ++j) {
        covered = covered.unite(set.translate(trace.r[j]));
        // s_{j+1}, or +infinity past the terminal level
        std::optional<Rational> upper;
        if (j < trace.s.size())
            upper = trace.s[j];
        if (upper && *upper <= trace.r[j])
            continue;
        if (!IntervalSet::single(trace.r[j], upper).subset_of(covered)) {
            out.coverings_ok = false;
            break;
        }
    }

    unsigned lambda = 0;
    while (lambda + 1 < trace.r.size() && trace.r[lambda + 1] < t)
        ++lambda;
    out.lambda = lambda;
    out.measure = set.measure(t);
    const Rational levels(lambda + 1);
    out.bound = t / levels - trace.epsilon;
    out.weak_bound = t / levels - levels * trace.epsilon;
    out.bound_ok = out.measure >= out.bound;
    return out;
}

Rational syndetic_gap(const IntervalSet& set, const Rational& window)
{
    if (window <= 0)
        throw DomainError("syndetic_gap: window must be positive");
    Rational best = 0;
    const IntervalSet gaps = set.complement_in(0, window);
    for (const auto& piece : gaps.intervals())
        best = std::max(best, Rational(*piece.hi - piece.lo));
    return best;
}

}  // namespace npg
