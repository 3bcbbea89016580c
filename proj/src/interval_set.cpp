#include "npg/interval_set.hpp"

#include "npg/errors.hpp"

#include <algorithm>

namespace npg {

namespace {

// hi_a < hi_b with nullopt as +infinity.
bool hi_less(const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    if (!a)
        return false;
    if (!b)
        return true;
    return *a < *b;
}

const std::optional<Rational>& hi_min(const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    return hi_less(a, b) ? a : b;
}

// x < hi, with hi possibly infinite.
bool below(const Rational& x, const std::optional<Rational>& hi)
{
    return !hi || x < *hi;
}

}  // namespace

IntervalSet IntervalSet::from(std::vector<Interval> pieces)
{
    for (const auto& p : pieces) {
        if (p.lo < 0)
            throw DomainError("IntervalSet: lower endpoint " + to_string(p.lo) + " is negative");
        if (p.hi && !(p.lo < *p.hi))
            throw DomainError("IntervalSet: empty or reversed interval [" + to_string(p.lo) + ", " +
                              to_string(*p.hi) + ")");
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet out;
    for (auto& p : pieces) {
        if (!out.pieces_.empty()) {
            auto& last = out.pieces_.back();
            if (!last.hi || p.lo <= *last.hi) {
                if (hi_less(last.hi, p.hi))
                    last.hi = p.hi;
                continue;
            }
        }
        out.pieces_.push_back(std::move(p));
    }
    return out;
}

IntervalSet IntervalSet::single(const Rational& lo, const std::optional<Rational>& hi)
{
    return from({{lo, hi}});
}

bool IntervalSet::contains(const Rational& x) const
{
    // last piece with lo <= x
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const Interval& p) { return v < p.lo; });
    if (it == pieces_.begin())
        return false;
    --it;
    return below(x, it->hi);
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const
{
    std::vector<Interval> all = pieces_;
    all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
    return from(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const
{
    IntervalSet out;
    std::size_t i = 0, j = 0;
    const auto& a = pieces_;
    const auto& b = other.pieces_;
    while (i < a.size() && j < b.size()) {
        const Rational& lo = std::max(a[i].lo, b[j].lo);
        const auto& hi = hi_min(a[i].hi, b[j].hi);
        if (below(lo, hi))
            out.pieces_.push_back({lo, hi});
        // advance whichever ends first
        if (hi_less(a[i].hi, b[j].hi))
            ++i;
        else
            ++j;
    }
    return out;  // disjoint, sorted, and gaps survive intersection
}

IntervalSet IntervalSet::translate(const Rational& shift) const
{
    IntervalSet out;
    out.pieces_.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        Interval q{p.lo + shift, p.hi ? std::optional<Rational>(*p.hi + shift) : std::nullopt};
        if (q.lo < 0)
            throw DomainError("IntervalSet::translate: result leaves [0, inf)");
        out.pieces_.push_back(std::move(q));
    }
    return out;
}

IntervalSet IntervalSet::complement_in(const Rational& lo, const std::optional<Rational>& hi) const
{
    if (lo < 0 || (hi && !(lo < *hi)))
        return {};
    IntervalSet out;
    Rational cursor = lo;
    for (const auto& p : pieces_) {
        if (hi && p.lo >= *hi)
            break;
        if (!below(cursor, p.hi))
            continue;
        if (cursor < p.lo)
            out.pieces_.push_back({cursor, p.lo});
        if (!p.hi)
            return out;
        cursor = std::max(cursor, *p.hi);
    }
    if (below(cursor, hi))
        out.pieces_.push_back({cursor, hi});
    return out;
}

bool IntervalSet::subset_of(const IntervalSet& other) const
{
    return intersect(other) == *this;
}

Rational IntervalSet::measure(const Rational& t) const
{
    if (t < 0)
        throw DomainError("IntervalSet::measure: T must be >= 0");
    Rational total = 0;
    for (const auto& p : pieces_) {
        if (p.lo >= t)
            break;
        const Rational end = p.hi && *p.hi < t ? *p.hi : t;
        total += end - p.lo;
    }
    return total;
}

std::optional<Rational> IntervalSet::infimum() const
{
    if (pieces_.empty())
        return std::nullopt;
    return pieces_.front().lo;
}

Rational clipped_length_sum(const std::vector<Interval>& pieces, const Rational& t)
{
    Rational total = 0;
    for (const auto& p : pieces) {
        Rational lo = std::min(p.lo, t);
        Rational hi = p.hi ? std::min(*p.hi, t) : t;
        if (lo < hi)
            total += hi - lo;
    }
    return total;
}

}  // namespace npg
