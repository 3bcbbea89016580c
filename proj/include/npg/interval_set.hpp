#pragma once

// Finite unions of half-open intervals [lo, hi) in [0, inf) with exact rational
// endpoints. hi may be +infinity (std::nullopt).

#include "npg/rational.hpp"

#include <optional>
#include <vector>

namespace npg {

struct Interval {
    Rational lo;
    std::optional<Rational> hi;  ///< nullopt = +infinity

    bool unbounded() const { return !hi.has_value(); }
    bool operator==(const Interval&) const = default;
};

class IntervalSet {
  public:
    IntervalSet() = default;

    /// Sorts and merges (overlapping or touching pieces join). Throws DomainError
    /// for lo < 0 or lo >= hi.
    static IntervalSet from(std::vector<Interval> pieces);
    static IntervalSet single(const Rational& lo, const std::optional<Rational>& hi);

    const std::vector<Interval>& intervals() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    bool bounded() const { return pieces_.empty() || pieces_.back().hi.has_value(); }

    bool contains(const Rational& x) const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    /// { x + shift : x in set }; the result must stay in [0, inf).
    IntervalSet translate(const Rational& shift) const;
    /// [lo, hi) minus the set; hi = nullopt for [lo, inf).
    IntervalSet complement_in(const Rational& lo, const std::optional<Rational>& hi) const;
    bool subset_of(const IntervalSet& other) const;

    /// Exact Lebesgue measure of set ∩ [0, t). Throws DomainError for t < 0.
    Rational measure(const Rational& t) const;

    /// inf of the set; nullopt when empty.
    std::optional<Rational> infimum() const;

    bool operator==(const IntervalSet&) const = default;

  private:
    std::vector<Interval> pieces_;
};

/// Naive oracle: sum of clipped piece lengths with no merging (pieces may overlap
/// only if the caller passes raw data; then the result is an upper bound).
Rational clipped_length_sum(const std::vector<Interval>& pieces, const Rational& t);

}  // namespace npg
