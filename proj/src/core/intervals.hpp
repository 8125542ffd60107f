#pragma once

#include <cstddef>
#include <vector>

namespace qsl {

/// Open interval (lo, hi), lo < hi, both finite. Membership is strict.
struct OpenInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo < x && x < hi; }
  double width() const { return hi - lo; }
};

/// Validating constructor; throws invalid_argument unless lo < hi and finite.
OpenInterval make_interval(double lo, double hi);

/// Disjoint, ascending union of open intervals.
///
/// Canonical form merges intervals with overlapping interiors; intervals
/// that touch only at an endpoint stay separate, since the shared endpoint
/// belongs to neither open set.
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet from_intervals(std::vector<OpenInterval> items);

  void insert(const OpenInterval& interval);

  bool contains(double x) const;
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }
  const std::vector<OpenInterval>& intervals() const { return intervals_; }

  /// Infimum / supremum of the union; invalid on an empty set.
  double inf() const;
  double sup() const;

 private:
  std::vector<OpenInterval> intervals_;  // sorted by lo, pairwise disjoint
};

}  // namespace qsl
