#include "core/intervals.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace qsl {

OpenInterval make_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    fail(ErrorCode::invalid_argument, "interval endpoints must be finite");
  }
  if (!(lo < hi)) {
    fail(ErrorCode::invalid_argument, "interval requires lo < hi");
  }
  return OpenInterval{lo, hi};
}

IntervalSet IntervalSet::from_intervals(std::vector<OpenInterval> items) {
  IntervalSet out;
  if (items.empty()) return out;
  for (const auto& iv : items) make_interval(iv.lo, iv.hi);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  OpenInterval cur = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) {
    const OpenInterval& next = items[i];
    if (next.lo < cur.hi) {
      // interiors overlap
      cur.hi = std::max(cur.hi, next.hi);
    } else {
      out.intervals_.push_back(cur);
      cur = next;
    }
  }
  out.intervals_.push_back(cur);
  return out;
}

void IntervalSet::insert(const OpenInterval& interval) {
  std::vector<OpenInterval> items = intervals_;
  items.push_back(interval);
  *this = from_intervals(std::move(items));
}

bool IntervalSet::contains(double x) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](double v, const OpenInterval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return it->contains(x);
}

double IntervalSet::inf() const {
  if (intervals_.empty()) {
    fail(ErrorCode::invalid_argument, "inf of empty interval set");
  }
  return intervals_.front().lo;
}

double IntervalSet::sup() const {
  if (intervals_.empty()) {
    fail(ErrorCode::invalid_argument, "sup of empty interval set");
  }
  return intervals_.back().hi;
}

}  // namespace qsl
