#ifndef DFCOST_WINDOWS_HPP_
#define DFCOST_WINDOWS_HPP_

#include <cstdint>
#include <vector>

#include "dfcost/types.hpp"

namespace dfcost {

// Half-open index interval [begin, end).
struct Interval {
  std::int64_t begin = 0;
  std::int64_t end = 0;
  std::int64_t size() const { return end > begin ? end - begin : 0; }
  bool empty() const { return end <= begin; }
  bool operator==(const Interval&) const = default;
};

Interval intersect(const Interval& a, const Interval& b);

// Sorted set of disjoint half-open intervals. Small (a handful of
// intervals), used for exact per-dimension index arithmetic.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(Interval iv) { add(iv); }

  void add(Interval iv);
  std::int64_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(std::int64_t idx) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet subtract(const IndexSet& other) const;

  const std::vector<Interval>& intervals() const { return ivs_; }
  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<Interval> ivs_;
};

// The tile-position sequence of one map directive over a dimension of
// extent `dim_size`: windows [k*offset, k*offset + size) clipped to the
// extent. Positions advance while the previous window has not reached the
// end of the dimension.
class WindowSeq {
 public:
  WindowSeq(std::int64_t dim_size, std::int64_t size, std::int64_t offset);

  std::int64_t num_positions() const { return num_positions_; }
  // True when one window spans the whole dimension.
  bool single() const { return num_positions_ == 1; }
  // Window of position t (0-based), clipped; empty when t is out of range.
  Interval window(std::int64_t t) const;
  // True when the final window maps fewer than `size` indices.
  bool truncated_tail() const;
  // Union of all windows; coverage holds when this equals [0, dim_size).
  IndexSet covered() const;
  bool covers_all() const;

  std::int64_t dim_size() const { return dim_size_; }
  std::int64_t map_size() const { return size_; }
  std::int64_t offset() const { return offset_; }

 private:
  std::int64_t dim_size_;
  std::int64_t size_;
  std::int64_t offset_;
  std::int64_t num_positions_;
};

}  // namespace dfcost

#endif  // DFCOST_WINDOWS_HPP_
