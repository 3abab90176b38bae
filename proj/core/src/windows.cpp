#include "dfcost/windows.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfcost {

Interval intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.begin, b.begin), std::min(a.end, b.end)};
  if (r.end < r.begin) r = Interval{0, 0};
  return r;
}

void IndexSet::add(Interval iv) {
  if (iv.empty()) return;
  std::vector<Interval> merged;
  merged.reserve(ivs_.size() + 1);
  bool placed = false;
  for (const auto& cur : ivs_) {
    if (cur.end < iv.begin) {
      merged.push_back(cur);
    } else if (iv.end < cur.begin) {
      if (!placed) {
        merged.push_back(iv);
        placed = true;
      }
      merged.push_back(cur);
    } else {
      iv.begin = std::min(iv.begin, cur.begin);
      iv.end = std::max(iv.end, cur.end);
    }
  }
  if (!placed) merged.push_back(iv);
  ivs_ = std::move(merged);
}

std::int64_t IndexSet::size() const {
  std::int64_t n = 0;
  for (const auto& iv : ivs_) n += iv.size();
  return n;
}

bool IndexSet::contains(std::int64_t idx) const {
  for (const auto& iv : ivs_) {
    if (idx >= iv.begin && idx < iv.end) return true;
  }
  return false;
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  IndexSet r = *this;
  for (const auto& iv : other.ivs_) r.add(iv);
  return r;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  IndexSet r;
  for (const auto& a : ivs_) {
    for (const auto& b : other.ivs_) {
      r.add(dfcost::intersect(a, b));
    }
  }
  return r;
}

IndexSet IndexSet::subtract(const IndexSet& other) const {
  std::vector<Interval> cur = ivs_;
  for (const auto& b : other.ivs_) {
    std::vector<Interval> next;
    for (const auto& a : cur) {
      if (b.end <= a.begin || b.begin >= a.end) {
        next.push_back(a);
        continue;
      }
      if (a.begin < b.begin) next.push_back({a.begin, b.begin});
      if (b.end < a.end) next.push_back({b.end, a.end});
    }
    cur = std::move(next);
  }
  IndexSet r;
  for (const auto& iv : cur) r.add(iv);
  return r;
}

WindowSeq::WindowSeq(std::int64_t dim_size, std::int64_t size,
                     std::int64_t offset)
    : dim_size_(dim_size), size_(size), offset_(offset) {
  if (dim_size < 1 || size < 1 || offset < 1) {
    throw std::invalid_argument("WindowSeq requires positive parameters");
  }
  // Positions advance while the previous window stops short of the end.
  if (size_ >= dim_size_) {
    num_positions_ = 1;
  } else {
    std::int64_t rem = dim_size_ - size_;
    num_positions_ = 1 + (rem + offset_ - 1) / offset_;
  }
}

Interval WindowSeq::window(std::int64_t t) const {
  if (t < 0 || t >= num_positions_) return {0, 0};
  std::int64_t begin = t * offset_;
  return {begin, std::min(begin + size_, dim_size_)};
}

bool WindowSeq::truncated_tail() const {
  if (size_ >= dim_size_) return false;
  return window(num_positions_ - 1).size() < size_;
}

IndexSet WindowSeq::covered() const {
  IndexSet s;
  if (offset_ >= size_) {
    // Windows are disjoint or abutting; at most num_positions intervals,
    // but contiguous runs collapse inside IndexSet.
    for (std::int64_t t = 0; t < num_positions_; ++t) s.add(window(t));
  } else {
    // Overlapping windows form one contiguous run.
    s.add({0, window(num_positions_ - 1).end});
  }
  return s;
}

bool WindowSeq::covers_all() const {
  // The last window always reaches the end of the dimension (positions
  // advance until it does), so holes can only open between windows.
  return num_positions_ == 1 || offset_ <= size_;
}

}  // namespace dfcost
