#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace twosided {

using Vertex = std::int64_t;

// Closed interval [lo, hi] of vertex labels.
struct Interval {
  Vertex lo = 0;
  Vertex hi = -1;

  std::int64_t length() const { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite set of vertex labels stored as sorted, disjoint, non-adjacent
// closed intervals. Two sets with the same members always have the same
// representation, so equality is structural.
class PositionSet {
 public:
  PositionSet() = default;

  static PositionSet range(Vertex lo, Vertex hi);
  static PositionSet of(std::initializer_list<Vertex> members);
  static PositionSet from_members(std::vector<Vertex> members);
  static PositionSet from_intervals(std::vector<Interval> intervals);
  // Bit j-1 of `mask` stands for vertex j.
  static PositionSet from_mask(std::uint64_t mask);

  // Parses the text form "1-9,12,14-16"; "{}" is the empty set.
  static PositionSet parse(std::string_view text);

  bool empty() const { return intervals_.empty(); }
  std::int64_t size() const;
  bool contains(Vertex v) const;
  Vertex min() const;
  Vertex max() const;

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::vector<Vertex> members() const;
  // Requires every member to lie in 1..64.
  std::uint64_t to_mask() const;

  PositionSet unite(const PositionSet& other) const;
  PositionSet intersect(const PositionSet& other) const;
  PositionSet subtract(const PositionSet& other) const;
  bool is_subset_of(const PositionSet& other) const;

  PositionSet shifted(Vertex delta) const;
  PositionSet clipped(Vertex lo, Vertex hi) const;
  // Image under v -> axis - v (reflection of a path 1..N uses axis N+1).
  PositionSet reflected(Vertex axis) const;

  std::string to_string() const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;
  friend PositionSet operator|(const PositionSet& a, const PositionSet& b) { return a.unite(b); }
  friend PositionSet operator&(const PositionSet& a, const PositionSet& b) { return a.intersect(b); }
  friend PositionSet operator-(const PositionSet& a, const PositionSet& b) { return a.subtract(b); }

 private:
  explicit PositionSet(std::vector<Interval> normalized) : intervals_(std::move(normalized)) {}
  static std::vector<Interval> normalize(std::vector<Interval> intervals);

  std::vector<Interval> intervals_;
};

// Hash over the canonical interval list, for use as an unordered_map key.
struct PositionSetHash {
  std::size_t operator()(const PositionSet& set) const;
};

}  // namespace twosided
