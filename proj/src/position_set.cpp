#include "twosided/position_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>

#include "twosided/errors.hpp"

namespace twosided {

std::vector<Interval> PositionSet::normalize(std::vector<Interval> intervals) {
  std::erase_if(intervals, [](const Interval& iv) { return iv.lo > iv.hi; });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  out.reserve(intervals.size());
  for (const Interval& iv : intervals) {
    // Merge overlapping and adjacent intervals.
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

PositionSet PositionSet::range(Vertex lo, Vertex hi) {
  if (lo > hi) return {};
  return PositionSet(std::vector<Interval>{{lo, hi}});
}

PositionSet PositionSet::of(std::initializer_list<Vertex> members) {
  return from_members(std::vector<Vertex>(members));
}

PositionSet PositionSet::from_members(std::vector<Vertex> members) {
  std::vector<Interval> ivs;
  ivs.reserve(members.size());
  for (Vertex v : members) ivs.push_back({v, v});
  return PositionSet(normalize(std::move(ivs)));
}

PositionSet PositionSet::from_intervals(std::vector<Interval> intervals) {
  return PositionSet(normalize(std::move(intervals)));
}

PositionSet PositionSet::from_mask(std::uint64_t mask) {
  std::vector<Interval> ivs;
  Vertex bit = 0;
  while (mask != 0) {
    int skip = std::countr_zero(mask);
    mask >>= skip;
    bit += skip;
    int run = std::countr_one(mask);
    ivs.push_back({bit + 1, bit + run});
    mask = run == 64 ? 0 : mask >> run;
    bit += run;
  }
  return PositionSet(std::move(ivs));
}

namespace {

Vertex parse_number(std::string_view text, std::size_t& pos) {
  Vertex value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc()) {
    throw DomainError("malformed position set: '" + std::string(text) + "'");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

PositionSet PositionSet::parse(std::string_view text) {
  if (text.empty() || text == "{}") return {};
  std::vector<Interval> ivs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    Vertex lo = parse_number(text, pos);
    Vertex hi = lo;
    if (pos < text.size() && text[pos] == '-') {
      ++pos;
      hi = parse_number(text, pos);
    }
    if (hi < lo) throw DomainError("descending interval in position set: '" + std::string(text) + "'");
    ivs.push_back({lo, hi});
    if (pos < text.size()) {
      if (text[pos] != ',') throw DomainError("malformed position set: '" + std::string(text) + "'");
      ++pos;
      if (pos == text.size()) throw DomainError("trailing comma in position set");
    }
  }
  return from_intervals(std::move(ivs));
}

std::int64_t PositionSet::size() const {
  std::int64_t total = 0;
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

bool PositionSet::contains(Vertex v) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), v,
                             [](Vertex x, const Interval& iv) { return x < iv.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return v <= it->hi;
}

Vertex PositionSet::min() const {
  if (empty()) throw DomainError("min() of empty position set");
  return intervals_.front().lo;
}

Vertex PositionSet::max() const {
  if (empty()) throw DomainError("max() of empty position set");
  return intervals_.back().hi;
}

std::vector<Vertex> PositionSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (const Interval& iv : intervals_) {
    for (Vertex v = iv.lo; v <= iv.hi; ++v) out.push_back(v);
  }
  return out;
}

std::uint64_t PositionSet::to_mask() const {
  std::uint64_t mask = 0;
  for (const Interval& iv : intervals_) {
    if (iv.lo < 1 || iv.hi > 64) throw DomainError("position set does not fit a 64-bit mask");
    const int len = static_cast<int>(iv.length());
    const std::uint64_t run = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    mask |= run << (iv.lo - 1);
  }
  return mask;
}

PositionSet PositionSet::unite(const PositionSet& other) const {
  std::vector<Interval> all = intervals_;
  all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
  return PositionSet(normalize(std::move(all)));
}

PositionSet PositionSet::intersect(const PositionSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    const Vertex lo = std::max(a.lo, b.lo);
    const Vertex hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return PositionSet(std::move(out));
}

PositionSet PositionSet::subtract(const PositionSet& other) const {
  std::vector<Interval> out;
  std::size_t j = 0;
  for (Interval cur : intervals_) {
    while (j < other.intervals_.size() && other.intervals_[j].hi < cur.lo) ++j;
    std::size_t jj = j;
    while (jj < other.intervals_.size() && other.intervals_[jj].lo <= cur.hi) {
      const Interval& cut = other.intervals_[jj];
      if (cut.lo > cur.lo) out.push_back({cur.lo, cut.lo - 1});
      cur.lo = std::max(cur.lo, cut.hi + 1);
      if (cur.lo > cur.hi) break;
      ++jj;
    }
    if (cur.lo <= cur.hi) out.push_back(cur);
  }
  return PositionSet(std::move(out));
}

bool PositionSet::is_subset_of(const PositionSet& other) const { return subtract(other).empty(); }

PositionSet PositionSet::shifted(Vertex delta) const {
  std::vector<Interval> out = intervals_;
  for (Interval& iv : out) {
    iv.lo += delta;
    iv.hi += delta;
  }
  return PositionSet(std::move(out));
}

PositionSet PositionSet::clipped(Vertex lo, Vertex hi) const { return intersect(range(lo, hi)); }

PositionSet PositionSet::reflected(Vertex axis) const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (auto it = intervals_.rbegin(); it != intervals_.rend(); ++it) {
    out.push_back({axis - it->hi, axis - it->lo});
  }
  return PositionSet(std::move(out));
}

std::string PositionSet::to_string() const {
  if (empty()) return "{}";
  std::string out;
  for (const Interval& iv : intervals_) {
    if (!out.empty()) out += ',';
    out += std::to_string(iv.lo);
    if (iv.hi != iv.lo) {
      out += '-';
      out += std::to_string(iv.hi);
    }
  }
  return out;
}

std::size_t PositionSetHash::operator()(const PositionSet& set) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Interval& iv : set.intervals()) {
    h ^= std::hash<Vertex>{}(iv.lo) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Vertex>{}(iv.hi) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace twosided
