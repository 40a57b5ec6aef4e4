#include "jlcomb/multiseg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace jlcomb {

std::vector<CuspidalPoint> Segment::points() const {
  std::vector<CuspidalPoint> pts;
  pts.reserve(len);
  for (int j = 0; j < len; ++j) pts.push_back({line, start + Exponent(j * step)});
  return pts;
}

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (auto c = a.line <=> b.line; c != 0) return c;
  if (auto c = a.step <=> b.step; c != 0) return c;
  if (auto c = compare(a.offset(), b.offset()); c != 0) return c;
  if (auto c = compare(a.start, b.start); c != 0) return c;
  return a.len <=> b.len;
}

std::strong_ordering EffectiveLine::operator<=>(const EffectiveLine& o) const {
  if (auto c = line <=> o.line; c != 0) return c;
  if (auto c = step <=> o.step; c != 0) return c;
  return compare(offset, o.offset);
}

EffectiveLine effective_line(const Segment& s) { return {s.line, s.step, s.offset()}; }

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  for (const auto& s : segs_) {
    if (s.len < 1) throw DomainError("segment length must be positive");
    if (s.step < 1) throw DomainError("segment step must be positive");
  }
  std::sort(segs_.begin(), segs_.end());
}

Multisegment Multisegment::operator+(const Multisegment& o) const {
  std::vector<Segment> all;
  all.reserve(segs_.size() + o.segs_.size());
  std::merge(segs_.begin(), segs_.end(), o.segs_.begin(), o.segs_.end(), std::back_inserter(all));
  Multisegment r;
  r.segs_ = std::move(all);
  return r;
}

Multisegment Multisegment::shifted(const Exponent& t) const {
  std::vector<Segment> out;
  out.reserve(segs_.size());
  for (const auto& s : segs_) out.push_back(s.shifted(t));
  return Multisegment(std::move(out));
}

std::vector<CuspidalPoint> Multisegment::support() const {
  std::vector<CuspidalPoint> pts;
  for (const auto& s : segs_) {
    auto p = s.points();
    pts.insert(pts.end(), p.begin(), p.end());
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::size_t Multisegment::support_size() const {
  std::size_t n = 0;
  for (const auto& s : segs_) n += static_cast<std::size_t>(s.len);
  return n;
}

bool Multisegment::contains(const Multisegment& sub) const {
  return std::includes(segs_.begin(), segs_.end(), sub.segs_.begin(), sub.segs_.end());
}

Multisegment Multisegment::minus(const Multisegment& sub) const {
  if (!contains(sub)) throw DomainError("multisegment difference of a non-submultiset");
  Multisegment r;
  std::set_difference(segs_.begin(), segs_.end(), sub.segs_.begin(), sub.segs_.end(),
                      std::back_inserter(r.segs_));
  return r;
}

std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
  return std::lexicographical_compare_three_way(a.segs_.begin(), a.segs_.end(), b.segs_.begin(),
                                                b.segs_.end());
}

std::size_t SegmentHash::operator()(const Segment& s) const noexcept {
  std::size_t h = std::hash<int>{}(s.line.value);
  hash_combine(h, ExponentHash{}(s.start));
  hash_combine(h, std::hash<int>{}(s.len));
  hash_combine(h, std::hash<int>{}(s.step));
  return h;
}

std::size_t MultisegmentHash::operator()(const Multisegment& m) const noexcept {
  std::size_t h = m.size();
  for (const auto& s : m) hash_combine(h, SegmentHash{}(s));
  return h;
}

namespace {

// Index range of b relative to a's start, when both live on one effective line.
std::optional<std::int64_t> relative_start(const Segment& a, const Segment& b) {
  if (a.line != b.line || a.step != b.step) return std::nullopt;
  Exponent delta = (b.start - a.start) / Exponent(a.step);
  if (!is_integer(delta)) return std::nullopt;
  return delta.numerator();
}

Segment from_indices(const Segment& base, std::int64_t lo, std::int64_t hi) {
  return Segment{base.line, base.start + Exponent(lo * base.step), static_cast<int>(hi - lo + 1),
                 base.step};
}

}  // namespace

SegmentRelation segment_relation(const Segment& s1, const Segment& s2) {
  if (s1 == s2) return SegmentRelation::equal;
  auto delta = relative_start(s1, s2);
  if (!delta) return SegmentRelation::unlinked;
  const std::int64_t b1 = 0, e1 = s1.len - 1;
  const std::int64_t b2 = *delta, e2 = *delta + s2.len - 1;
  const bool nested = (b1 <= b2 && e2 <= e1) || (b2 <= b1 && e1 <= e2);
  if (nested) return SegmentRelation::unlinked;
  if (std::max(b1, b2) > std::min(e1, e2) + 1) return SegmentRelation::unlinked;
  return std::max(b1, b2) > std::min(e1, e2) ? SegmentRelation::linked_adjacent
                                             : SegmentRelation::linked_overlapping;
}

std::vector<Multisegment> elementary_successors(const Multisegment& m) {
  const auto& segs = m.segments();
  std::set<Multisegment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      auto rel = segment_relation(segs[i], segs[j]);
      if (rel != SegmentRelation::linked_adjacent && rel != SegmentRelation::linked_overlapping)
        continue;
      const std::int64_t d = *relative_start(segs[i], segs[j]);
      const std::int64_t b1 = 0, e1 = segs[i].len - 1, b2 = d, e2 = d + segs[j].len - 1;
      std::vector<Segment> next;
      next.reserve(segs.size());
      for (std::size_t t = 0; t < segs.size(); ++t)
        if (t != i && t != j) next.push_back(segs[t]);
      next.push_back(from_indices(segs[i], std::min(b1, b2), std::max(e1, e2)));
      if (rel == SegmentRelation::linked_overlapping)
        next.push_back(from_indices(segs[i], std::max(b1, b2), std::min(e1, e2)));
      out.insert(Multisegment(std::move(next)));
    }
  }
  return {out.begin(), out.end()};
}

RigidPart to_intervals(const Multisegment& m) {
  if (m.empty()) throw DomainError("to_intervals: empty multisegment");
  RigidPart part{effective_line(m.segments().front()), {}};
  const Exponent step(part.line.step);
  for (const auto& s : m) {
    if (effective_line(s) != part.line) throw DomainError("multisegment is not rigid");
    Exponent b = (s.start - part.line.offset) / step;
    part.intervals.emplace_back(b.numerator(), b.numerator() + s.len - 1);
  }
  std::sort(part.intervals.begin(), part.intervals.end());
  return part;
}

Multisegment from_intervals(const EffectiveLine& line, const IntervalMultiset& iv) {
  std::vector<Segment> segs;
  segs.reserve(iv.size());
  for (auto [b, e] : iv)
    segs.push_back(Segment{line.line, line.offset + Exponent(b * line.step),
                           static_cast<int>(e - b + 1), line.step});
  return Multisegment(std::move(segs));
}

namespace {

struct IntervalHash {
  std::size_t operator()(const IntervalMultiset& v) const noexcept {
    std::size_t h = v.size();
    for (auto [b, e] : v) {
      hash_combine(h, std::hash<std::int64_t>{}(b));
      hash_combine(h, std::hash<std::int64_t>{}(e));
    }
    return h;
  }
};

std::int64_t ell_of(const IntervalMultiset& v) {
  std::int64_t l = 0;
  for (auto [b, e] : v) l = std::max(l, e - b + 1);
  return l;
}

std::vector<std::int64_t> sorted_ends(const IntervalMultiset& v, bool beginnings) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (auto [b, e] : v) out.push_back(beginnings ? b : e);
  std::sort(out.begin(), out.end());
  return out;
}

void interval_successors(const IntervalMultiset& v,
                         const std::function<void(IntervalMultiset&&)>& emit) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && v[i] == v[i - 1]) continue;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (j > i + 1 && v[j] == v[j - 1]) continue;
      auto [b1, e1] = v[i];
      auto [b2, e2] = v[j];
      // Sorted by begin, so b1 <= b2; linked iff b1 < b2, e1 < e2, b2 <= e1 + 1.
      if (!(b1 < b2 && e1 < e2 && b2 <= e1 + 1)) continue;
      IntervalMultiset next;
      next.reserve(v.size());
      for (std::size_t t = 0; t < v.size(); ++t)
        if (t != i && t != j) next.push_back(v[t]);
      next.emplace_back(b1, e2);
      if (b2 <= e1) next.emplace_back(b2, e1);
      std::sort(next.begin(), next.end());
      emit(std::move(next));
    }
  }
}

bool reachable(const IntervalMultiset& upper, const IntervalMultiset& lower) {
  if (upper == lower) return true;
  const std::int64_t ell_t = ell_of(lower);
  const std::size_t count_t = lower.size();
  const auto ends_t = sorted_ends(lower, false);
  const auto begins_t = sorted_ends(lower, true);

  auto viable = [&](const IntervalMultiset& v) {
    if (v.size() < count_t || ell_of(v) > ell_t) return false;
    auto ends = sorted_ends(v, false);
    if (!std::includes(ends.begin(), ends.end(), ends_t.begin(), ends_t.end())) return false;
    auto begins = sorted_ends(v, true);
    return std::includes(begins.begin(), begins.end(), begins_t.begin(), begins_t.end());
  };
  if (!viable(upper)) return false;

  std::unordered_set<IntervalMultiset, IntervalHash> seen{upper};
  std::deque<IntervalMultiset> queue{upper};
  bool found = false;
  while (!queue.empty() && !found) {
    IntervalMultiset cur = std::move(queue.front());
    queue.pop_front();
    interval_successors(cur, [&](IntervalMultiset&& next) {
      if (found) return;
      if (next == lower) {
        found = true;
        return;
      }
      if (!viable(next)) return;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    });
  }
  return found;
}

std::map<EffectiveLine, Multisegment> by_line(const Multisegment& m) {
  std::map<EffectiveLine, std::vector<Segment>> groups;
  for (const auto& s : m) groups[effective_line(s)].push_back(s);
  std::map<EffectiveLine, Multisegment> out;
  for (auto& [k, v] : groups) out.emplace(k, Multisegment(std::move(v)));
  return out;
}

}  // namespace

bool is_lower(const Multisegment& lower, const Multisegment& upper) {
  if (lower == upper) return true;
  if (lower.support() != upper.support()) return false;
  auto lo = by_line(lower);
  auto up = by_line(upper);
  if (lo.size() != up.size()) return false;
  for (const auto& [line, part] : up) {
    auto it = lo.find(line);
    if (it == lo.end()) return false;
    if (!reachable(to_intervals(part).intervals, to_intervals(it->second).intervals))
      return false;
  }
  return true;
}

bool is_lower_reference(const Multisegment& lower, const Multisegment& upper,
                        std::size_t node_limit) {
  if (lower == upper) return true;
  if (lower.support() != upper.support()) return false;
  std::set<Multisegment> seen{upper};
  std::deque<Multisegment> queue{upper};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (auto& next : elementary_successors(cur)) {
      if (next == lower) return true;
      if (seen.insert(next).second) {
        if (seen.size() > node_limit) throw DomainError("is_lower_reference: node limit exceeded");
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

MultisegStats stats(const Multisegment& m) {
  MultisegStats st;
  for (const auto& s : m) {
    st.endings.push_back({s.line, s.end()});
    st.ell = std::max(st.ell, s.len);
  }
  std::sort(st.endings.begin(), st.endings.end());
  st.support = m.support();
  return st;
}

std::vector<Multisegment> rigid_decomposition(const Multisegment& m) {
  std::vector<Multisegment> parts;
  for (auto& [line, part] : by_line(m)) parts.push_back(std::move(part));
  return parts;
}

Multisegment hermitian_dual(const LineRegistry& reg, const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m) out.push_back(Segment{reg.info(s.line).dual, -s.end(), s.len, s.step});
  return Multisegment(std::move(out));
}

bool is_hermitian(const LineRegistry& reg, const Multisegment& m) {
  return hermitian_dual(reg, m) == m;
}

namespace {

// All partitions of the index multiset `counts` (counts[i] = multiplicity of
// lo + i) into intervals.
void interval_partitions(std::vector<int>& counts, std::int64_t lo, IntervalMultiset& cur,
                         std::vector<IntervalMultiset>& out) {
  std::size_t first = 0;
  while (first < counts.size() && counts[first] == 0) ++first;
  if (first == counts.size()) {
    IntervalMultiset done = cur;
    std::sort(done.begin(), done.end());
    out.push_back(std::move(done));
    return;
  }
  // Segments starting at the same point are chosen with non-increasing ends.
  std::size_t max_end = counts.size() - 1;
  if (!cur.empty() && cur.back().first == lo + static_cast<std::int64_t>(first))
    max_end = static_cast<std::size_t>(cur.back().second - lo);
  for (std::size_t e = first; e <= max_end && counts[e] > 0; ++e) {
    for (std::size_t t = first; t <= e; ++t) --counts[t];
    cur.emplace_back(lo + first, lo + e);
    interval_partitions(counts, lo, cur, out);
    cur.pop_back();
    for (std::size_t t = first; t <= e; ++t) ++counts[t];
  }
}

std::vector<Multisegment> enumerate_with_steps(std::vector<CuspidalPoint> support,
                                               const std::function<int(LineId)>& step_of,
                                               std::size_t limit) {
  if (support.size() > limit)
    throw DomainError("support of size " + std::to_string(support.size()) +
                      " exceeds the enumeration limit " + std::to_string(limit));
  std::map<EffectiveLine, std::vector<std::int64_t>> groups;
  for (const auto& pt : support) {
    const int step = step_of(pt.line);
    EffectiveLine key{pt.line, step, floor_mod(pt.exp, Exponent(step))};
    Exponent idx = (pt.exp - key.offset) / Exponent(step);
    groups[key].push_back(idx.numerator());
  }

  std::vector<Multisegment> result{Multisegment{}};
  for (auto& [line, idx] : groups) {
    auto [mn, mx] = std::minmax_element(idx.begin(), idx.end());
    const std::int64_t lo = *mn;
    std::vector<int> counts(static_cast<std::size_t>(*mx - lo + 1), 0);
    for (auto i : idx) ++counts[static_cast<std::size_t>(i - lo)];
    std::vector<IntervalMultiset> parts;
    IntervalMultiset cur;
    interval_partitions(counts, lo, cur, parts);

    std::vector<Multisegment> next;
    next.reserve(result.size() * parts.size());
    for (const auto& prefix : result)
      for (const auto& p : parts) next.push_back(prefix + from_intervals(line, p));
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(const LineRegistry& reg,
                                                  std::vector<CuspidalPoint> support, int d,
                                                  std::size_t limit) {
  return enumerate_with_steps(
      std::move(support), [&](LineId id) { return reg.step(id, d); }, limit);
}

std::vector<Multisegment> enumerate_multisegments(std::vector<CuspidalPoint> support,
                                                  std::size_t limit) {
  return enumerate_with_steps(
      std::move(support), [](LineId) { return 1; }, limit);
}

}  // namespace jlcomb
