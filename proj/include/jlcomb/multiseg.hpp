#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "jlcomb/core.hpp"

namespace jlcomb {

/// Arithmetic progression {start + j*step : 0 <= j < len} of exponents on one
/// line. step is 1 on the split side and s(rho') on the inner-form side, where
/// each element is an inner-form cuspidal stored by the exponent of its center.
struct Segment {
  LineId line;
  Exponent start;
  int len = 1;
  int step = 1;

  Exponent end() const { return start + Exponent((len - 1) * step); }
  Exponent center() const { return start + Exponent((len - 1) * step, 2); }
  Exponent offset() const { return floor_mod(start, Exponent(step)); }
  Segment shifted(const Exponent& t) const { return Segment{line, start + t, len, step}; }
  std::vector<CuspidalPoint> points() const;

  bool operator==(const Segment&) const = default;
};

// Canonical order: (line, step, offset class, start, len).
std::strong_ordering operator<=>(const Segment& a, const Segment& b);

/// The line of a segment together with its offset class modulo the step.
struct EffectiveLine {
  LineId line;
  int step = 1;
  Exponent offset;

  std::strong_ordering operator<=>(const EffectiveLine& o) const;
  bool operator==(const EffectiveLine&) const = default;
};

EffectiveLine effective_line(const Segment& s);

/// Multiset of segments, kept sorted in canonical order.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t size() const { return segs_.size(); }
  auto begin() const { return segs_.begin(); }
  auto end() const { return segs_.end(); }

  /// Multiset union.
  Multisegment operator+(const Multisegment& o) const;
  Multisegment shifted(const Exponent& t) const;
  /// Union with repetitions of all segment elements, sorted.
  std::vector<CuspidalPoint> support() const;
  std::size_t support_size() const;
  /// True when every segment of `sub` occurs in *this with at least its multiplicity.
  bool contains(const Multisegment& sub) const;
  /// Multiset difference; requires contains(sub).
  Multisegment minus(const Multisegment& sub) const;

  friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b);
  friend bool operator==(const Multisegment& a, const Multisegment& b) = default;

 private:
  std::vector<Segment> segs_;
};

struct SegmentHash {
  std::size_t operator()(const Segment& s) const noexcept;
};
struct MultisegmentHash {
  std::size_t operator()(const Multisegment& m) const noexcept;
};

enum class SegmentRelation { equal, unlinked, linked_adjacent, linked_overlapping };

SegmentRelation segment_relation(const Segment& s1, const Segment& s2);
inline bool linked(const Segment& a, const Segment& b) {
  auto r = segment_relation(a, b);
  return r == SegmentRelation::linked_adjacent || r == SegmentRelation::linked_overlapping;
}

/// All multisegments obtained from m by one elementary operation, canonical and
/// de-duplicated.
std::vector<Multisegment> elementary_successors(const Multisegment& m);

/// True iff `lower` is reachable from `upper` by zero or more elementary
/// operations. Searches each effective line separately with pruning by the
/// maximal length, the number of segments and the multiset of endings.
bool is_lower(const Multisegment& lower, const Multisegment& upper);

/// Unpruned breadth-first search over whole multisegments. Kept as the
/// reference the pruned search is tested against.
bool is_lower_reference(const Multisegment& lower, const Multisegment& upper,
                        std::size_t node_limit = 2'000'000);

struct MultisegStats {
  std::vector<CuspidalPoint> endings;
  int ell = 0;
  std::vector<CuspidalPoint> support;
};

MultisegStats stats(const Multisegment& m);

/// Groups segments by effective line, in canonical order of the lines.
std::vector<Multisegment> rigid_decomposition(const Multisegment& m);

Multisegment hermitian_dual(const LineRegistry& reg, const Multisegment& m);
bool is_hermitian(const LineRegistry& reg, const Multisegment& m);

/// Every partition of `support` into segments. Steps come from the registry
/// for inner-form index d (d = 1 gives the split side).
std::vector<Multisegment> enumerate_multisegments(const LineRegistry& reg,
                                                  std::vector<CuspidalPoint> support, int d = 1,
                                                  std::size_t limit = 10);
/// Split side, step 1 on every line.
std::vector<Multisegment> enumerate_multisegments(std::vector<CuspidalPoint> support,
                                                  std::size_t limit = 10);

// Integer model of a rigid multisegment: closed index intervals [begin, end]
// on one effective line, sorted.
using Interval = std::pair<std::int64_t, std::int64_t>;
using IntervalMultiset = std::vector<Interval>;

struct RigidPart {
  EffectiveLine line;
  IntervalMultiset intervals;
};

/// Requires all segments of m on one effective line (m may be empty only if
/// `line` is supplied by the caller through from_intervals).
RigidPart to_intervals(const Multisegment& m);
Multisegment from_intervals(const EffectiveLine& line, const IntervalMultiset& iv);

}  // namespace jlcomb
