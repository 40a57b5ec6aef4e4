#include "jlcomb/duality.hpp"

#include <algorithm>

namespace jlcomb {

IntervalMultiset mw_dual_intervals(IntervalMultiset m) {
  IntervalMultiset out;
  while (!m.empty()) {
    // Shortest segment with the maximal ending: largest begin among those.
    auto pick = [&](auto accept) {
      std::ptrdiff_t best = -1;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!accept(i)) continue;
        if (best < 0 || m[i].first > m[static_cast<std::size_t>(best)].first)
          best = static_cast<std::ptrdiff_t>(i);
      }
      return best;
    };
    std::int64_t top = m.front().second;
    for (const auto& iv : m) top = std::max(top, iv.second);

    std::vector<std::size_t> chain;
    std::vector<bool> used(m.size(), false);
    std::ptrdiff_t cur = pick([&](std::size_t i) { return m[i].second == top; });
    while (cur >= 0) {
      chain.push_back(static_cast<std::size_t>(cur));
      used[static_cast<std::size_t>(cur)] = true;
      const Interval prev = m[static_cast<std::size_t>(cur)];
      cur = pick([&](std::size_t i) {
        return !used[i] && m[i].second == prev.second - 1 && m[i].first < prev.first;
      });
    }
    const std::int64_t low = top - static_cast<std::int64_t>(chain.size()) + 1;
    out.emplace_back(low, top);

    IntervalMultiset next;
    next.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!used[i]) {
        next.push_back(m[i]);
      } else if (m[i].first < m[i].second) {
        next.emplace_back(m[i].first, m[i].second - 1);
      }
    }
    m = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Multisegment mw_dual(const Multisegment& m) {
  if (m.empty()) return m;
  RigidPart part = to_intervals(m);
  return from_intervals(part.line, mw_dual_intervals(std::move(part.intervals)));
}

Multisegment dual_irr(const Multisegment& m) {
  Multisegment out;
  for (const auto& part : rigid_decomposition(m)) out = out + mw_dual(part);
  return out;
}

namespace {

VirtualRep cut_expansion(const Segment& seg, int d) {
  VirtualRep out(d);
  const int n = seg.len;
  // Bit j set means a cut after position j.
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Segment> pieces;
    int begin = 0;
    for (int j = 0; j < n; ++j) {
      if (j == n - 1 || (mask >> j) & 1u) {
        pieces.push_back(Segment{seg.line, seg.start + Exponent(begin * seg.step), j - begin + 1, seg.step});
        begin = j + 1;
      }
    }
    const int r = static_cast<int>(pieces.size());
    out.add(Multisegment(std::move(pieces)), (n - r) % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace

VirtualRep raw_dual_std(const VirtualRep& x) {
  VirtualRep out(x.d());
  for (const auto& [m, c] : x.terms()) {
    VirtualRep term = VirtualRep::basis(Multisegment{}, x.d());
    for (const auto& seg : m) term = product(term, cut_expansion(seg, x.d()));
    out += term.scaled(c);
  }
  return out;
}

}  // namespace jlcomb
