#include "jlcomb/sweeps.hpp"

#include <algorithm>

#include "jlcomb/duality.hpp"

namespace jlcomb {

std::vector<std::vector<Multisegment>> window_corpus(LineId line, int width, int max_total,
                                                     int step) {
  std::vector<std::vector<Multisegment>> groups;
  std::vector<int> mult(static_cast<std::size_t>(width), 0);
  // Odometer over multiplicity vectors with bounded total.
  while (true) {
    std::size_t pos = 0;
    while (pos < mult.size()) {
      ++mult[pos];
      int total = 0;
      for (int c : mult) total += c;
      if (total <= max_total) break;
      mult[pos] = 0;
      ++pos;
    }
    if (pos == mult.size()) break;
    std::vector<CuspidalPoint> support;
    for (int i = 0; i < width; ++i)
      for (int c = 0; c < mult[static_cast<std::size_t>(i)]; ++c)
        support.push_back({line, Exponent(i * step)});
    std::vector<Multisegment> group = enumerate_multisegments(support, support.size());
    if (step != 1)
      for (auto& m : group) {
        std::vector<Segment> segs;
        for (const auto& s : m) segs.push_back(Segment{s.line, s.start * Exponent(step), s.len, step});
        m = Multisegment(std::move(segs));
      }
    groups.push_back(std::move(group));
  }
  return groups;
}

bool duality_roundtrip(const Multisegment& m) {
  const Multisegment dual = mw_dual(m);
  return mw_dual(dual) == m && dual.support() == m.support();
}

bool successor_properties(const Multisegment& m) {
  const MultisegStats st = stats(m);
  for (const auto& next : elementary_successors(m)) {
    const MultisegStats sn = stats(next);
    if (sn.support != st.support || sn.ell < st.ell) return false;
    if (!std::includes(st.endings.begin(), st.endings.end(), sn.endings.begin(), sn.endings.end()))
      return false;
  }
  return true;
}

bool order_axioms(const std::vector<Multisegment>& group) {
  const std::size_t n = group.size();
  std::vector<char> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = is_lower(group[i], group[j]) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!r[i * n + i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r[i * n + j] && r[j * n + i]) return false;
      if (!r[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (r[j * n + k] && !r[i * n + k]) return false;
    }
  }
  return true;
}

}  // namespace jlcomb
