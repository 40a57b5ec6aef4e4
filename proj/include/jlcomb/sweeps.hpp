#pragma once

#include <cstddef>
#include <vector>

#include "jlcomb/multiseg.hpp"

namespace jlcomb {

/// Multisegments on one line whose supports are the multisets of the points
/// 0..width-1 (spaced by step) with total multiplicity 1..max_total, grouped
/// by support.
std::vector<std::vector<Multisegment>> window_corpus(LineId line, int width, int max_total,
                                                     int step = 1);

/// Indices i in [0, n) for which ok(i) is false, in increasing order. The
/// parallel version splits the range over OpenMP threads; the serial one is
/// the reference it is tested against.
template <class Check>
std::vector<std::size_t> failing_indices(std::size_t n, const Check& ok) {
  std::vector<char> bad(n, 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    bad[static_cast<std::size_t>(i)] = ok(static_cast<std::size_t>(i)) ? 0 : 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (bad[i]) out.push_back(i);
  return out;
}

template <class Check>
std::vector<std::size_t> failing_indices_reference(std::size_t n, const Check& ok) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!ok(i)) out.push_back(i);
  return out;
}

/// mw_dual is an involution on m and preserves its support.
bool duality_roundtrip(const Multisegment& m);

/// Every elementary successor keeps the support, does not decrease ell and
/// has its endings inside those of m.
bool successor_properties(const Multisegment& m);

/// is_lower restricted to one support group is reflexive, antisymmetric and
/// transitive.
bool order_axioms(const std::vector<Multisegment>& group);

}  // namespace jlcomb
