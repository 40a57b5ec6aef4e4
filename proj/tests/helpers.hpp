#pragma once

#include <initializer_list>
#include <utility>

#include "jlcomb/multiseg.hpp"

namespace jlcomb::testing {

inline Exponent q(std::int64_t n, std::int64_t d = 1) { return Exponent(n, d); }

inline LineRegistry one_line() {
  LineRegistry reg;
  reg.register_line("rho", 1, std::nullopt, true);
  return reg;
}

constexpr LineId kRho{0};

/// Split segment [a, b] on `line`.
inline Segment seg(Exponent a, Exponent b, LineId line = kRho) {
  return Segment{line, a, static_cast<int>((b - a).numerator()) + 1, 1};
}

/// Inner-form segment with `len` blocks of step s, first block centered at c.
inline Segment dseg(Exponent c, int len, int s, LineId line = kRho) {
  return Segment{line, c, len, s};
}

inline Multisegment ms(std::initializer_list<Segment> segs) { return Multisegment(std::vector<Segment>(segs)); }

}  // namespace jlcomb::testing
