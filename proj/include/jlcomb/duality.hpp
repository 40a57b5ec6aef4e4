#pragma once

#include "jlcomb/gkring.hpp"

namespace jlcomb {

/// Dual of a rigid multisegment by the Moeglin-Waldspurger algorithm.
/// Throws DomainError when m spans more than one effective line.
Multisegment mw_dual(const Multisegment& m);

/// Same algorithm on integer intervals.
IntervalMultiset mw_dual_intervals(IntervalMultiset m);

/// mw_dual applied to each rigid part.
Multisegment dual_irr(const Multisegment& m);

/// Linear cut-expansion on the standard lattice: a segment of length n maps to
/// the signed sum over its cuts into r consecutive pieces, sign (-1)^(n-r).
VirtualRep raw_dual_std(const VirtualRep& x);

}  // namespace jlcomb
